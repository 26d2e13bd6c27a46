#include "zlab/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>

namespace zlab {

namespace {
constexpr std::size_t kTableThreshold = 4096;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

int GroupTable::element_order(int e) const {
  int x = e, n = 1;
  while (x != identity) {
    x = product(x, e);
    ++n;
  }
  return n;
}

int GroupTable::exponent() const {
  int ex = 1;
  for (int e = 0; e < order; ++e) ex = std::lcm(ex, element_order(e));
  return ex;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> z;
  for (int a = 0; a < order; ++a) {
    bool central = true;
    for (int b = 0; b < order && central; ++b)
      if (product(a, b) != product(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> subgroup_generated(const GroupTable& T, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<std::size_t>(T.order), 0);
  std::deque<int> queue;
  auto add = [&](int e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = 1;
      queue.push_back(e);
    }
  };
  add(T.identity);
  std::vector<int> gens;
  for (int s : seeds) {
    gens.push_back(s);
    gens.push_back(T.inverse[static_cast<std::size_t>(s)]);
  }
  for (int g : gens) add(g);
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g : gens) add(T.product(e, g));
  }
  std::vector<int> out;
  for (int e = 0; e < T.order; ++e)
    if (in[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

std::size_t Quotient::default_budget() {
  if (const char* env = std::getenv("ZLAB_BUDGET_ELEMS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t(1) << 20;
}

Quotient Quotient::build(std::uint32_t alphabet, std::uint32_t p, std::uint32_t m,
                         std::size_t budget) {
  if (alphabet < 1) throw parameter_error("build_quotient: alphabet size must be >= 1");
  if (!is_prime(p)) throw parameter_error("build_quotient: p must be prime");
  if (m < 2) throw parameter_error("build_quotient: level m must be >= 2");

  Quotient Q;
  Q.k_ = alphabet;
  Q.p_ = p;
  Q.m_ = m;
  const std::uint32_t D = m - 1;

  std::vector<TruncatedSeries> gen_units;
  for (std::uint32_t a = 0; a < alphabet; ++a)
    gen_units.push_back(TruncatedSeries::generator_unit(p, alphabet, D, a));

  auto push = [&](TruncatedSeries s, const GroupWord& w, int par, int gen) -> int {
    auto [it, fresh] = Q.index_.emplace(s.key(), static_cast<int>(Q.elems_.size()));
    if (!fresh) return it->second;
    if (Q.elems_.size() >= budget) {
      Q.index_.erase(it);
      throw resource_error("build_quotient: element budget exhausted", Q.elems_.size());
    }
    Q.vdeg_.push_back(s.v_degree());
    Q.elems_.push_back(std::move(s));
    Q.witness_.push_back(w);
    Q.parent_.emplace_back(par, gen);
    return static_cast<int>(Q.elems_.size()) - 1;
  };

  push(TruncatedSeries::one(p, alphabet, D), GroupWord{}, -1, -1);
  for (std::uint32_t a = 0; a < alphabet; ++a)
    Q.gens_.push_back(push(gen_units[a], GroupWord::generator(a), 0, static_cast<int>(a)));

  for (std::size_t head = 0; head < Q.elems_.size(); ++head) {
    for (std::uint32_t a = 0; a < alphabet; ++a) {
      TruncatedSeries s = Q.elems_[head] * gen_units[a];
      GroupWord w = Q.witness_[head] * GroupWord::generator(a);
      push(std::move(s), w, static_cast<int>(head), static_cast<int>(a));
    }
  }

  Q.finish_build();
  return Q;
}

void Quotient::finish_build() {
  const int n = order();
  inv_.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) inv_[static_cast<std::size_t>(e)] = lookup(elems_[static_cast<std::size_t>(e)].inverse());

  table_.order = n;
  table_.identity = 0;
  table_.generators = gens_;
  table_.inverse = inv_;
  table_.witnesses = witness_;
  if (static_cast<std::size_t>(n) <= kTableThreshold) {
    table_.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table_.mul[static_cast<std::size_t>(a) * n + b] =
            lookup(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
    spot_check_associativity(10000, 0x5eed);
  }
}

int Quotient::lookup(const TruncatedSeries& s) const {
  auto it = index_.find(s.key());
  if (it == index_.end())
    throw value_error("quotient: series is not an element of the closure");
  return it->second;
}

int Quotient::product(int a, int b) const {
  if (!table_.mul.empty()) return table_.product(a, b);
  return lookup(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
}

int Quotient::inverse_of(int e) const { return inv_[static_cast<std::size_t>(e)]; }

int Quotient::evaluate(const GroupWord& g) const {
  if (g.min_alphabet() > k_)
    throw parameter_error("evaluate: generator index out of range");
  return lookup(magnus(g, p_, k_, m_ - 1));
}

std::vector<int> Quotient::filtration_image(std::uint32_t n) const {
  if (n < 1 || n > m_) throw parameter_error("filtration_image: level out of range");
  std::vector<int> out;
  for (int e = 0; e < order(); ++e)
    if (vdeg_[static_cast<std::size_t>(e)] >= n) out.push_back(e);
  return out;
}

const GroupTable& Quotient::table() const {
  if (table_.mul.empty())
    throw resource_error("quotient order exceeds the dense-table threshold",
                         static_cast<std::size_t>(order()));
  return table_;
}

int Quotient::project_to(const Quotient& coarser, int e) const {
  if (coarser.k_ != k_ || coarser.p_ != p_ || coarser.m_ > m_)
    throw parameter_error("project_to: incompatible quotients");
  return coarser.lookup(elems_[static_cast<std::size_t>(e)].truncate(coarser.m_ - 1));
}

void Quotient::spot_check_associativity(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, order() - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (product(product(a, b), c) != product(a, product(b, c)))
      throw value_error("quotient multiplication failed an associativity spot check");
  }
}

std::vector<int> subgroup_generated(const Quotient& Q, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<std::size_t>(Q.order()), 0);
  std::deque<int> queue;
  auto add = [&](int e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = 1;
      queue.push_back(e);
    }
  };
  add(Q.identity());
  std::vector<int> gens;
  for (int s : seeds) {
    gens.push_back(s);
    gens.push_back(Q.inverse_of(s));
  }
  for (int g : gens) add(g);
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g : gens) add(Q.product(e, g));
  }
  std::vector<int> out;
  for (int e = 0; e < Q.order(); ++e)
    if (in[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

std::vector<int> zassenhaus_term_of_table(const GroupTable& T, std::uint32_t p,
                                          std::uint32_t n) {
  if (n < 1) throw parameter_error("zassenhaus_term_of_table: n must be >= 1");
  std::vector<std::vector<int>> terms(n + 1);
  terms[1].resize(static_cast<std::size_t>(T.order));
  for (int e = 0; e < T.order; ++e) terms[1][static_cast<std::size_t>(e)] = e;
  for (std::uint32_t lvl = 2; lvl <= n; ++lvl) {
    std::vector<int> seeds;
    for (int x : terms[(lvl + p - 1) / p]) {
      int y = x;
      for (std::uint32_t i = 1; i < p; ++i) y = T.product(y, x);
      seeds.push_back(y);
    }
    for (std::uint32_t i = 1; i < lvl; ++i) {
      std::uint32_t j = lvl - i;
      if (j < 1 || j >= lvl) continue;
      for (int x : terms[i])
        for (int y : terms[j]) {
          int c = T.product(T.product(T.inverse[static_cast<std::size_t>(x)],
                                      T.inverse[static_cast<std::size_t>(y)]),
                            T.product(x, y));
          seeds.push_back(c);
        }
    }
    terms[lvl] = subgroup_generated(T, seeds);
  }
  return terms[n];
}

}  // namespace zlab
