#include "zlab/cohomology.hpp"

#include <algorithm>

namespace zlab {

namespace {

void check_base(const Cochain1& a, const Cochain1& b) {
  if (a.G != b.G || a.p != b.p)
    throw parameter_error("cochain operands live on different base groups");
}

void check_base2(const Cochain2& a, const Cochain2& b) {
  if (a.G != b.G || a.p != b.p)
    throw parameter_error("cochain operands live on different base groups");
}

}  // namespace

Cochain1 zero_cochain1(const GroupTable& G, std::uint32_t p) {
  return Cochain1{&G, p, std::vector<std::uint32_t>(static_cast<std::size_t>(G.order), 0)};
}

Cochain2 zero_cochain2(const GroupTable& G, std::uint32_t p) {
  return Cochain2{&G, p,
                  std::vector<std::uint32_t>(
                      static_cast<std::size_t>(G.order) * static_cast<std::size_t>(G.order), 0)};
}

Cochain1 operator+(const Cochain1& a, const Cochain1& b) {
  check_base(a, b);
  Cochain1 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = (a.v[i] + b.v[i]) % a.p;
  return r;
}

Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
  check_base2(a, b);
  Cochain2 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = (a.v[i] + b.v[i]) % a.p;
  return r;
}

Cochain2 operator-(const Cochain2& a, const Cochain2& b) {
  check_base2(a, b);
  Cochain2 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = (a.v[i] + a.p - b.v[i]) % a.p;
  return r;
}

Cochain2 negate(const Cochain2& a) {
  Cochain2 r = a;
  for (auto& x : r.v) x = (a.p - x) % a.p;
  return r;
}

Cochain2 d1(const Cochain1& c) {
  const GroupTable& G = *c.G;
  Cochain2 f = zero_cochain2(G, c.p);
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t)
      f.v[static_cast<std::size_t>(s) * G.order + t] =
          (c(s) + c(t) + (c.p - c(G.product(s, t)))) % c.p;
  return f;
}

bool is_cocycle1(const Cochain1& c) {
  const GroupTable& G = *c.G;
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t)
      if ((c(s) + c(t)) % c.p != c(G.product(s, t))) return false;
  return true;
}

bool is_cocycle2(const Cochain2& f) {
  const GroupTable& G = *f.G;
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t) {
      int st = G.product(s, t);
      for (int r = 0; r < G.order; ++r)
        if ((f(t, r) + f(s, G.product(t, r))) % f.p != (f(st, r) + f(s, t)) % f.p)
          return false;
    }
  return true;
}

Cochain2 cup(const Cochain1& c, const Cochain1& d) {
  check_base(c, d);
  const GroupTable& G = *c.G;
  Cochain2 f = zero_cochain2(G, c.p);
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t)
      f.v[static_cast<std::size_t>(s) * G.order + t] = c(s) * d(t) % c.p;
  return f;
}

PrimeFieldMatrix coboundary_operator(const GroupTable& G, std::uint32_t p) {
  const std::size_t n = static_cast<std::size_t>(G.order);
  PrimeFieldMatrix M(n * n, n, p);
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t) {
      std::size_t row = static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t);
      M.add_at(row, static_cast<std::size_t>(s), 1);
      M.add_at(row, static_cast<std::size_t>(t), 1);
      M.add_at(row, static_cast<std::size_t>(G.product(s, t)), -1);
    }
  return M;
}

std::optional<Cochain1> coboundary_witness(const Cochain2& f) {
  PrimeFieldMatrix M = coboundary_operator(*f.G, f.p);
  auto x = M.solve(f.v);
  if (!x) return std::nullopt;
  return Cochain1{f.G, f.p, std::move(*x)};
}

std::optional<Cochain1> cohomologous(const Cochain2& f, const Cochain2& g) {
  check_base2(f, g);
  if (!is_cocycle2(f) || !is_cocycle2(g))
    throw value_error("cohomologous: inputs must be 2-cocycles");
  return coboundary_witness(f - g);
}

std::vector<Cochain1> character_basis(const GroupTable& G, std::uint32_t p) {
  PrimeFieldMatrix M = coboundary_operator(G, p);
  std::vector<Cochain1> out;
  for (auto& x : M.nullspace()) out.push_back(Cochain1{&G, p, std::move(x)});
  return out;
}

RowBasis coboundary_basis(const GroupTable& G, std::uint32_t p) {
  RowBasis span(static_cast<std::size_t>(G.order) * static_cast<std::size_t>(G.order), p);
  Cochain1 delta = zero_cochain1(G, p);
  for (int e = 0; e < G.order; ++e) {
    delta.v.assign(delta.v.size(), 0);
    delta.v[static_cast<std::size_t>(e)] = 1;
    span.insert(d1(delta).v);
  }
  return span;
}

std::vector<std::vector<std::uint32_t>> cocycle_basis(const GroupTable& G, std::uint32_t p) {
  // nullspace of the |G|^3 x |G|^2 cocycle-identity operator
  const std::size_t n = static_cast<std::size_t>(G.order);
  PrimeFieldMatrix M(n * n * n, n * n, p);
  for (int s = 0; s < G.order; ++s)
    for (int t = 0; t < G.order; ++t) {
      int st = G.product(s, t);
      for (int r = 0; r < G.order; ++r) {
        std::size_t row = (static_cast<std::size_t>(s) * n + t) * n + r;
        int tr = G.product(t, r);
        M.add_at(row, static_cast<std::size_t>(t) * n + r, 1);
        M.add_at(row, static_cast<std::size_t>(s) * n + tr, 1);
        M.add_at(row, static_cast<std::size_t>(st) * n + r, -1);
        M.add_at(row, static_cast<std::size_t>(s) * n + t, -1);
      }
    }
  return M.nullspace();
}

std::size_t h2_dimension(const GroupTable& G, std::uint32_t p) {
  return cocycle_basis(G, p).size() - coboundary_basis(G, p).rank();
}

DefiningSystem DefiningSystem::empty(const GroupTable& G, std::uint32_t p, int n) {
  if (n < 2) throw parameter_error("DefiningSystem: size must be >= 2");
  DefiningSystem ds;
  ds.G = &G;
  ds.p = p;
  ds.n = n;
  ds.c.assign(static_cast<std::size_t>(n) + 1,
              std::vector<Cochain1>(static_cast<std::size_t>(n) + 1));
  return ds;
}

Cochain2 c_tilde(const DefiningSystem& ds, int i, int j) {
  const GroupTable& G = *ds.G;
  Cochain2 f = zero_cochain2(G, ds.p);
  for (int r = i; r < j; ++r) {
    const Cochain1& left = ds.at(i, r);
    const Cochain1& right = ds.at(r + 1, j);
    if (left.v.empty() || right.v.empty())
      throw parameter_error("c_tilde: missing defining-system entries");
    for (int s = 0; s < G.order; ++s)
      for (int t = 0; t < G.order; ++t) {
        auto& slot = f.v[static_cast<std::size_t>(s) * G.order + t];
        slot = (slot + ds.p - left(s) * right(t) % ds.p) % ds.p;
      }
  }
  return f;
}

bool is_defining_system(const DefiningSystem& ds) {
  for (int i = 1; i <= ds.n; ++i)
    for (int j = i; j <= ds.n; ++j) {
      if (i == 1 && j == ds.n) continue;
      if (!ds.has(i, j)) return false;
      if (!(d1(ds.at(i, j)) == c_tilde(ds, i, j))) return false;
    }
  return true;
}

std::vector<PuncturedUnipotent> ds_to_matrix_map(const DefiningSystem& ds) {
  const GroupTable& G = *ds.G;
  const std::uint32_t dim = static_cast<std::uint32_t>(ds.n) + 1;
  std::vector<PuncturedUnipotent> out(static_cast<std::size_t>(G.order),
                                      PuncturedUnipotent(dim, ds.p));
  for (int e = 0; e < G.order; ++e)
    for (std::uint32_t i = 0; i + 1 < dim; ++i)
      for (std::uint32_t j = i + 1; j < dim; ++j) {
        if (i == 0 && j == dim - 1) continue;
        // matrix entry (i,j) carries (-1)^(j-i) c_{i+1, j}
        const Cochain1& c = ds.at(static_cast<int>(i) + 1, static_cast<int>(j));
        if (c.v.empty()) throw parameter_error("ds_to_matrix_map: missing entry");
        std::uint32_t v = c(e);
        if ((j - i) % 2 == 1) v = (ds.p - v) % ds.p;
        out[static_cast<std::size_t>(e)].set(i, j, v);
      }
  return out;
}

DefiningSystem matrix_map_to_ds(const std::vector<PuncturedUnipotent>& gamma_bar,
                                const GroupTable& G, std::uint32_t p) {
  if (gamma_bar.empty() || static_cast<int>(gamma_bar.size()) != G.order)
    throw parameter_error("matrix_map_to_ds: one matrix per group element required");
  const std::uint32_t dim = gamma_bar[0].dim();
  DefiningSystem ds = DefiningSystem::empty(G, p, static_cast<int>(dim) - 1);
  for (int i = 1; i <= ds.n; ++i)
    for (int j = i; j <= ds.n; ++j) {
      if (i == 1 && j == ds.n) continue;
      Cochain1 c = zero_cochain1(G, p);
      // c_{ij} = (-1)^(j-i+1) * entry (i-1, j) of the matrices
      for (int e = 0; e < G.order; ++e) {
        std::uint32_t v = gamma_bar[static_cast<std::size_t>(e)].at(
            static_cast<std::uint32_t>(i) - 1, static_cast<std::uint32_t>(j));
        if ((j - i + 1) % 2 == 1) v = (p - v) % p;
        c.v[static_cast<std::size_t>(e)] = v;
      }
      ds.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(c);
    }
  return ds;
}

DefiningSystem complete_defining_system(const GroupTable& G, std::uint32_t p,
                                        const std::vector<Cochain1>& diagonal,
                                        std::mt19937_64& rng, bool randomize) {
  const int n = static_cast<int>(diagonal.size());
  if (n < 2) throw parameter_error("complete_defining_system: need at least 2 characters");
  for (const auto& c : diagonal)
    if (!is_cocycle1(c))
      throw value_error("complete_defining_system: diagonal entries must be homomorphisms");

  DefiningSystem ds = DefiningSystem::empty(G, p, n);
  for (int i = 1; i <= n; ++i)
    ds.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        diagonal[static_cast<std::size_t>(i) - 1];

  PrimeFieldMatrix M = coboundary_operator(G, p);
  std::vector<Cochain1> chars = character_basis(G, p);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);

  for (int gap = 1; gap < n; ++gap)
    for (int i = 1; i + gap <= n; ++i) {
      int j = i + gap;
      if (i == 1 && j == n) continue;
      Cochain2 rhs = c_tilde(ds, i, j);
      auto x = M.solve(rhs.v);
      if (!x)
        throw value_error("complete_defining_system: obstruction class does not vanish");
      Cochain1 entry{&G, p, std::move(*x)};
      if (randomize)
        for (const auto& chi : chars) {
          std::uint32_t c = coeff(rng);
          for (std::size_t e = 0; e < entry.v.size(); ++e)
            entry.v[e] = (entry.v[e] + c * chi.v[e]) % p;
        }
      ds.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(entry);
    }
  return ds;
}

Cochain1 generator_character(const Quotient& Q, std::uint32_t a) {
  if (a >= Q.alphabet()) throw parameter_error("generator_character: index out of range");
  const GroupTable& G = Q.table();
  Cochain1 c = zero_cochain1(G, Q.prime());
  for (int e = 0; e < Q.order(); ++e)
    c.v[static_cast<std::size_t>(e)] = Q.series(e).coeff(Word{static_cast<std::uint8_t>(a)});
  return c;
}

Cochain2 massey_representative(const Quotient& Q, const std::vector<Cochain1>& chars) {
  const int n = static_cast<int>(chars.size());
  if (n < 2) throw parameter_error("massey: need at least 2 characters");
  if (Q.level() < static_cast<std::uint32_t>(n))
    throw parameter_error("massey: quotient level must be >= the product length");
  const GroupTable& G = Q.table();
  const std::uint32_t p = Q.prime();
  for (const auto& c : chars) {
    if (c.G != &G || c.p != p) throw parameter_error("massey: characters on wrong base");
    if (!is_cocycle1(c)) throw value_error("massey: characters must be homomorphisms");
  }

  // Push the characters through the auxiliary free group on n generators:
  // a |-> prod_i b_i^{chars_i(a)}, then apply the signed ladder map of
  // (b_1..b_n) and forget the corner.
  std::vector<GroupWord> phi(Q.alphabet());
  for (std::uint32_t a = 0; a < Q.alphabet(); ++a) {
    GroupWord img;
    for (int i = 0; i < n; ++i) {
      std::uint32_t e = chars[static_cast<std::size_t>(i)](Q.generator_elems()[a]);
      img = img * GroupWord::generator(static_cast<std::uint32_t>(i)).pow(e);
    }
    phi[a] = img;
  }

  Word ladder(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ladder[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);

  std::vector<PuncturedUnipotent> gamma_bar;
  gamma_bar.reserve(static_cast<std::size_t>(Q.order()));
  for (int e = 0; e < Q.order(); ++e)
    gamma_bar.push_back(forget_corner(gamma2(ladder, substitute(Q.witness(e), phi), p)));

  DefiningSystem ds = matrix_map_to_ds(gamma_bar, G, p);
  if (!is_defining_system(ds))
    throw value_error("massey: constructed system failed validation");
  return c_tilde(ds, 1, n);
}

Cochain2 psi_w(const Quotient& Q, const Word& w) {
  std::vector<Cochain1> chars;
  for (std::uint8_t a : w) chars.push_back(generator_character(Q, a));
  return massey_representative(Q, chars);
}

Cochain2 psi_w_direct(const Quotient& Q, const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) throw parameter_error("psi_w_direct: need |w| >= 2");
  if (Q.level() < static_cast<std::uint32_t>(n))
    throw parameter_error("psi_w_direct: quotient level must be >= |w|");
  const GroupTable& G = Q.table();
  const std::uint32_t p = Q.prime();
  std::vector<PuncturedUnipotent> gamma_bar;
  gamma_bar.reserve(static_cast<std::size_t>(Q.order()));
  for (int e = 0; e < Q.order(); ++e)
    gamma_bar.push_back(forget_corner(gamma2(w, Q.witness(e), p)));
  DefiningSystem ds = matrix_map_to_ds(gamma_bar, G, p);
  if (!is_defining_system(ds))
    throw value_error("psi_w_direct: ladder system failed validation");
  return c_tilde(ds, 1, n);
}

GroupTable central_extension(const GroupTable& G, const Cochain2& f) {
  if (f.G != &G) throw parameter_error("central_extension: cocycle on wrong base");
  if (!is_cocycle2(f)) throw value_error("central_extension: f is not a 2-cocycle");
  const std::uint32_t m = f.p;
  const int order = static_cast<int>(m) * G.order;

  GroupTable B;
  B.order = order;
  B.mul.assign(static_cast<std::size_t>(order) * order, 0);
  B.inverse.assign(static_cast<std::size_t>(order), 0);
  auto id_of = [&](std::uint32_t r, int g) { return static_cast<int>(r) * G.order + g; };

  for (std::uint32_t r = 0; r < m; ++r)
    for (int g = 0; g < G.order; ++g)
      for (std::uint32_t s = 0; s < m; ++s)
        for (int h = 0; h < G.order; ++h)
          B.mul[static_cast<std::size_t>(id_of(r, g)) * order + id_of(s, h)] =
              id_of((r + s + f(g, h)) % m, G.product(g, h));

  const std::uint32_t f11 = f(G.identity, G.identity);
  B.identity = id_of((m - f11 % m) % m, G.identity);
  for (std::uint32_t r = 0; r < m; ++r)
    for (int g = 0; g < G.order; ++g) {
      int ginv = G.inverse[static_cast<std::size_t>(g)];
      std::uint32_t s = (3 * m - f11 % m - r - f(g, ginv) % m) % m;
      B.inverse[static_cast<std::size_t>(id_of(r, g))] = id_of(s, ginv);
    }
  return B;
}

std::uint32_t pairing_value(const GroupWord& sigma, const Cochain2& beta,
                            const Quotient& Qn, const Quotient& Qn1) {
  if (Qn1.alphabet() != Qn.alphabet() || Qn1.prime() != Qn.prime() ||
      Qn1.level() != Qn.level() + 1)
    throw parameter_error("pairing_value: quotients must be consecutive levels");
  if (Qn.level() < 2)
    throw parameter_error("pairing_value: defined for filtration level n >= 2");
  if (beta.G != &Qn.table())
    throw parameter_error("pairing_value: class must live on the coarser quotient");
  if (!is_cocycle2(beta)) throw value_error("pairing_value: beta is not a 2-cocycle");
  if (Qn.evaluate(sigma) != Qn.identity())
    throw value_error("pairing_value: sigma is not in the level-n filtration subgroup");

  const GroupTable& G1 = Qn1.table();
  Cochain2 inflated = zero_cochain2(G1, beta.p);
  std::vector<int> proj(static_cast<std::size_t>(Qn1.order()));
  for (int e = 0; e < Qn1.order(); ++e) proj[static_cast<std::size_t>(e)] = Qn1.project_to(Qn, e);
  for (int s = 0; s < Qn1.order(); ++s)
    for (int t = 0; t < Qn1.order(); ++t)
      inflated.v[static_cast<std::size_t>(s) * Qn1.order() + t] =
          beta(proj[static_cast<std::size_t>(s)], proj[static_cast<std::size_t>(t)]);

  auto x = coboundary_witness(inflated);
  if (!x) throw value_error("pairing_value: class does not vanish at level n+1");
  int e = Qn1.evaluate(sigma);
  return ((*x)(e) + beta.p - (*x)(Qn1.identity())) % beta.p;
}

}  // namespace zlab
