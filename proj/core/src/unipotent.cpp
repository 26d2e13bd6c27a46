#include "zlab/unipotent.hpp"

#include <algorithm>
#include <thread>

namespace zlab {

Unipotent::Unipotent(std::uint32_t dim, std::uint32_t modulus) : n_(dim), mod_(modulus) {
  if (dim < 1) throw parameter_error("Unipotent: dimension must be >= 1");
  if (modulus < 2) throw parameter_error("Unipotent: modulus must be >= 2");
  a_.assign(entry_count(dim), 0);
}

std::size_t Unipotent::idx(std::uint32_t i, std::uint32_t j) const {
  // row-major over the strict upper triangle
  return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

std::uint32_t Unipotent::at(std::uint32_t i, std::uint32_t j) const {
  if (i >= j || j >= n_) throw parameter_error("Unipotent::at: not a strict upper entry");
  return a_[idx(i, j)];
}

void Unipotent::set(std::uint32_t i, std::uint32_t j, std::uint32_t v) {
  if (i >= j || j >= n_) throw parameter_error("Unipotent::set: not a strict upper entry");
  a_[idx(i, j)] = v % mod_;
}

std::uint64_t Unipotent::group_order(std::uint32_t dim, std::uint32_t modulus) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < entry_count(dim); ++i) r *= modulus;
  return r;
}

Unipotent Unipotent::from_rank(std::uint32_t dim, std::uint32_t modulus, std::uint64_t rank) {
  Unipotent x(dim, modulus);
  for (auto& v : x.a_) {
    v = static_cast<std::uint32_t>(rank % modulus);
    rank /= modulus;
  }
  return x;
}

bool Unipotent::is_identity() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

Unipotent operator*(const Unipotent& x, const Unipotent& y) {
  if (x.n_ != y.n_ || x.mod_ != y.mod_)
    throw parameter_error("Unipotent product: mismatched dimension or modulus");
  Unipotent r(x.n_, x.mod_);
  const std::uint64_t m = x.mod_;
  for (std::uint32_t i = 0; i < x.n_; ++i)
    for (std::uint32_t j = i + 1; j < x.n_; ++j) {
      std::uint64_t v = x.a_[x.idx(i, j)] + y.a_[y.idx(i, j)];
      for (std::uint32_t l = i + 1; l < j; ++l)
        v += std::uint64_t(x.a_[x.idx(i, l)]) * y.a_[y.idx(l, j)];
      r.a_[r.idx(i, j)] = static_cast<std::uint32_t>(v % m);
    }
  return r;
}

Unipotent Unipotent::inverse() const {
  // 1 + N has inverse sum (-N)^t; Horner on the nilpotent part: y <- 1 - N*y.
  Unipotent y(n_, mod_);
  for (std::uint32_t t = 0; t + 1 < n_; ++t) {
    Unipotent ny(n_, mod_);
    const std::uint64_t m = mod_;
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i + 1; j < n_; ++j) {
        std::uint64_t v = a_[idx(i, j)];  // N * 1 part
        for (std::uint32_t l = i + 1; l < j; ++l)
          v += std::uint64_t(a_[idx(i, l)]) * y.a_[y.idx(l, j)];
        ny.a_[ny.idx(i, j)] = static_cast<std::uint32_t>(v % m);
      }
    // y <- 1 - ny
    for (std::size_t s = 0; s < y.a_.size(); ++s)
      y.a_[s] = (mod_ - ny.a_[s]) % mod_;
  }
  return y;
}

std::string Unipotent::str() const {
  std::string out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i) out += "; ";
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += (j < i) ? "0" : (j == i) ? "1" : std::to_string(a_[idx(i, j)]);
    }
  }
  return out;
}

PuncturedUnipotent::PuncturedUnipotent(std::uint32_t dim, std::uint32_t modulus)
    : n_(dim), mod_(modulus) {
  if (dim < 2) throw parameter_error("PuncturedUnipotent: dimension must be >= 2");
  if (modulus < 2) throw parameter_error("PuncturedUnipotent: modulus must be >= 2");
  a_.assign(Unipotent::entry_count(dim) - 1, 0);
}

std::uint64_t PuncturedUnipotent::group_order(std::uint32_t dim, std::uint32_t modulus) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i + 1 < Unipotent::entry_count(dim); ++i) r *= modulus;
  return r;
}

std::size_t PuncturedUnipotent::idx(std::uint32_t i, std::uint32_t j) const {
  std::size_t full = static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  // the omitted corner (0, n-1) is the last entry of row 0
  return (i == 0) ? full : full - 1;
}

std::uint32_t PuncturedUnipotent::at(std::uint32_t i, std::uint32_t j) const {
  if (i >= j || j >= n_) throw parameter_error("PuncturedUnipotent::at: bad entry");
  if (i == 0 && j == n_ - 1)
    throw parameter_error("PuncturedUnipotent::at: the corner entry is omitted");
  return a_[idx(i, j)];
}

void PuncturedUnipotent::set(std::uint32_t i, std::uint32_t j, std::uint32_t v) {
  if (i >= j || j >= n_) throw parameter_error("PuncturedUnipotent::set: bad entry");
  if (i == 0 && j == n_ - 1)
    throw parameter_error("PuncturedUnipotent::set: the corner entry is omitted");
  a_[idx(i, j)] = v % mod_;
}

bool PuncturedUnipotent::is_identity() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

PuncturedUnipotent operator*(const PuncturedUnipotent& x, const PuncturedUnipotent& y) {
  if (x.n_ != y.n_ || x.mod_ != y.mod_)
    throw parameter_error("PuncturedUnipotent product: mismatched dimension or modulus");
  PuncturedUnipotent r(x.n_, x.mod_);
  const std::uint64_t m = x.mod_;
  for (std::uint32_t i = 0; i < x.n_; ++i)
    for (std::uint32_t j = i + 1; j < x.n_; ++j) {
      if (i == 0 && j == x.n_ - 1) continue;
      std::uint64_t v = x.a_[x.idx(i, j)] + y.a_[y.idx(i, j)];
      for (std::uint32_t l = i + 1; l < j; ++l)
        v += std::uint64_t(x.a_[x.idx(i, l)]) * y.a_[y.idx(l, j)];
      r.a_[r.idx(i, j)] = static_cast<std::uint32_t>(v % m);
    }
  return r;
}

PuncturedUnipotent PuncturedUnipotent::inverse() const {
  PuncturedUnipotent y(n_, mod_);
  for (std::uint32_t t = 0; t + 1 < n_; ++t) {
    PuncturedUnipotent ny(n_, mod_);
    const std::uint64_t m = mod_;
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i + 1; j < n_; ++j) {
        if (i == 0 && j == n_ - 1) continue;
        std::uint64_t v = a_[idx(i, j)];
        for (std::uint32_t l = i + 1; l < j; ++l)
          v += std::uint64_t(a_[idx(i, l)]) * y.a_[y.idx(l, j)];
        ny.a_[ny.idx(i, j)] = static_cast<std::uint32_t>(v % m);
      }
    for (std::size_t s = 0; s < y.a_.size(); ++s)
      y.a_[s] = (mod_ - ny.a_[s]) % mod_;
  }
  return y;
}

std::string PuncturedUnipotent::str() const {
  std::string out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i) out += "; ";
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j) out += ' ';
      if (i == 0 && j == n_ - 1)
        out += '*';
      else
        out += (j < i) ? "0" : (j == i) ? "1" : std::to_string(a_[idx(i, j)]);
    }
  }
  return out;
}

PuncturedUnipotent forget_corner(const Unipotent& x) {
  PuncturedUnipotent r(x.dim(), x.modulus());
  for (std::uint32_t i = 0; i < x.dim(); ++i)
    for (std::uint32_t j = i + 1; j < x.dim(); ++j)
      if (!(i == 0 && j == x.dim() - 1)) r.set(i, j, x.at(i, j));
  return r;
}

Unipotent with_corner(const PuncturedUnipotent& x, std::uint32_t corner) {
  Unipotent r(x.dim(), x.modulus());
  for (std::uint32_t i = 0; i < x.dim(); ++i)
    for (std::uint32_t j = i + 1; j < x.dim(); ++j)
      if (!(i == 0 && j == x.dim() - 1)) r.set(i, j, x.at(i, j));
  r.set(0, x.dim() - 1, corner);
  return r;
}

namespace {

Unipotent gamma_impl(const Word& w, const GroupWord& g, std::uint32_t modulus, bool signs) {
  const std::uint32_t n = static_cast<std::uint32_t>(w.size());
  if (n == 0) throw parameter_error("gamma: word must be nonempty");
  std::uint32_t kw = 0;
  for (std::uint8_t a : w) kw = std::max<std::uint32_t>(kw, a + 1u);
  std::uint32_t k = std::max<std::uint32_t>({kw, g.min_alphabet(), 1u});
  TruncatedSeries img = magnus(g, modulus, k, n);
  Unipotent r(n + 1, modulus);
  for (std::uint32_t i = 0; i < n + 1; ++i)
    for (std::uint32_t j = i + 1; j < n + 1; ++j) {
      Word sub(w.begin() + i, w.begin() + j);
      std::uint32_t v = img.coeff(sub);
      if (signs && ((j - i) % 2 == 1)) v = (modulus - v) % modulus;
      r.set(i, j, v);
    }
  return r;
}

}  // namespace

Unipotent gamma1(const Word& w, const GroupWord& g, std::uint32_t modulus) {
  return gamma_impl(w, g, modulus, false);
}

Unipotent gamma2(const Word& w, const GroupWord& g, std::uint32_t modulus) {
  return gamma_impl(w, g, modulus, true);
}

std::vector<Unipotent> representation(const Quotient& Q,
                                      const std::vector<Unipotent>& images) {
  if (images.size() != Q.alphabet())
    throw parameter_error("representation: one image per free generator required");
  const std::uint32_t dim = images[0].dim();
  for (const auto& u : images)
    if (u.dim() != dim || u.modulus() != images[0].modulus())
      throw parameter_error("representation: images have mismatched shapes");
  if (Q.level() < dim)
    throw parameter_error(
        "representation: quotient level must be >= matrix dimension for factoring");
  std::vector<Unipotent> rep;
  rep.reserve(static_cast<std::size_t>(Q.order()));
  rep.emplace_back(dim, images[0].modulus());
  for (int e = 1; e < Q.order(); ++e) {
    auto [par, gen] = Q.bfs_parent(e);
    rep.push_back(rep[static_cast<std::size_t>(par)] * images[static_cast<std::size_t>(gen)]);
  }
  return rep;
}

bool is_representation(const GroupTable& T, const std::vector<Unipotent>& rep) {
  for (int a = 0; a < T.order; ++a)
    for (int b = 0; b < T.order; ++b)
      if (!(rep[static_cast<std::size_t>(T.product(a, b))] ==
            rep[static_cast<std::size_t>(a)] * rep[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

bool is_punctured_hom(const GroupTable& T, const std::vector<PuncturedUnipotent>& rep) {
  for (int a = 0; a < T.order; ++a)
    for (int b = 0; b < T.order; ++b)
      if (!(rep[static_cast<std::size_t>(T.product(a, b))] ==
            rep[static_cast<std::size_t>(a)] * rep[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

namespace {

// Kernel of the representation with generator images decoded from `tuple`,
// as a bitmask over elements.
void fold_kernel(const Quotient& Q, std::uint32_t dim, std::uint64_t tuple,
                 std::vector<std::uint64_t>& mask) {
  const std::uint64_t per = Unipotent::group_order(dim, Q.prime());
  std::vector<Unipotent> images;
  for (std::uint32_t a = 0; a < Q.alphabet(); ++a) {
    images.push_back(Unipotent::from_rank(dim, Q.prime(), tuple % per));
    tuple /= per;
  }
  std::vector<Unipotent> rep = representation(Q, images);
  for (int e = 0; e < Q.order(); ++e)
    if (!rep[static_cast<std::size_t>(e)].is_identity())
      mask[static_cast<std::size_t>(e) / 64] &=
          ~(std::uint64_t(1) << (static_cast<std::size_t>(e) % 64));
}

}  // namespace

KernelIntersection kernel_intersection(const Quotient& Q, std::uint32_t dim,
                                       unsigned threads) {
  if (Q.level() < dim)
    throw parameter_error("kernel_intersection: quotient level must be >= dimension");
  const std::uint64_t per = Unipotent::group_order(dim, Q.prime());
  std::uint64_t total = 1;
  for (std::uint32_t a = 0; a < Q.alphabet(); ++a) {
    if (per != 0 && total > (std::uint64_t(1) << 62) / per)
      throw resource_error("kernel_intersection: enumeration space too large",
                           static_cast<std::size_t>(total));
    total *= per;
  }

  const std::size_t words = (static_cast<std::size_t>(Q.order()) + 63) / 64;
  std::vector<std::uint64_t> inter(words, ~std::uint64_t(0));

  // proven lower bound: the filtration image at level dim
  std::vector<std::uint64_t> lower(words, 0);
  for (int e : Q.filtration_image(dim))
    lower[static_cast<std::size_t>(e) / 64] |= std::uint64_t(1)
                                               << (static_cast<std::size_t>(e) % 64);

  KernelIntersection out;
  out.reps_total = total;

  const std::uint64_t block = 64;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::uint64_t next = 0;
  while (next < total) {
    std::uint64_t wave_end = std::min<std::uint64_t>(total, next + block * threads);
    if (threads <= 1 || wave_end - next <= block) {
      for (std::uint64_t t = next; t < wave_end; ++t) fold_kernel(Q, dim, t, inter);
    } else {
      std::vector<std::vector<std::uint64_t>> local(
          threads, std::vector<std::uint64_t>(words, ~std::uint64_t(0)));
      std::vector<std::thread> pool;
      for (unsigned ti = 0; ti < threads; ++ti) {
        std::uint64_t lo = next + ti * block;
        std::uint64_t hi = std::min<std::uint64_t>(wave_end, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, ti] {
          for (std::uint64_t t = lo; t < hi; ++t) fold_kernel(Q, dim, t, local[ti]);
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& lm : local)
        for (std::size_t w = 0; w < words; ++w) inter[w] &= lm[w];
    }
    out.reps_used = wave_end;
    next = wave_end;
    if (inter == lower) {
      out.early_exit = next < total;
      break;
    }
  }

  for (int e = 0; e < Q.order(); ++e)
    if (inter[static_cast<std::size_t>(e) / 64] >> (static_cast<std::size_t>(e) % 64) & 1)
      out.elements.push_back(e);
  return out;
}

GroupTable fiber_product(const std::vector<PuncturedUnipotent>& gamma_bar,
                         const GroupTable& G) {
  if (static_cast<int>(gamma_bar.size()) != G.order)
    throw parameter_error("fiber_product: one punctured matrix per group element");
  if (!is_punctured_hom(G, gamma_bar))
    throw value_error("fiber_product: gamma_bar is not a homomorphism");
  const std::uint32_t m = gamma_bar[0].modulus();
  const std::uint32_t dim = gamma_bar[0].dim();
  const int order = static_cast<int>(m) * G.order;

  GroupTable B;
  B.order = order;
  B.mul.assign(static_cast<std::size_t>(order) * order, 0);
  B.inverse.assign(static_cast<std::size_t>(order), 0);

  auto id_of = [&](std::uint32_t r, int g) { return static_cast<int>(r) * G.order + g; };

  for (std::uint32_t r = 0; r < m; ++r)
    for (int g = 0; g < G.order; ++g) {
      Unipotent u = with_corner(gamma_bar[static_cast<std::size_t>(g)], r);
      Unipotent uinv = u.inverse();
      B.inverse[static_cast<std::size_t>(id_of(r, g))] =
          id_of(uinv.at(0, dim - 1), G.inverse[static_cast<std::size_t>(g)]);
      for (std::uint32_t s = 0; s < m; ++s)
        for (int h = 0; h < G.order; ++h) {
          Unipotent prod = u * with_corner(gamma_bar[static_cast<std::size_t>(h)], s);
          B.mul[static_cast<std::size_t>(id_of(r, g)) * order + id_of(s, h)] =
              id_of(prod.at(0, dim - 1), G.product(g, h));
        }
    }
  B.identity = id_of(0, G.identity);
  return B;
}

}  // namespace zlab
