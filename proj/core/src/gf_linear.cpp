#include "zlab/gf_linear.hpp"

#include <algorithm>
#include <cstring>

namespace zlab {

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : p_(p), rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (!is_prime(p)) throw parameter_error("PrimeFieldMatrix: p must be prime");
  if (p == 2) {
    bits_.assign(rows_ * words_, 0);
  } else {
    if (p > 251) throw parameter_error("PrimeFieldMatrix: byte storage requires p < 256");
    bytes_.assign(rows_ * cols_, 0);
    inv_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        if (a * b % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
  }
}

std::uint32_t PrimeFieldMatrix::get(std::size_t r, std::size_t c) const {
  if (p_ == 2) return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
  return bytes_[r * cols_ + c];
}

void PrimeFieldMatrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  v %= p_;
  if (p_ == 2) {
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    auto& w = bits_[r * words_ + c / 64];
    w = v ? (w | mask) : (w & ~mask);
  } else {
    bytes_[r * cols_ + c] = static_cast<std::uint8_t>(v);
  }
}

void PrimeFieldMatrix::add_at(std::size_t r, std::size_t c, std::int64_t v) {
  set(r, c, (get(r, c) + mod_reduce(v, p_)) % p_);
}

void PrimeFieldMatrix::set_row(std::size_t r, std::span<const std::uint32_t> v) {
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

std::vector<std::uint32_t> PrimeFieldMatrix::row(std::size_t r) const {
  std::vector<std::uint32_t> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
  return v;
}

void PrimeFieldMatrix::row_axpy(std::size_t dst, std::size_t src, std::uint32_t c,
                                std::size_t from_col) {
  if (c == 0) return;
  if (p_ == 2) {
    const std::uint64_t* s = bits_.data() + src * words_;
    std::uint64_t* d = bits_.data() + dst * words_;
    for (std::size_t w = from_col / 64; w < words_; ++w) d[w] ^= s[w];
  } else {
    const std::uint8_t* s = bytes_.data() + src * cols_;
    std::uint8_t* d = bytes_.data() + dst * cols_;
    for (std::size_t j = from_col; j < cols_; ++j)
      d[j] = static_cast<std::uint8_t>((d[j] + std::uint32_t(c) * s[j]) % p_);
  }
}

void PrimeFieldMatrix::row_scale(std::size_t r, std::uint32_t c) {
  if (p_ == 2 || c == 1) return;
  std::uint8_t* d = bytes_.data() + r * cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    d[j] = static_cast<std::uint8_t>(std::uint32_t(d[j]) * c % p_);
}

void PrimeFieldMatrix::row_swap(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (p_ == 2)
    std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>(b * words_));
  else
    std::swap_ranges(bytes_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     bytes_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     bytes_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

std::size_t PrimeFieldMatrix::find_pivot(std::size_t col, std::size_t from_row) const {
  for (std::size_t r = from_row; r < rows_; ++r)
    if (get(r, col)) return r;
  return rows_;
}

std::vector<std::size_t> PrimeFieldMatrix::echelonize() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pr = find_pivot(col, rank);
    if (pr == rows_) continue;
    row_swap(pr, rank);
    if (p_ != 2) row_scale(rank, inv_[get(rank, col)]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      std::uint32_t v = get(r, col);
      if (v) row_axpy(r, rank, p_ - v, col);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t PrimeFieldMatrix::rank() const {
  PrimeFieldMatrix copy = *this;
  return copy.echelonize().size();
}

std::vector<std::vector<std::uint32_t>> PrimeFieldMatrix::nullspace() const {
  PrimeFieldMatrix copy = *this;
  std::vector<std::size_t> pivots = copy.echelonize();
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> x(cols_, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint32_t v = copy.get(r, free);
      if (v) x[pivots[r]] = p_ - v;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> PrimeFieldMatrix::solve(
    std::span<const std::uint32_t> b) const {
  if (b.size() != rows_) throw parameter_error("solve: rhs length mismatch");
  PrimeFieldMatrix aug(rows_, cols_ + 1, p_);
  if (p_ == 2) {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::memcpy(aug.bits_.data() + r * aug.words_, bits_.data() + r * words_,
                  words_ * 8);
      aug.set(r, cols_, b[r]);
    }
  } else {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::memcpy(aug.bytes_.data() + r * aug.cols_, bytes_.data() + r * cols_, cols_);
      aug.set(r, cols_, b[r]);
    }
  }
  std::vector<std::size_t> pivots = aug.echelonize();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = nonzero
  std::vector<std::uint32_t> x(cols_, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.get(r, cols_);
  return x;
}

RowBasis::RowBasis(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {
  if (!is_prime(p)) throw parameter_error("RowBasis: p must be prime");
}

void RowBasis::reduce_in_place(std::vector<std::uint32_t>& v) const {
  for (const auto& row : rows_) {
    std::uint32_t c = v[row.pivot];
    if (!c) continue;
    std::uint32_t mul = p_ - c;
    for (std::size_t j = row.pivot; j < cols_; ++j)
      v[j] = (v[j] + mul * row.v[j]) % p_;
  }
}

bool RowBasis::insert(std::span<const std::uint32_t> v) {
  if (v.size() != cols_) throw parameter_error("RowBasis::insert: length mismatch");
  std::vector<std::uint32_t> w(v.begin(), v.end());
  for (auto& x : w) x %= p_;
  reduce_in_place(w);
  std::size_t pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (w[j]) {
      pivot = j;
      break;
    }
  if (pivot == cols_) return false;
  // normalize leading coefficient to 1
  if (w[pivot] != 1) {
    std::uint32_t inv = 1;
    for (std::uint32_t b = 1; b < p_; ++b)
      if (w[pivot] * b % p_ == 1) inv = b;
    for (auto& x : w) x = x * inv % p_;
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                             [](const EchelonRow& r, std::size_t pv) { return r.pivot < pv; });
  rows_.insert(it, EchelonRow{pivot, std::move(w)});
  return true;
}

std::vector<std::uint32_t> RowBasis::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw parameter_error("RowBasis::reduce: length mismatch");
  std::vector<std::uint32_t> w(v.begin(), v.end());
  for (auto& x : w) x %= p_;
  reduce_in_place(w);
  return w;
}

bool RowBasis::contains(std::span<const std::uint32_t> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::vector<std::uint32_t>> linear_relations(
    const std::vector<std::vector<std::uint32_t>>& vs, std::size_t cols, std::uint32_t p) {
  // Transpose: relations are the nullspace of the matrix with vs as columns.
  PrimeFieldMatrix M(cols, vs.size(), p);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != cols) throw parameter_error("linear_relations: length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      if (vs[i][c]) M.set(c, i, vs[i][c]);
  }
  return M.nullspace();
}

}  // namespace zlab
