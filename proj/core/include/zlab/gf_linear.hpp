#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zlab/common.hpp"

namespace zlab {

/// Dense matrix over the prime field F_p. Rows are stored as packed 64-bit
/// words when p == 2 and as bytes otherwise; elimination routines run on the
/// packed representation directly.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  std::uint32_t get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t v);
  void add_at(std::size_t r, std::size_t c, std::int64_t v);

  void set_row(std::size_t r, std::span<const std::uint32_t> v);
  std::vector<std::uint32_t> row(std::size_t r) const;

  /// In-place reduction to reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> echelonize();

  /// Rank (destroys a copy, the matrix itself is untouched).
  std::size_t rank() const;

  /// Basis of { x : A x = 0 }, each vector of length cols().
  std::vector<std::vector<std::uint32_t>> nullspace() const;

  /// One solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<std::uint32_t>> solve(std::span<const std::uint32_t> b) const;

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;   // p == 2
  std::vector<std::uint8_t> bytes_;   // p > 2
  std::vector<std::uint8_t> inv_;     // multiplicative inverses mod p

  void row_axpy(std::size_t dst, std::size_t src, std::uint32_t c, std::size_t from_col);
  void row_scale(std::size_t r, std::uint32_t c);
  void row_swap(std::size_t a, std::size_t b);
  std::size_t find_pivot(std::size_t col, std::size_t from_row) const;
};

/// Incrementally maintained echelonized row span over F_p; the workhorse for
/// rank, membership, and subspace comparisons of cochain spaces.
class RowBasis {
 public:
  RowBasis(std::size_t cols, std::uint32_t p);

  /// Reduces v against the basis; if a nonzero residue remains it joins the
  /// basis and insert returns true.
  bool insert(std::span<const std::uint32_t> v);

  /// Residue of v after reduction (zero vector iff v lies in the span).
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

  bool contains(std::span<const std::uint32_t> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

 private:
  struct EchelonRow {
    std::size_t pivot;
    std::vector<std::uint32_t> v;  // normalized, leading coefficient 1
  };
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<EchelonRow> rows_;  // sorted by pivot column

  void reduce_in_place(std::vector<std::uint32_t>& v) const;
};

/// Linear relations among a list of vectors: basis of
/// { r : sum_i r_i v_i = 0 }. Each relation has length vs.size().
std::vector<std::vector<std::uint32_t>> linear_relations(
    const std::vector<std::vector<std::uint32_t>>& vs, std::size_t cols, std::uint32_t p);

}  // namespace zlab
