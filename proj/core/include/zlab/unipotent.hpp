#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zlab/quotient.hpp"

namespace zlab {

/// Upper-triangular unipotent matrix over Z/m: implicit 1s on the diagonal,
/// implicit 0s below, the strict upper triangle stored row-major.
class Unipotent {
 public:
  Unipotent(std::uint32_t dim, std::uint32_t modulus);

  static std::size_t entry_count(std::uint32_t dim) {
    return static_cast<std::size_t>(dim) * (dim - 1) / 2;
  }
  /// m^(dim(dim-1)/2); the enumeration index space.
  static std::uint64_t group_order(std::uint32_t dim, std::uint32_t modulus);
  /// Enumeration: entries as base-m digits of `rank`, in storage order.
  static Unipotent from_rank(std::uint32_t dim, std::uint32_t modulus, std::uint64_t rank);

  std::uint32_t dim() const { return n_; }
  std::uint32_t modulus() const { return mod_; }

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const;   // 0-based, i < j
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t v);

  bool is_identity() const;
  friend Unipotent operator*(const Unipotent& x, const Unipotent& y);
  Unipotent inverse() const;

  friend bool operator==(const Unipotent&, const Unipotent&) = default;

  std::string str() const;
  const std::vector<std::uint32_t>& entries() const { return a_; }

 private:
  std::uint32_t n_, mod_;
  std::vector<std::uint32_t> a_;
  std::size_t idx(std::uint32_t i, std::uint32_t j) const;
};

/// Unipotent matrix with the corner (first row, last column) entry omitted.
/// The product never reads the omitted slot, so the group law is well defined.
class PuncturedUnipotent {
 public:
  PuncturedUnipotent(std::uint32_t dim, std::uint32_t modulus);

  static std::uint64_t group_order(std::uint32_t dim, std::uint32_t modulus);

  std::uint32_t dim() const { return n_; }
  std::uint32_t modulus() const { return mod_; }

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const;   // (0, dim-1) rejected
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t v);

  bool is_identity() const;
  friend PuncturedUnipotent operator*(const PuncturedUnipotent& x,
                                      const PuncturedUnipotent& y);
  PuncturedUnipotent inverse() const;

  friend bool operator==(const PuncturedUnipotent&, const PuncturedUnipotent&) = default;

  std::string str() const;

 private:
  std::uint32_t n_, mod_;
  std::vector<std::uint32_t> a_;  // strict upper triangle minus the corner
  std::size_t idx(std::uint32_t i, std::uint32_t j) const;
};

/// Forgetful epimorphism: drop the corner entry.
PuncturedUnipotent forget_corner(const Unipotent& x);
/// Section of the forgetful map with prescribed corner value.
Unipotent with_corner(const PuncturedUnipotent& x, std::uint32_t corner);

/// The coefficient homomorphism attached to a word w = (a_1..a_n): the
/// (i,j) entry of gamma1(g) is the Magnus coefficient of the subword
/// (a_i..a_{j-1}) at g; gamma2 twists entry (i,j) by (-1)^(j-i).
/// Both land in dimension n+1.
Unipotent gamma1(const Word& w, const GroupWord& g, std::uint32_t modulus);
Unipotent gamma2(const Word& w, const GroupWord& g, std::uint32_t modulus);

/// The representation of a quotient determined by one unipotent image per free
/// generator, evaluated along the BFS witness tree. Requires the quotient level
/// m >= matrix dimension so that the assignment factors through the quotient.
std::vector<Unipotent> representation(const Quotient& Q,
                                      const std::vector<Unipotent>& images);

/// Full homomorphism check against a dense table.
bool is_representation(const GroupTable& T, const std::vector<Unipotent>& rep);
bool is_punctured_hom(const GroupTable& T, const std::vector<PuncturedUnipotent>& rep);

struct KernelIntersection {
  std::vector<int> elements;        // sorted element indices of the intersection
  std::uint64_t reps_total = 0;     // size of the full enumeration space
  std::uint64_t reps_used = 0;      // representations actually folded in
  bool early_exit = false;          // stopped at the proven lower bound
};

/// Intersection of the kernels of all representations Q -> U_dim(F_p),
/// enumerated over generator-image tuples. Early exit once the intersection
/// reaches the filtration image at level dim (a proven lower bound); the
/// result set is deterministic regardless of thread count.
KernelIntersection kernel_intersection(const Quotient& Q, std::uint32_t dim,
                                       unsigned threads = 1);

/// Fiber product U_dim x_{punctured} G along the forgetful map and a punctured
/// homomorphism gamma_bar (validated against the table). Element (r, g) has
/// index r*|G| + g where r is the corner value of the unipotent component.
GroupTable fiber_product(const std::vector<PuncturedUnipotent>& gamma_bar,
                         const GroupTable& G);

}  // namespace zlab
