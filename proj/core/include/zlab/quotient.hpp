#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zlab/free_group.hpp"
#include "zlab/magnus.hpp"
#include "zlab/series.hpp"

namespace zlab {

/// A finite group given fully extensionally: element indices 0..order-1,
/// a dense multiplication table, inverses, identity, distinguished generators,
/// and (when the group arose as a quotient of a free group) witness words.
struct GroupTable {
  int order = 0;
  int identity = 0;
  std::vector<int> generators;
  std::vector<int> inverse;
  std::vector<int> mul;                // row-major order x order
  std::vector<GroupWord> witnesses;    // empty for synthesized groups

  int product(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  bool is_abelian() const;
  int element_order(int e) const;
  int exponent() const;
  std::vector<int> center() const;
};

/// Closure of a seed set under products and inverses. An empty seed set yields
/// the trivial subgroup. The result is sorted.
std::vector<int> subgroup_generated(const GroupTable& T, const std::vector<int>& seeds);

/// The quotient S/S_m of the free group on `alphabet` generators by the m-th
/// p-Zassenhaus subgroup, realized by breadth-first closure of the generator
/// units 1+X_a inside the truncated series unit group at degree bound m-1.
class Quotient {
 public:
  static Quotient build(std::uint32_t alphabet, std::uint32_t p, std::uint32_t m,
                        std::size_t budget = default_budget());

  /// Order budget: env ZLAB_BUDGET_ELEMS when set, else 2^20.
  static std::size_t default_budget();

  std::uint32_t alphabet() const { return k_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t level() const { return m_; }

  int order() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }
  const std::vector<int>& generator_elems() const { return gens_; }

  const TruncatedSeries& series(int e) const { return elems_[static_cast<std::size_t>(e)]; }
  const GroupWord& witness(int e) const { return witness_[static_cast<std::size_t>(e)]; }
  /// BFS tree edge (parent element, generator); {-1,-1} for the identity.
  std::pair<int, int> bfs_parent(int e) const { return parent_[static_cast<std::size_t>(e)]; }
  /// Magnus filtration level of the element, in [1, m]; m means ">= m" (identity only).
  std::uint32_t v_degree_of(int e) const { return vdeg_[static_cast<std::size_t>(e)]; }

  int product(int a, int b) const;
  int inverse_of(int e) const;

  /// Image of a free-group word under the quotient map.
  int evaluate(const GroupWord& g) const;

  /// Elements at filtration level >= n, sorted; n in [1, m].
  std::vector<int> filtration_image(std::uint32_t n) const;

  /// Dense table view (built during construction for orders up to the table
  /// threshold; throws resource_error above it).
  const GroupTable& table() const;
  bool has_table() const { return !table_.mul.empty(); }

  /// Image of an element in a coarser quotient (same alphabet and prime,
  /// smaller level), by series re-truncation.
  int project_to(const Quotient& coarser, int e) const;

  /// Random associativity spot check of the product; throws on failure.
  void spot_check_associativity(std::size_t samples, std::uint64_t seed) const;

  std::string to_json_string(bool include_mul_table = true) const;
  static Quotient from_json_string(const std::string& text);

 private:
  Quotient() = default;

  std::uint32_t k_ = 0, p_ = 0, m_ = 0;
  std::vector<TruncatedSeries> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<GroupWord> witness_;
  std::vector<std::pair<int, int>> parent_;
  std::vector<std::uint32_t> vdeg_;
  std::vector<int> gens_;
  std::vector<int> inv_;
  GroupTable table_;  // mul empty when order exceeds the table threshold

  void finish_build();
  int lookup(const TruncatedSeries& s) const;
};

/// subgroup_generated over a quotient (works with or without a dense table).
std::vector<int> subgroup_generated(const Quotient& Q, const std::vector<int>& seeds);

/// Intrinsic p-Zassenhaus term of a finite group computed purely from its
/// multiplication table by the recursive closure
/// G_n = (G_{ceil(n/p)})^p * prod_{i+j=n} [G_i, G_j]. Independent of the
/// series-based filtration; used as a cross-oracle.
std::vector<int> zassenhaus_term_of_table(const GroupTable& T, std::uint32_t p,
                                          std::uint32_t n);

}  // namespace zlab
