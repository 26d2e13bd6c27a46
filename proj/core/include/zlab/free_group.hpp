#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zlab/common.hpp"

namespace zlab {

/// One maximal run `gen^exp` of a reduced word; exp is never zero.
struct Syllable {
  std::uint32_t gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a finitely generated free group.
/// Adjacent syllables always carry distinct generators; the empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord generator(std::uint32_t gen, std::int64_t exp = 1);
  static GroupWord from_syllables(const std::vector<Syllable>& syllables);

  bool is_identity() const { return syl_.empty(); }
  const std::vector<Syllable>& syllables() const { return syl_; }

  /// Total letter count, counting |exp| per syllable.
  std::uint64_t length() const;

  /// Smallest alphabet size containing every generator used (0 for the identity).
  std::uint32_t min_alphabet() const;

  GroupWord inverse() const;
  GroupWord pow(std::int64_t e) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// Text form, e.g. `a0^2*a1^-1`; the identity prints as `1`.
  std::string str() const;

  /// Parses the CLI word grammar: generators `aN`, `^` integer exponents,
  /// `*` concatenation, `[x,y]` commutators, parentheses, `1` or "" for the identity.
  static GroupWord parse(std::string_view text);

 private:
  std::vector<Syllable> syl_;
  void append(std::uint32_t gen, std::int64_t exp);
};

/// [x,y] = x^-1 y^-1 x y.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

/// Image of `g` under the homomorphism sending generator i to `images[i]`.
GroupWord substitute(const GroupWord& g, const std::vector<GroupWord>& images);

/// Zassenhaus filtration level of `g` detected through its Magnus expansion mod p,
/// capped: returns n in [1, cap], where `cap` means "at least cap".
/// `alphabet` 0 derives the alphabet from the word itself.
std::uint32_t zassenhaus_degree(const GroupWord& g, std::uint32_t p, std::uint32_t cap,
                                std::uint32_t alphabet = 0);

/// Words generating the level-`level` filtration subgroup, by the recursive scheme:
/// p-th powers from level ceil(level/p) and commutators across level splits.
/// Deterministic order (powers first, lower split levels first); `budget` caps the
/// list size per recursion level.
std::vector<GroupWord> filtration_generators(std::uint32_t alphabet, std::uint32_t level,
                                             std::uint32_t p, std::size_t budget = 512);

/// Union of filtration_generators for levels level_lo..level_hi. Generating the image
/// of the level-n subgroup inside S/S_m requires words from every level n..m-1.
std::vector<GroupWord> filtration_generators_upto(std::uint32_t alphabet,
                                                  std::uint32_t level_lo,
                                                  std::uint32_t level_hi, std::uint32_t p,
                                                  std::size_t budget = 512);

}  // namespace zlab
