#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zlab/common.hpp"

namespace zlab {

/// Monomial index into the free monoid on the alphabet: a sequence of letters.
using Word = std::vector<std::uint8_t>;

/// Position of a length-d word within its degree block, reading letters as
/// base-k digits, first letter most significant. Graded-lex order overall.
std::size_t word_index(std::uint32_t alphabet, const Word& w);
Word word_of_index(std::uint32_t alphabet, std::uint32_t degree, std::size_t index);
std::vector<Word> all_words(std::uint32_t alphabet, std::uint32_t degree);
std::string word_str(const Word& w);

/// Element of the truncated non-commutative power series ring
/// (Z/m)<<X_0..X_{k-1}>> modulo monomials of length > degree_bound.
/// Coefficients are stored densely in graded-lex order and kept reduced mod m.
class TruncatedSeries {
 public:
  TruncatedSeries(std::uint32_t modulus, std::uint32_t alphabet, std::uint32_t degree_bound);

  static TruncatedSeries one(std::uint32_t modulus, std::uint32_t alphabet,
                             std::uint32_t degree_bound);
  /// 1 + X_a, the Magnus image of a free generator.
  static TruncatedSeries generator_unit(std::uint32_t modulus, std::uint32_t alphabet,
                                        std::uint32_t degree_bound, std::uint32_t a);

  std::uint32_t modulus() const { return mod_; }
  std::uint32_t alphabet() const { return k_; }
  std::uint32_t degree_bound() const { return deg_; }

  std::uint32_t coeff(const Word& w) const;
  void set_coeff(const Word& w, std::uint32_t v);
  std::uint32_t constant_term() const { return c_[0]; }

  /// Raw access to the coefficients of one degree block.
  std::span<const std::uint32_t> degree_block(std::uint32_t d) const;

  friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
  friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
  friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);
  TruncatedSeries operator-() const;

  /// Multiplicative inverse of 1 + alpha via the finite geometric series.
  /// Requires constant term 1.
  TruncatedSeries inverse() const;

  TruncatedSeries pow(std::int64_t e) const;

  /// Largest n <= degree_bound+1 such that every coefficient of a word of
  /// length in [1, n) vanishes. degree_bound+1 encodes ">= degree_bound+1".
  /// Requires constant term 1.
  std::uint32_t v_degree() const;

  /// Same coefficients cut down to a smaller degree bound.
  TruncatedSeries truncate(std::uint32_t new_bound) const;

  /// Canonical byte string of all coefficients; equal series share keys.
  std::string key() const;

  std::string str() const;
  static TruncatedSeries parse(std::string_view text, std::uint32_t modulus,
                               std::uint32_t alphabet, std::uint32_t degree_bound);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::uint32_t mod_, k_, deg_;
  std::vector<std::uint32_t> c_;  // flat graded-lex coefficient array

  std::size_t offset(std::uint32_t d) const;  // start of degree-d block
  std::size_t block_size(std::uint32_t d) const;
  void check_compatible(const TruncatedSeries& other) const;
};

}  // namespace zlab
