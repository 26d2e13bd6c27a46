#include "zlab/series.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace zlab {

std::size_t word_index(std::uint32_t alphabet, const Word& w) {
  std::size_t idx = 0;
  for (std::uint8_t a : w) {
    if (a >= alphabet) throw parameter_error("word letter out of alphabet range");
    idx = idx * alphabet + a;
  }
  return idx;
}

Word word_of_index(std::uint32_t alphabet, std::uint32_t degree, std::size_t index) {
  Word w(degree);
  for (std::uint32_t i = degree; i-- > 0;) {
    w[i] = static_cast<std::uint8_t>(index % alphabet);
    index /= alphabet;
  }
  return w;
}

std::vector<Word> all_words(std::uint32_t alphabet, std::uint32_t degree) {
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= alphabet;
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_of_index(alphabet, degree, i));
  return out;
}

std::string word_str(const Word& w) {
  std::string s = "X[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<unsigned>(w[i]));
  }
  s += ']';
  return s;
}

TruncatedSeries::TruncatedSeries(std::uint32_t modulus, std::uint32_t alphabet,
                                 std::uint32_t degree_bound)
    : mod_(modulus), k_(alphabet), deg_(degree_bound) {
  if (modulus < 2) throw parameter_error("series modulus must be >= 2");
  if (alphabet < 1) throw parameter_error("series alphabet size must be >= 1");
  c_.assign(offset(deg_ + 1), 0);
}

std::size_t TruncatedSeries::offset(std::uint32_t d) const {
  // sum of k^e, e < d
  std::size_t off = 0, pw = 1;
  for (std::uint32_t e = 0; e < d; ++e) {
    off += pw;
    pw *= k_;
  }
  return off;
}

std::size_t TruncatedSeries::block_size(std::uint32_t d) const {
  std::size_t pw = 1;
  for (std::uint32_t e = 0; e < d; ++e) pw *= k_;
  return pw;
}

TruncatedSeries TruncatedSeries::one(std::uint32_t m, std::uint32_t k, std::uint32_t D) {
  TruncatedSeries s(m, k, D);
  s.c_[0] = 1 % m;
  return s;
}

TruncatedSeries TruncatedSeries::generator_unit(std::uint32_t m, std::uint32_t k,
                                                std::uint32_t D, std::uint32_t a) {
  if (a >= k) throw parameter_error("generator index out of range");
  TruncatedSeries s = one(m, k, D);
  if (D >= 1) s.c_[s.offset(1) + a] = 1 % m;
  return s;
}

std::uint32_t TruncatedSeries::coeff(const Word& w) const {
  if (w.size() > deg_) return 0;
  return c_[offset(static_cast<std::uint32_t>(w.size())) + word_index(k_, w)];
}

void TruncatedSeries::set_coeff(const Word& w, std::uint32_t v) {
  if (w.size() > deg_) throw parameter_error("set_coeff: word exceeds degree bound");
  c_[offset(static_cast<std::uint32_t>(w.size())) + word_index(k_, w)] = v % mod_;
}

std::span<const std::uint32_t> TruncatedSeries::degree_block(std::uint32_t d) const {
  if (d > deg_) return {};
  return {c_.data() + offset(d), block_size(d)};
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (mod_ != o.mod_ || k_ != o.k_ || deg_ != o.deg_)
    throw parameter_error("series operands have mismatched modulus/alphabet/degree bound");
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
  s.check_compatible(t);
  TruncatedSeries r(s.mod_, s.k_, s.deg_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (s.c_[i] + t.c_[i]) % s.mod_;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
  s.check_compatible(t);
  TruncatedSeries r(s.mod_, s.k_, s.deg_);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = (s.c_[i] + s.mod_ - t.c_[i]) % s.mod_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(mod_, k_, deg_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (mod_ - c_[i]) % mod_;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
  s.check_compatible(t);
  TruncatedSeries r(s.mod_, s.k_, s.deg_);
  const std::uint64_t m = s.mod_;
  for (std::uint32_t d1 = 0; d1 <= s.deg_; ++d1) {
    std::size_t off1 = s.offset(d1), n1 = s.block_size(d1);
    for (std::uint32_t d2 = 0; d1 + d2 <= s.deg_; ++d2) {
      std::size_t off2 = s.offset(d2), n2 = s.block_size(d2);
      std::size_t offr = s.offset(d1 + d2);
      for (std::size_t u = 0; u < n1; ++u) {
        std::uint64_t su = s.c_[off1 + u];
        if (!su) continue;
        std::size_t base = offr + u * n2;
        for (std::size_t v = 0; v < n2; ++v) {
          std::uint64_t tv = t.c_[off2 + v];
          if (!tv) continue;
          r.c_[base + v] = static_cast<std::uint32_t>((r.c_[base + v] + su * tv) % m);
        }
      }
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (constant_term() != 1 % mod_)
    throw value_error("series inverse requires constant term 1");
  // s = 1 + alpha; inverse = sum_{j<=D} (-alpha)^j, accumulated Horner style.
  TruncatedSeries alpha = *this;
  alpha.c_[0] = 0;
  TruncatedSeries unit = one(mod_, k_, deg_);
  TruncatedSeries t = unit;
  for (std::uint32_t i = 0; i < deg_; ++i) t = unit - alpha * t;
  return t;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const {
  TruncatedSeries base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? 0 - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  TruncatedSeries r = one(mod_, k_, deg_);
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::uint32_t TruncatedSeries::v_degree() const {
  if (constant_term() != 1 % mod_)
    throw value_error("v_degree requires constant term 1");
  for (std::uint32_t d = 1; d <= deg_; ++d)
    for (std::uint32_t v : degree_block(d))
      if (v) return d;
  return deg_ + 1;
}

TruncatedSeries TruncatedSeries::truncate(std::uint32_t new_bound) const {
  if (new_bound > deg_) throw parameter_error("truncate: new bound exceeds current");
  TruncatedSeries r(mod_, k_, new_bound);
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.c_.size()),
            r.c_.begin());
  return r;
}

std::string TruncatedSeries::key() const {
  std::string s(c_.size() * 4, '\0');
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t v = c_[i];
    std::memcpy(s.data() + 4 * i, &v, 4);
  }
  return s;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::uint32_t d = 0; d <= deg_; ++d) {
    auto block = degree_block(d);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!block[i]) continue;
      if (!out.empty()) out += " + ";
      if (d == 0) {
        out += std::to_string(block[i]);
      } else {
        if (block[i] != 1) out += std::to_string(block[i]) + "*";
        out += word_str(word_of_index(k_, d, i));
      }
    }
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries TruncatedSeries::parse(std::string_view text, std::uint32_t m,
                                       std::uint32_t k, std::uint32_t D) {
  TruncatedSeries s(m, k, D);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::uint64_t {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("series parse: expected number");
    return std::stoull(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos >= text.size()) throw parse_error("series parse: empty input");
  if (text[pos] == '0' && pos + 1 >= text.size()) return s;  // the zero series
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] != '+') throw parse_error("series parse: expected '+'");
      ++pos;
      skip_ws();
    }
    first = false;
    std::uint64_t coef = 1;
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = number();
      have_coef = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos < text.size() && text[pos] == 'X') {
      ++pos;
      if (pos >= text.size() || text[pos] != '[') throw parse_error("series parse: expected '['");
      ++pos;
      Word w;
      skip_ws();
      if (pos < text.size() && text[pos] != ']') {
        for (;;) {
          w.push_back(static_cast<std::uint8_t>(number()));
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
            continue;
          }
          break;
        }
      }
      if (pos >= text.size() || text[pos] != ']') throw parse_error("series parse: expected ']'");
      ++pos;
      s.set_coeff(w, (s.coeff(w) + mod_reduce(static_cast<std::int64_t>(coef), m)) % m);
    } else if (have_coef) {
      s.set_coeff({}, (s.coeff({}) + mod_reduce(static_cast<std::int64_t>(coef), m)) % m);
    } else {
      throw parse_error("series parse: expected term");
    }
    skip_ws();
  }
  return s;
}

}  // namespace zlab
