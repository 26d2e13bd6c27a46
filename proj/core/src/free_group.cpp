#include "zlab/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "zlab/magnus.hpp"

namespace zlab {

GroupWord GroupWord::generator(std::uint32_t gen, std::int64_t exp) {
  GroupWord w;
  w.append(gen, exp);
  return w;
}

GroupWord GroupWord::from_syllables(const std::vector<Syllable>& syllables) {
  GroupWord w;
  for (const auto& s : syllables) w.append(s.gen, s.exp);
  return w;
}

void GroupWord::append(std::uint32_t gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

std::uint64_t GroupWord::length() const {
  std::uint64_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

std::uint32_t GroupWord::min_alphabet() const {
  std::uint32_t k = 0;
  for (const auto& s : syl_) k = std::max(k, s.gen + 1);
  return k;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

GroupWord GroupWord::pow(std::int64_t e) const {
  if (e == 0 || syl_.empty()) return GroupWord{};
  if (syl_.size() == 1) return generator(syl_[0].gen, syl_[0].exp * e);
  std::uint64_t n = e < 0 ? 0 - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  if (length() * n > 1'000'000)
    throw parameter_error("GroupWord::pow: resulting word would exceed the length budget");
  GroupWord base = e < 0 ? inverse() : *this;
  GroupWord r;
  for (std::uint64_t i = 0; i < n; ++i) r = r * base;
  return r;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  for (const auto& s : b.syl_) r.append(s.gen, s.exp);
  return r;
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) {
  return x.inverse() * y.inverse() * x * y;
}

GroupWord substitute(const GroupWord& g, const std::vector<GroupWord>& images) {
  GroupWord r;
  for (const auto& s : g.syllables()) {
    if (s.gen >= images.size())
      throw parameter_error("substitute: generator index out of range");
    r = r * images[s.gen].pow(s.exp);
  }
  return r;
}

std::string GroupWord::str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) out += '*';
    out += 'a';
    out += std::to_string(syl_[i].gen);
    if (syl_[i].exp != 1) {
      out += '^';
      out += std::to_string(syl_[i].exp);
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the word grammar.
struct WordParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("word parse error at offset " + std::to_string(pos) + ": " + msg);
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::strtoll(std::string(s.substr(start, pos - start)).c_str(), nullptr, 10);
  }

  GroupWord atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected atom");
    char c = s[pos];
    if (c == 'a') {
      ++pos;
      std::size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == digits) fail("expected generator index after 'a'");
      auto idx = std::strtoul(std::string(s.substr(digits, pos - digits)).c_str(), nullptr, 10);
      return GroupWord::generator(static_cast<std::uint32_t>(idx));
    }
    if (c == '1') {
      ++pos;
      return GroupWord{};
    }
    if (c == '(') {
      ++pos;
      GroupWord w = word();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (c == '[') {
      ++pos;
      GroupWord x = word();
      if (!eat(',')) fail("expected ',' in commutator");
      GroupWord y = word();
      if (!eat(']')) fail("expected ']'");
      return commutator(x, y);
    }
    fail("unexpected character");
  }

  GroupWord term() {
    GroupWord w = atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      w = w.pow(integer());
    }
    return w;
  }

  bool at_term_start() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == 'a' || c == '1' || c == '(' || c == '[';
  }

  GroupWord word() {
    GroupWord w = term();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        w = w * term();
      } else if (at_term_start()) {
        w = w * term();  // juxtaposition, '*' optional
      } else {
        return w;
      }
    }
  }
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text) {
  WordParser p{text};
  p.skip_ws();
  if (p.pos >= text.size()) return GroupWord{};
  GroupWord w = p.word();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

std::uint32_t zassenhaus_degree(const GroupWord& g, std::uint32_t p, std::uint32_t cap,
                                std::uint32_t alphabet) {
  if (!is_prime(p)) throw parameter_error("zassenhaus_degree: p must be prime");
  if (cap < 1) throw parameter_error("zassenhaus_degree: cap must be >= 1");
  std::uint32_t k = alphabet ? alphabet : std::max<std::uint32_t>(1, g.min_alphabet());
  if (g.min_alphabet() > k)
    throw parameter_error("zassenhaus_degree: generator index out of range");
  TruncatedSeries img = magnus(g, p, k, cap - 1);
  return img.v_degree();  // value cap-1+1 == cap is the ">= cap" sentinel
}

namespace {

// One recursion level of the generating scheme, with syntactic dedup.
std::vector<GroupWord> level_words(std::uint32_t alphabet, std::uint32_t level,
                                   std::uint32_t p, std::size_t budget,
                                   std::vector<std::vector<GroupWord>>& memo) {
  if (memo.size() > level && !memo[level].empty()) return memo[level];
  std::vector<GroupWord> out;
  auto push = [&](const GroupWord& w) {
    if (w.is_identity() || out.size() >= budget) return;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  };
  if (level <= 1) {
    for (std::uint32_t a = 0; a < alphabet; ++a) push(GroupWord::generator(a));
  } else {
    std::uint32_t half = (level + p - 1) / p;  // ceil(level/p)
    for (const auto& g : level_words(alphabet, half, p, budget, memo)) push(g.pow(p));
    for (std::uint32_t i = 1; 2 * i <= level; ++i) {
      std::uint32_t j = level - i;
      const auto& xs = level_words(alphabet, i, p, budget, memo);
      const auto& ys = level_words(alphabet, j, p, budget, memo);
      for (std::size_t xi = 0; xi < xs.size(); ++xi)
        for (std::size_t yi = (i == j ? xi + 1 : 0); yi < ys.size(); ++yi)
          push(commutator(xs[xi], ys[yi]));
    }
  }
  if (memo.size() <= level) memo.resize(level + 1);
  memo[level] = out;
  return out;
}

}  // namespace

std::vector<GroupWord> filtration_generators(std::uint32_t alphabet, std::uint32_t level,
                                             std::uint32_t p, std::size_t budget) {
  if (!is_prime(p)) throw parameter_error("filtration_generators: p must be prime");
  if (level < 1) throw parameter_error("filtration_generators: level must be >= 1");
  std::vector<std::vector<GroupWord>> memo;
  return level_words(alphabet, level, p, budget, memo);
}

std::vector<GroupWord> filtration_generators_upto(std::uint32_t alphabet,
                                                  std::uint32_t level_lo,
                                                  std::uint32_t level_hi, std::uint32_t p,
                                                  std::size_t budget) {
  std::vector<std::vector<GroupWord>> memo;
  std::vector<GroupWord> out;
  for (std::uint32_t l = level_lo; l <= level_hi; ++l)
    for (const auto& w : level_words(alphabet, l, p, budget, memo))
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  return out;
}

}  // namespace zlab
