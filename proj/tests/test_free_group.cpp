#include <doctest.h>

#include <algorithm>
#include <random>

#include "zlab/free_group.hpp"
#include "zlab/magnus.hpp"

using namespace zlab;

namespace {

GroupWord random_word(std::mt19937_64& rng, std::uint32_t k, int max_syllables = 4) {
  std::uniform_int_distribution<int> ns(0, max_syllables);
  std::uniform_int_distribution<std::uint32_t> gen(0, k - 1);
  std::uniform_int_distribution<std::int64_t> exp(-3, 3);
  GroupWord w;
  int n = ns(rng);
  for (int i = 0; i < n; ++i) {
    std::int64_t e = exp(rng);
    if (e) w = w * GroupWord::generator(gen(rng), e);
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction") {
  auto a = GroupWord::generator(0);
  auto b = GroupWord::generator(1);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a * b * b.inverse() * a == GroupWord::generator(0, 2));
  CHECK((a * GroupWord{}) == a);
  CHECK(commutator(a, a).is_identity());
  CHECK(commutator(a, GroupWord{}).is_identity());
  CHECK(commutator(a, b).syllables().size() == 4);
}

TEST_CASE("word parsing and printing") {
  CHECK(GroupWord::parse("") == GroupWord{});
  CHECK(GroupWord::parse("1") == GroupWord{});
  CHECK(GroupWord::parse("a0^2*a1^-1") ==
        GroupWord::generator(0, 2) * GroupWord::generator(1, -1));
  CHECK(GroupWord::parse("[a0,a1]") ==
        commutator(GroupWord::generator(0), GroupWord::generator(1)));
  CHECK(GroupWord::parse("[a0,[a0,a1]]^2") ==
        commutator(GroupWord::generator(0),
                   commutator(GroupWord::generator(0), GroupWord::generator(1)))
            .pow(2));
  CHECK(GroupWord::parse("(a0*a1)^-1") ==
        (GroupWord::generator(0) * GroupWord::generator(1)).inverse());
  CHECK_THROWS_AS(GroupWord::parse("a"), parse_error);
  CHECK_THROWS_AS(GroupWord::parse("[a0,a1"), parse_error);
  CHECK_THROWS_AS(GroupWord::parse("a0^"), parse_error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto w = random_word(rng, 3);
    CHECK(GroupWord::parse(w.str()) == w);
  }
}

TEST_CASE("zassenhaus degrees") {
  CHECK(zassenhaus_degree(GroupWord::generator(0), 2, 8) == 1);
  CHECK(zassenhaus_degree(GroupWord::parse("[a0,a1]"), 2, 8) == 2);
  CHECK(zassenhaus_degree(GroupWord::parse("[a0,a1]"), 5, 8) == 2);
  CHECK(zassenhaus_degree(GroupWord::parse("a0^2"), 2, 8) == 2);
  CHECK(zassenhaus_degree(GroupWord::parse("a0^3"), 3, 8) == 3);
  CHECK(zassenhaus_degree(GroupWord::parse("a0^5"), 5, 8) == 5);
  CHECK(zassenhaus_degree(GroupWord{}, 2, 8) == 8);  // ">= cap" sentinel
  CHECK_THROWS_AS(zassenhaus_degree(GroupWord::generator(0), 4, 8), parameter_error);
}

TEST_CASE("epsilon product rule") {
  std::mt19937_64 rng(17);
  for (std::uint32_t m : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto g = random_word(rng, 2);
      auto h = random_word(rng, 2);
      auto img_g = magnus(g, m, 2, 3);
      auto img_h = magnus(h, m, 2, 3);
      auto img_gh = magnus(g * h, m, 2, 3);
      for (std::uint32_t d = 0; d <= 3; ++d)
        for (const auto& w : all_words(2, d)) {
          std::uint32_t sum = 0;
          for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            Word w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
            Word w2(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
            sum = (sum + img_g.coeff(w1) * img_h.coeff(w2)) % m;
          }
          CHECK(img_gh.coeff(w) == sum);
        }
    }
  }
}

TEST_CASE("filtration laws on random words") {
  std::mt19937_64 rng(29);
  const std::uint32_t D = 4;
  for (std::uint32_t m : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto g = random_word(rng, 2);
      auto h = random_word(rng, 2);
      auto dg = magnus(g, m, 2, D).v_degree();
      auto dh = magnus(h, m, 2, D).v_degree();
      auto dc = magnus(commutator(g, h), m, 2, D).v_degree();
      CHECK(dc >= std::min(dg + dh, D + 1));
      if (is_prime(m)) {
        auto dp = magnus(g.pow(m), m, 2, D).v_degree();
        CHECK(dp >= std::min(dg + 1, D + 1));
      }
      // subgroup laws for the degree
      auto dprod = magnus(g * h, m, 2, D).v_degree();
      CHECK(dprod >= std::min(dg, dh));
      CHECK(magnus(g.inverse(), m, 2, D).v_degree() == dg);
    }
  }
}

TEST_CASE("filtration generators") {
  auto lvl1 = filtration_generators(2, 1, 2);
  REQUIRE(lvl1.size() == 2);
  CHECK(lvl1[0] == GroupWord::generator(0));

  auto lvl2 = filtration_generators(2, 2, 2);
  auto has = [&](const char* s) {
    auto w = GroupWord::parse(s);
    return std::find(lvl2.begin(), lvl2.end(), w) != lvl2.end();
  };
  CHECK(has("a0^2"));
  CHECK(has("a1^2"));
  CHECK(has("[a0,a1]"));

  auto lvl3 = filtration_generators(2, 3, 2);
  auto has3 = [&](const char* s) {
    auto w = GroupWord::parse(s);
    return std::find(lvl3.begin(), lvl3.end(), w) != lvl3.end();
  };
  CHECK(has3("[a0,[a0,a1]]"));
  CHECK(has3("[a1,[a0,a1]]"));
  CHECK(has3("[a0,a1]^2"));

  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t p : {2u, 3u})
      for (const auto& w : filtration_generators(2, n, p, 64))
        CHECK(zassenhaus_degree(w, p, n, 2) >= n);
}
