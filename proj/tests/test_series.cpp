#include <doctest.h>

#include <random>

#include "zlab/magnus.hpp"
#include "zlab/series.hpp"

using namespace zlab;

namespace {

TruncatedSeries random_unit_series(std::uint32_t m, std::uint32_t k, std::uint32_t D,
                                   std::mt19937_64& rng) {
  TruncatedSeries s = TruncatedSeries::one(m, k, D);
  std::uniform_int_distribution<std::uint32_t> coeff(0, m - 1);
  for (std::uint32_t d = 1; d <= D; ++d)
    for (const auto& w : all_words(k, d)) s.set_coeff(w, coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("constant arithmetic and identities") {
  auto one = TruncatedSeries::one(4, 2, 3);
  auto two = one + one;
  CHECK(two.coeff({}) == 2);
  auto zero = TruncatedSeries(4, 2, 3);
  CHECK(one + zero == one);

  // additive inverse: s + (m-1)s = 0
  auto s = TruncatedSeries::generator_unit(4, 2, 3, 0);
  auto acc = s;
  for (int i = 0; i < 3; ++i) acc = acc + s;
  CHECK(acc == TruncatedSeries(4, 2, 3));
}

TEST_CASE("product expansion") {
  auto a = TruncatedSeries::generator_unit(5, 2, 2, 0);
  auto b = TruncatedSeries::generator_unit(5, 2, 2, 1);
  auto prod = a * b;
  CHECK(prod.coeff({}) == 1);
  CHECK(prod.coeff({0}) == 1);
  CHECK(prod.coeff({1}) == 1);
  CHECK(prod.coeff({0, 1}) == 1);
  CHECK(prod.coeff({1, 0}) == 0);
  CHECK(!(a * b == b * a));

  // (1+X_a)^2 over F_2: the cross term dies
  auto sq = TruncatedSeries::generator_unit(2, 2, 2, 0);
  auto sq2 = sq * sq;
  CHECK(sq2.str() == "1 + X[0,0]");
}

TEST_CASE("parameter mismatch rejected") {
  auto s = TruncatedSeries::one(2, 2, 2);
  auto t = TruncatedSeries::one(3, 2, 2);
  CHECK_THROWS_AS(s + t, parameter_error);
  auto u = TruncatedSeries::one(2, 2, 3);
  CHECK_THROWS_AS(s * u, parameter_error);
}

TEST_CASE("geometric inverse") {
  auto one = TruncatedSeries::one(3, 1, 2);
  CHECK(one.inverse() == one);

  auto s = TruncatedSeries::generator_unit(3, 1, 2, 0);
  auto inv = s.inverse();
  CHECK(inv.coeff({}) == 1);
  CHECK(inv.coeff({0}) == 2);
  CHECK(inv.coeff({0, 0}) == 1);

  auto bad = TruncatedSeries(3, 1, 2);
  CHECK_THROWS_AS(bad.inverse(), value_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto r = random_unit_series(4, 2, 3, rng);
    CHECK(r * r.inverse() == TruncatedSeries::one(4, 2, 3));
    CHECK(r.inverse() * r == TruncatedSeries::one(4, 2, 3));
  }
}

TEST_CASE("multiplication is associative and unital") {
  std::mt19937_64 rng(11);
  auto one = TruncatedSeries::one(6, 2, 3);
  for (int i = 0; i < 10; ++i) {
    auto a = random_unit_series(6, 2, 3, rng);
    auto b = random_unit_series(6, 2, 3, rng);
    auto c = random_unit_series(6, 2, 3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * one == a);
    CHECK(one * a == a);
  }
}

TEST_CASE("v_degree") {
  auto one = TruncatedSeries::one(2, 2, 3);
  CHECK(one.v_degree() == 4);
  auto s = TruncatedSeries::generator_unit(2, 2, 3, 0);
  CHECK(s.v_degree() == 1);
  auto comm = magnus(GroupWord::parse("[a0,a1]"), 2, 2, 3);
  CHECK(comm.v_degree() == 2);
  CHECK_THROWS_AS(TruncatedSeries(2, 2, 3).v_degree(), value_error);
}

TEST_CASE("magnus expansion basics") {
  CHECK(magnus(GroupWord{}, 3, 2, 2) == TruncatedSeries::one(3, 2, 2));
  auto a = magnus(GroupWord::generator(0), 5, 2, 2);
  CHECK(a.coeff({0}) == 1);
  CHECK(a.coeff({1}) == 0);
  CHECK(a.coeff({0, 0}) == 0);

  auto comm = magnus(GroupWord::parse("[a0,a1]"), 2, 2, 2);
  CHECK(comm.str() == "1 + X[0,1] + X[1,0]");
}

TEST_CASE("epsilon coefficients") {
  auto a = GroupWord::generator(0);
  auto b = GroupWord::generator(1);
  CHECK(epsilon({0}, a, 7, 2) == 1);
  CHECK(epsilon({1}, a, 7, 2) == 0);
  CHECK(epsilon({}, a * b, 7, 2) == 1);
  for (std::uint32_t m : {2u, 3u, 5u}) {
    CHECK(epsilon({0, 1}, commutator(a, b), m, 2) == 1);
    CHECK(epsilon({1, 0}, commutator(a, b), m, 2) == m - 1);
  }
}

TEST_CASE("truncation coherence") {
  auto g = GroupWord::parse("a0^2*[a0,a1]*a1^-1");
  auto lo = magnus(g, 3, 2, 2);
  auto hi = magnus(g, 3, 2, 5);
  CHECK(hi.truncate(2) == lo);
}

TEST_CASE("series text round trip") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto s = random_unit_series(4, 2, 3, rng);
    CHECK(TruncatedSeries::parse(s.str(), 4, 2, 3) == s);
  }
  CHECK(TruncatedSeries::parse("0", 3, 2, 2) == TruncatedSeries(3, 2, 2));
  CHECK(TruncatedSeries::parse("1", 3, 2, 2) == TruncatedSeries::one(3, 2, 2));
}
