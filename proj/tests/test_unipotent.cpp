#include <doctest.h>

#include <random>

#include "zlab/unipotent.hpp"

using namespace zlab;

namespace {

Unipotent random_unipotent(std::uint32_t dim, std::uint32_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, Unipotent::group_order(dim, m) - 1);
  return Unipotent::from_rank(dim, m, d(rng));
}

}  // namespace

TEST_CASE("group law and inverses") {
  CHECK(Unipotent::group_order(3, 2) == 8);
  CHECK(Unipotent::group_order(4, 3) == 729);
  CHECK(PuncturedUnipotent::group_order(4, 2) == 32);

  std::mt19937_64 rng(31);
  for (std::uint32_t m : {2u, 3u, 4u}) {
    Unipotent id(4, m);
    for (int i = 0; i < 50; ++i) {
      auto x = random_unipotent(4, m, rng);
      auto y = random_unipotent(4, m, rng);
      auto z = random_unipotent(4, m, rng);
      CHECK(id * x == x);
      CHECK(x * x.inverse() == id);
      CHECK(x.inverse() * x == id);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("forgetful projection") {
  std::mt19937_64 rng(37);
  PuncturedUnipotent pid(4, 3);
  CHECK(forget_corner(Unipotent(4, 3)) == pid);
  for (int i = 0; i < 50; ++i) {
    auto x = random_unipotent(4, 3, rng);
    auto y = random_unipotent(4, 3, rng);
    CHECK(forget_corner(x * y) == forget_corner(x) * forget_corner(y));
  }
  // fibers: every corner value lifts, and only the corner varies
  auto q = forget_corner(random_unipotent(4, 3, rng));
  for (std::uint32_t r = 0; r < 3; ++r) {
    auto lift = with_corner(q, r);
    CHECK(forget_corner(lift) == q);
    CHECK(lift.at(0, 3) == r);
  }
  CHECK_THROWS_AS(q.at(0, 3), parameter_error);
}

TEST_CASE("punctured group law never reads the corner") {
  std::mt19937_64 rng(41);
  PuncturedUnipotent id(5, 2);
  for (int i = 0; i < 30; ++i) {
    auto x = forget_corner(random_unipotent(5, 2, rng));
    auto y = forget_corner(random_unipotent(5, 2, rng));
    CHECK(x * x.inverse() == id);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
  }
}

TEST_CASE("ladder maps gamma1 and gamma2") {
  Word w = {0, 1};
  auto a = GroupWord::generator(0);

  auto g = gamma1(w, GroupWord{}, 5);
  CHECK(g.is_identity());

  auto ga = gamma1(w, a, 5);
  CHECK(ga.at(0, 1) == 1);
  CHECK(ga.at(1, 2) == 0);
  CHECK(ga.at(0, 2) == 0);

  auto gc = gamma1(w, GroupWord::parse("[a0,a1]"), 5);
  CHECK(gc.at(0, 2) == 1);

  // homomorphism property for both sign conventions
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<std::uint32_t> gen(0, 1);
  std::uniform_int_distribution<std::int64_t> ex(-2, 2);
  auto rand_word = [&] {
    GroupWord g2;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      auto e = ex(rng);
      if (e) g2 = g2 * GroupWord::generator(gen(rng), e);
    }
    return g2;
  };
  for (Word word : {Word{0, 1}, Word{0, 1, 0}, Word{1, 1, 0, 1}}) {
    for (int i = 0; i < 20; ++i) {
      auto x = rand_word();
      auto y = rand_word();
      for (std::uint32_t m : {2u, 3u}) {
        CHECK(gamma1(word, x * y, m) == gamma1(word, x, m) * gamma1(word, y, m));
        CHECK(gamma2(word, x * y, m) == gamma2(word, x, m) * gamma2(word, y, m));
      }
    }
  }
}

TEST_CASE("representations factor through the quotient") {
  Quotient Q = Quotient::build(2, 2, 3);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::uint64_t> d(0, Unipotent::group_order(3, 2) - 1);
  auto images = std::vector<Unipotent>{Unipotent::from_rank(3, 2, d(rng)),
                                       Unipotent::from_rank(3, 2, d(rng))};
  auto rep = representation(Q, images);
  CHECK(is_representation(Q.table(), rep));
  // trivial representation
  auto triv = representation(Q, {Unipotent(3, 2), Unipotent(3, 2)});
  for (const auto& u : triv) CHECK(u.is_identity());
  // kernel contains the level-3 filtration image
  for (int e : Q.filtration_image(3)) CHECK(rep[static_cast<std::size_t>(e)].is_identity());
  // factoring requires m >= dimension
  CHECK_THROWS_AS(representation(Quotient::build(2, 2, 2), images), parameter_error);
}

TEST_CASE("gamma images of deep elements are trivial in the punctured group") {
  // any punctured map of dimension d+1 kills filtration level d
  Quotient Q = Quotient::build(2, 2, 4);
  Word w = {0, 1, 0};
  for (int e : Q.filtration_image(3)) {
    auto img = forget_corner(gamma2(w, Q.witness(e), 2));
    CHECK(img.is_identity());
  }
}

TEST_CASE("kernel intersection at small parameters") {
  Quotient Q = Quotient::build(2, 2, 3);
  auto ki = kernel_intersection(Q, 2);
  CHECK(ki.reps_total == 4);
  CHECK(ki.elements == Q.filtration_image(2));

  // the intersection is a normal subgroup containing the filtration image
  auto ki3 = kernel_intersection(Q, 3);
  std::vector<char> in(static_cast<std::size_t>(Q.order()), 0);
  for (int e : ki3.elements) in[static_cast<std::size_t>(e)] = 1;
  for (int e : Q.filtration_image(3)) CHECK(in[static_cast<std::size_t>(e)]);
  for (int e : ki3.elements)
    for (int g = 0; g < Q.order(); ++g)
      CHECK(in[static_cast<std::size_t>(Q.product(Q.product(Q.inverse_of(g), e), g))]);
}

TEST_CASE("fiber product structure") {
  Quotient Q = Quotient::build(2, 2, 3);
  const GroupTable& G = Q.table();
  // trivial punctured map: the fiber product is the direct product Z/2 x G
  std::vector<PuncturedUnipotent> triv(static_cast<std::size_t>(G.order),
                                       PuncturedUnipotent(4, 2));
  GroupTable B = fiber_product(triv, G);
  CHECK(B.order == 2 * G.order);
  // kernel of the projection is central
  int kelem = 1 * G.order + G.identity;
  for (int x = 0; x < B.order; ++x) CHECK(B.product(kelem, x) == B.product(x, kelem));

  // non-homomorphisms are rejected
  std::vector<PuncturedUnipotent> bad = triv;
  bad[static_cast<std::size_t>(G.identity)].set(0, 1, 1);
  CHECK_THROWS_AS(fiber_product(bad, G), value_error);
}
