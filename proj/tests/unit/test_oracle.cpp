#include "doctest.h"
#include "fixtures.hpp"
#include "morphdet/error.hpp"
#include "morphdet/oracle.hpp"

using namespace morphdet;

TEST_CASE("isomorphism classes of small A2 modules") {
  auto a2 = fx::linear_quiver(2, 5);
  // multisets of S1, S2, P1 within the bounds
  CHECK(enumerate_test_modules(a2, {1, 1}).size() == 5);
  CHECK(enumerate_test_modules(a2, {2, 2}).size() == 14);
  CHECK(enumerate_test_modules(a2, {2, 0}).size() == 3);
}

TEST_CASE("isomorphism classes of Kronecker modules of dimension (1,1)") {
  auto k = BoundQuiverAlgebra::create(PrimeField(2), Quiver({"1", "2"}, {{"x", 0, 1}, {"y", 0, 1}}), {});
  // 0, S1, S2, S1 ⊕ S2 and one indecomposable for each point of P^1(F_2)
  CHECK(enumerate_test_modules(k, {1, 1}).size() == 7);
  CHECK_THROWS_AS(enumerate_test_modules(k, {3, 3}, 1000), PreconditionError);
}

TEST_CASE("enumerated modules are pairwise non-isomorphic") {
  auto a3 = fx::linear_quiver(3, 2);
  auto mods = enumerate_test_modules(a3, {1, 2, 1});
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j) CHECK_FALSE(is_isomorphic(mods[i], mods[j]));
}

TEST_CASE("refutation") {
  auto a2 = fx::linear_quiver(2, 5);
  auto s1 = fx::simple(a2, 0), s2 = fx::simple(a2, 1), p1 = fx::interval(a2, 0, 1);
  auto cover = hom_space(p1, s1)[0];
  auto family = enumerate_test_modules(a2, {2, 2});
  auto w = refute_determination(cover, s2, family);
  REQUIRE(w);
  CHECK(w->target() == s1);
  CHECK_FALSE(factors_through(*w, cover));
  CHECK_FALSE(refute_determination(cover, s1, family));
}

TEST_CASE("random generators") {
  auto a3 = fx::linear_quiver(3, 7);
  auto m = random_representation(a3, {2, 1, 2}, 4);
  CHECK(m == random_representation(a3, {2, 1, 2}, 4));
  auto f = random_morphism(m, m, 2);
  CHECK(f == random_morphism(m, m, 2));
  auto bound = BoundQuiverAlgebra::create(PrimeField(2), Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}), {{0, 1}});
  CHECK_THROWS_AS(random_representation(bound, {1, 1, 1}, 0), PreconditionError);
}

TEST_CASE("enumeration edge cases over F_2") {
  auto a2 = fx::linear_quiver(2, 2);
  CHECK(enumerate_test_modules(a2, {1, 1}).size() == 5);
  auto zero = enumerate_test_modules(a2, {0, 0});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_zero());
  auto point = BoundQuiverAlgebra::create(PrimeField(2), Quiver({"1"}, {}), {});
  CHECK(enumerate_test_modules(point, {1}).size() == 2);
}

TEST_CASE("refutation on the smallest family") {
  auto a2 = fx::linear_quiver(2, 2);
  auto s1 = fx::simple(a2, 0), s2 = fx::simple(a2, 1), p1 = fx::interval(a2, 0, 1);
  auto cover = hom_space(p1, s1)[0];
  auto family = enumerate_test_modules(a2, {1, 1});
  auto w = refute_determination(cover, s2, family);
  REQUIRE(w);
  CHECK(w->source() == s1);
  CHECK(w->is_isomorphism());
  CHECK_FALSE(refute_determination(cover, s1, family));
  for (const auto& y : family)
    for (const auto& c : family) CHECK_FALSE(refute_determination(RepMorphism::identity(y), c, family));
}

TEST_CASE("refutation succeeds on the family built from the comparison morphism") {
  auto a3 = fx::linear_quiver(3, 5);
  auto ints = fx::all_intervals(a3);
  std::size_t negatives = 0;
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto x = random_representation(a3, {1, 1, s % 2}, s);
    auto y = random_representation(a3, {1, 1 + s % 2, 1}, s + 3);
    auto f = random_morphism(x, y, s);
    for (const auto& c : ints) {
      auto d = decide_right_determined(f, c);
      if (d.verdict) continue;
      ++negatives;
      std::vector<Representation> family{d.comparison.source()};
      if (d.counterexample) family.push_back(d.counterexample->source());
      CHECK(refute_determination(f, c, family));
    }
  }
  CHECK(negatives > 0);
}
