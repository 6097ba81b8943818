#include "doctest.h"
#include "morphdet/error.hpp"
#include "morphdet/poset.hpp"

using namespace morphdet;

TEST_CASE("closure and validation") {
  FinitePoset p({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.le(0, 2));
  CHECK(p.le(1, 1));
  CHECK_FALSE(p.le(2, 0));
  CHECK(p.cover_relations().size() == 2);
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, {{true, true}, {true, true}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, {{false, false}, {false, true}}), InputError);
  CHECK(p.index("c") == 2);
}

TEST_CASE("chain determinators") {
  auto chain = FinitePoset::chain(6);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = x; y < 6; ++y)
      for (std::size_t c = 0; c < 6; ++c) {
        const bool expected = x == y || c == x + 1;
        CHECK(object_determines(chain, x, y, c) == expected);
      }
  CHECK_THROWS_AS(determinator_candidates(chain, 3, 1), PreconditionError);
}

TEST_CASE("diamond") {
  // 0 < 1, 0 < 2, 1 < 3, 2 < 3
  FinitePoset d({"0", "1", "2", "3"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(determinator_candidates(d, 0, 3) == std::vector<std::size_t>{1, 2, 3});
  for (std::size_t c = 0; c < 4; ++c) CHECK_FALSE(object_determines(d, 0, 3, c));
  CHECK(class_determined(d, 0, 3, {1, 2}));
  CHECK_FALSE(class_determined(d, 0, 3, {3}));
  CHECK(object_determines(d, 1, 3, 2));
  CHECK(object_determines(d, 0, 1, 1));
}

TEST_CASE("criterion matches definition on random posets") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = random_poset(1 + seed % 6, seed);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.le(x, y)) continue;
        for (std::size_t c = 0; c < p.size(); ++c)
          CHECK(object_determines_criterion(p, x, y, c) == object_determines_definition(p, x, y, c));
      }
  }
}

TEST_CASE("candidate sets") {
  auto chain = FinitePoset::chain(3);
  CHECK(determinator_candidates(chain, 0, 2) == std::vector<std::size_t>{1, 2});
  CHECK(determinator_candidates(chain, 1, 1).empty());
  // x < y, a < y, b < y only
  FinitePoset over({"x", "a", "b", "y"}, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(determinator_candidates(over, 0, 3) == std::vector<std::size_t>{1, 2, 3});
  CHECK_FALSE(object_determines(over, 0, 3, 1));
  CHECK(class_determined(over, 0, 3, {1, 2}));
  CHECK(object_determines(chain, 0, 2, 1));
  CHECK_FALSE(object_determines(chain, 0, 2, 2));
}

TEST_CASE("class determination is monotone and agrees with single objects") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto p = random_poset(1 + seed % 5, seed + 1000);
    const auto n = p.size();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!p.le(x, y)) continue;
        CHECK(class_determined(p, x, y, all));
        CHECK(class_determined(p, x, y, {}) == (x == y));
        for (std::size_t c = 0; c < n; ++c) {
          CHECK(class_determined(p, x, y, {c}) == object_determines(p, x, y, c));
          for (std::size_t d = 0; d < n; ++d)
            if (class_determined(p, x, y, {c})) CHECK(class_determined(p, x, y, {c, d}));
        }
      }
  }
}
