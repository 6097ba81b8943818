#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "morphdet/error.hpp"
#include "morphdet/oracle.hpp"

using namespace morphdet;

namespace {

AlgebraPtr kronecker(std::uint32_t p) {
  return BoundQuiverAlgebra::create(PrimeField(p), Quiver({"1", "2"}, {{"x", 0, 1}, {"y", 0, 1}}), {});
}

// |Hom(m, n)| by enumerating every tuple of vertex maps.
std::size_t brute_force_hom_count(const Representation& m, const Representation& n) {
  const auto amb = hom_ambient_dim(m, n);
  const auto p = m.field().modulus();
  std::vector<Residue> v(amb, 0);
  std::size_t count = 0;
  for (;;) {
    auto f = RepMorphism::unchecked(m, n, devectorize(m, n, v).maps());
    bool ok = true;
    for (std::size_t a = 0; a < m.algebra()->arrow_count() && ok; ++a) {
      const auto& arrow = m.algebra()->quiver().arrow(a);
      ok = n.map(a) * f.map(arrow.source) == f.map(arrow.target) * m.map(a);
    }
    count += ok;
    std::size_t i = 0;
    while (i < amb && ++v[i] == p) v[i++] = 0;
    if (i == amb) return count;
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Representation base_change(const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& f = m.field();
  std::vector<Matrix> g, ginv;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix x(f, m.dim(v), m.dim(v));
    std::optional<Matrix> inv;
    do {
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = static_cast<Residue>(rng() % f.modulus());
      inv = inverse(x);
    } while (!inv);
    g.push_back(x);
    ginv.push_back(*inv);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.algebra()->arrow_count(); ++a) {
    const auto& arrow = m.algebra()->quiver().arrow(a);
    maps.push_back(g[arrow.target] * m.map(a) * ginv[arrow.source]);
  }
  return Representation(m.algebra(), m.dims(), maps);
}

}  // namespace

TEST_CASE("Hom dimension matches exhaustive count") {
  auto k = kronecker(2);
  for (std::uint64_t s = 0; s < 12; ++s) {
    auto m = random_representation(k, {1 + s % 2, 1 + (s / 2) % 2}, s);
    auto n = random_representation(k, {1 + (s / 3) % 2, 1}, s + 100);
    CHECK(ipow(2, hom_space(m, n).dim()) == brute_force_hom_count(m, n));
  }
  auto a3 = fx::linear_quiver(3, 3);
  for (const auto& m : fx::all_intervals(a3))
    for (const auto& n : fx::all_intervals(a3)) CHECK(ipow(3, hom_space(m, n).dim()) == brute_force_hom_count(m, n));
}

TEST_CASE("interval Hom spaces of A_n") {
  // Hom([i,j],[k,l]) = k iff k ≤ i ≤ l ≤ j
  auto a4 = fx::linear_quiver(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = k; l < 4; ++l) {
          const std::size_t expected = (k <= i && i <= l && l <= j) ? 1 : 0;
          CHECK(hom_space(fx::interval(a4, i, j), fx::interval(a4, k, l)).dim() == expected);
        }
}

TEST_CASE("kernel, image and cokernel") {
  auto k = kronecker(3);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = random_representation(k, {2, 2}, s);
    auto n = random_representation(k, {1, 2}, s + 50);
    auto f = random_morphism(m, n, s);
    auto ker = kernel(f), im = image(f);
    auto cok = cokernel(f);
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK(ker.object.dim(v) + im.object.dim(v) == m.dim(v));
      CHECK(cok.object.dim(v) + im.object.dim(v) == n.dim(v));
    }
    CHECK(compose(f, ker.inclusion).is_zero());
    CHECK(compose(cok.projection, f).is_zero());
    CHECK(ker.inclusion.is_monomorphism());
    CHECK(cok.projection.is_epimorphism());
  }
}

TEST_CASE("pullback") {
  auto a3 = fx::linear_quiver(3);
  auto p1 = indec_projective(a3, 0);
  auto s1 = fx::simple(a3, 0);
  auto cov = hom_space(p1, s1)[0];
  auto pb = pullback(cov, cov);
  CHECK(compose(cov, pb.to_first) == compose(cov, pb.to_second));
  CHECK(pb.object.total_dim() == 2 * p1.total_dim() - 1);
}

TEST_CASE("projective cover and presentation") {
  auto a3 = fx::linear_quiver(3);
  for (const auto& m : fx::all_intervals(a3)) {
    auto pres = minimal_projective_presentation(m);
    CHECK(pres.p0_map.is_epimorphism());
    CHECK(compose(pres.p0_map, pres.p1_map).is_zero());
    CHECK(pres.p0.summands.size() == 1);
    CHECK(pres.p1.summands.size() <= 1);
    auto ker = kernel(pres.p0_map);
    auto im = image(pres.p1_map);
    for (std::size_t v = 0; v < 3; ++v) CHECK(same_span(ker.inclusion.map(v), im.inclusion.map(v)));
  }
}

TEST_CASE("duality, transpose and Auslander-Reiten translate on A_n") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto alg = fx::linear_quiver(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        auto m = fx::interval(alg, i, j);
        CHECK(dualize(dualize(m), alg) == m);
        auto t = tau(m);
        if (j == n - 1) {
          CHECK(t.is_zero());
        } else {
          CHECK(is_isomorphic(t, fx::interval(alg, i + 1, j + 1)));
          CHECK(is_isomorphic(tau_inverse(t), m));
        }
        if (i == 0) CHECK(tau_inverse(m).is_zero());
      }
  }
}

TEST_CASE("nakayama functor matches D Hom(-, Λ)") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto alg = fx::random_quiver(s, 3, false);
    std::vector<std::size_t> dims(alg->vertex_count(), 1);
    auto m = random_representation(alg, dims, s);
    CHECK(is_isomorphic(nakayama_module(m), fx::nakayama_via_hom(m)));
  }
}

TEST_CASE("decomposition of direct sums") {
  auto a3 = fx::linear_quiver(3);
  auto ints = fx::all_intervals(a3);
  std::vector<Representation> parts{ints[0], ints[3], ints[0], ints[5], ints[1]};
  auto sum = base_change(direct_sum_module(parts, a3), 9);
  auto summands = decompose(sum);
  REQUIRE(summands.size() == parts.size());
  std::vector<bool> used(parts.size(), false);
  for (const auto& s : summands) {
    CHECK(is_indecomposable(s.module));
    CHECK(compose(s.projection, s.inclusion).is_isomorphism());
    CHECK(compose(s.projection, s.inclusion) == RepMorphism::identity(s.module));
    bool matched = false;
    for (std::size_t k = 0; k < parts.size() && !matched; ++k)
      if (!used[k] && is_isomorphic(s.module, parts[k])) used[k] = matched = true;
    CHECK(matched);
  }
  // Σ inclusion ∘ projection = id
  auto total = RepMorphism::zero(sum, sum);
  for (const auto& s : summands) total = total + compose(s.inclusion, s.projection);
  CHECK(total == RepMorphism::identity(sum));
}

TEST_CASE("Kronecker decomposition preserves dimension") {
  auto k = kronecker(2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = random_representation(k, {2 + s % 2, 2}, s);
    auto parts = indecomposable_decomposition(m);
    std::vector<std::size_t> dims(2, 0);
    for (const auto& p : parts) {
      CHECK(is_indecomposable(p));
      for (std::size_t v = 0; v < 2; ++v) dims[v] += p.dim(v);
    }
    CHECK(dims == m.dims());
    CHECK(is_isomorphic(direct_sum_module(parts, k), m));
  }
}

TEST_CASE("isomorphism test") {
  auto k = kronecker(5);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = random_representation(k, {2, 2}, s);
    auto n = base_change(m, s + 1);
    auto iso = is_isomorphic(m, n, s);
    REQUIRE(iso);
    CHECK(iso->is_isomorphism());
  }
  auto a2 = fx::linear_quiver(2);
  auto sum = direct_sum_module(std::vector{fx::simple(a2, 0), fx::simple(a2, 1)}, a2);
  CHECK_FALSE(is_isomorphic(sum, fx::interval(a2, 0, 1)));
  CHECK(add_member(fx::simple(a2, 1), sum));
  CHECK_FALSE(add_member(fx::interval(a2, 0, 1), sum));
}

TEST_CASE("right minimal version") {
  auto a3 = fx::linear_quiver(3);
  auto ints = fx::all_intervals(a3);
  auto y = ints[0];
  auto extra = direct_sum_module(std::vector{ints[4], ints[0]}, a3);
  // (id, 0)
  auto g = join_morphisms(y, std::vector{RepMorphism::identity(y), RepMorphism::zero(extra, y)});
  auto rm = right_minimalize(g);
  CHECK(is_isomorphic(rm.minimal.source(), y));
  CHECK(is_isomorphic(rm.null_part.object, extra));
  CHECK(compose(g, rm.null_part.inclusion).is_zero());
  CHECK(compose(g, rm.inclusion) == rm.minimal);
  CHECK(compose(rm.projection, rm.inclusion) == RepMorphism::identity(rm.minimal.source()));
  CHECK(is_right_minimal(rm.minimal));
  CHECK_FALSE(is_right_minimal(g));
  CHECK(is_right_minimal(RepMorphism::identity(y)));
}

TEST_CASE("right minimal version of random morphisms") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto alg = fx::random_quiver(s, 3, false);
    std::vector<std::size_t> dx(alg->vertex_count(), 1), dy(alg->vertex_count(), 1);
    dx[0] = 2;
    auto x = random_representation(alg, dx, s);
    auto y = random_representation(alg, dy, s + 1);
    auto f = random_morphism(x, y, s);
    auto rm = right_minimalize(f, s);
    CHECK(is_right_minimal(rm.minimal));
    CHECK(compose(f, rm.inclusion) == rm.minimal);
    CHECK(compose(f, rm.null_part.inclusion).is_zero());
    CHECK(rm.minimal.source().total_dim() + rm.null_part.object.total_dim() == x.total_dim());
  }
}
