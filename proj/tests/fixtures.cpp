#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace fx {

AlgebraPtr linear_quiver(std::size_t n, std::uint32_t p) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) a.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return BoundQuiverAlgebra::create(PrimeField(p), Quiver(v, a), {});
}

Representation interval(const AlgebraPtr& alg, std::size_t i, std::size_t j) {
  const auto n = alg->vertex_count();
  std::vector<std::size_t> d(n, 0);
  for (auto k = i; k <= j; ++k) d[k] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : alg->quiver().arrows()) {
    Matrix x(alg->field(), d[a.target], d[a.source]);
    if (d[a.source] && d[a.target]) x(0, 0) = 1;
    maps.push_back(x);
  }
  return Representation(alg, d, maps);
}

Representation simple(const AlgebraPtr& alg, std::size_t v) {
  std::vector<std::size_t> d(alg->vertex_count(), 0);
  d[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : alg->quiver().arrows()) maps.emplace_back(alg->field(), d[a.target], d[a.source]);
  return Representation(alg, d, maps);
}

std::vector<Representation> all_intervals(const AlgebraPtr& alg) {
  std::vector<Representation> out;
  for (std::size_t i = 0; i < alg->vertex_count(); ++i)
    for (auto j = i; j < alg->vertex_count(); ++j) out.push_back(interval(alg, i, j));
  return out;
}

AlgebraPtr random_quiver(std::uint64_t seed, std::uint32_t p, bool with_relations) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 2 + rng() % 3;
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto count = rng() % 3 == 0 ? 0 : 1 + (rng() % 4 == 0 ? 1 : 0);
      for (std::size_t k = 0; k < count; ++k)
        arrows.push_back({"x" + std::to_string(arrows.size()), i, j});
    }
  if (arrows.empty()) arrows.push_back({"x0", 0, 1});
  std::vector<Relation> rels;
  if (with_relations)
    for (std::size_t a = 0; a < arrows.size(); ++a)
      for (std::size_t b = 0; b < arrows.size(); ++b)
        if (arrows[a].target == arrows[b].source && rng() % 2 == 0) rels.push_back({a, b});
  return BoundQuiverAlgebra::create(PrimeField(p), Quiver(v, arrows), rels);
}

namespace {

// P(v) -> P(u) for a: u -> v, sending a path q from v to the path "a then q".
RepMorphism precompose_arrow(const AlgebraPtr& algebra, std::size_t a) {
  const auto& alg = *algebra;
  const auto& arrow = alg.quiver().arrow(a);
  auto pv = indec_projective(algebra, arrow.target);
  auto pu = indec_projective(algebra, arrow.source);
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < alg.vertex_count(); ++x) {
    Matrix m(alg.field(), pu.dim(x), pv.dim(x));
    const auto& cols = alg.paths_between(arrow.target, x);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Path p = alg.path(cols[c]);
      p.arrows.insert(p.arrows.begin(), a);
      p.source = arrow.source;
      if (auto idx = alg.find(p)) m(alg.local_index(*idx), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return RepMorphism(pv, pu, std::move(maps));
}

}  // namespace

Representation nakayama_via_hom(const Representation& m) {
  const auto& algebra = m.algebra();
  const auto& alg = *algebra;
  std::vector<HomSpace> homs;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) homs.emplace_back(m, indec_projective(algebra, v));
  std::vector<std::size_t> dims;
  for (const auto& h : homs) dims.push_back(h.dim());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arrow = alg.quiver().arrow(a);
    const auto la = precompose_arrow(algebra, a);
    const auto& from = homs[arrow.target];
    const auto& to = homs[arrow.source];
    Matrix post(alg.field(), to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
      const auto c = to.coordinates(compose(la, from[k]));
      for (std::size_t r = 0; r < to.dim(); ++r) post(r, k) = c[r];
    }
    maps.push_back(post.transposed());
  }
  return Representation(algebra, dims, maps);
}

bool morphisms_isomorphic(const RepMorphism& a, const RepMorphism& b) {
  if (!(a.target() == b.target())) return false;
  auto phi = factors_through(a, b);  // b∘phi = a
  auto psi = factors_through(b, a);  // a∘psi = b
  if (!phi || !psi) return false;
  return compose(*psi, *phi).is_isomorphism() && compose(*phi, *psi).is_isomorphism();
}

std::vector<Matrix> gamma_submodules(const HomSpace& hom) {
  const auto& field = hom.source().field();
  const auto d = hom.dim();
  // All vectors of F_p^d.
  std::vector<std::vector<Residue>> vectors;
  std::vector<Residue> v(d, 0);
  for (;;) {
    vectors.push_back(v);
    std::size_t i = 0;
    while (i < d && ++v[i] == field.modulus()) v[i++] = 0;
    if (i == d) break;
  }
  std::vector<Matrix> found{Matrix(field, d, 0)};
  std::set<std::vector<Residue>> seen{found.front().entries()};
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& w : vectors) {
      if (in_span(found[k], w)) continue;
      auto next = canonical_span(hstack(found[k], Matrix::column_vector(field, w)));
      auto key = next.entries();
      key.push_back(static_cast<Residue>(next.cols()));
      if (seen.insert(key).second) found.push_back(next);
    }
  std::vector<Matrix> closed;
  for (const auto& s : found)
    if (is_gamma_closed(hom, s)) closed.push_back(s);
  return closed;
}

std::vector<RepMorphism> morphisms_up_to_scalar(const HomSpace& hom) {
  const auto& field = hom.source().field();
  const auto d = hom.dim();
  std::vector<RepMorphism> out{RepMorphism::zero(hom.source(), hom.target())};
  std::vector<Residue> v(d, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < d && ++v[i] == field.modulus()) v[i++] = 0;
    if (i == d) break;
    // keep vectors whose first nonzero entry is 1
    auto first = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    if (*first == 1) out.push_back(hom.element(v));
  }
  return out;
}

}  // namespace fx
