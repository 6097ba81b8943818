#include "morphdet/rep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "morphdet/error.hpp"

namespace morphdet {

namespace {

void require_same_algebra(const Representation& m, const Representation& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InputError("modules over different algebras");
}

std::vector<std::size_t> column_pivots(const Matrix& basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::size_t r = 0;
    while (r < basis.rows() && basis(r, c) == 0) ++r;
    pivots.push_back(r);
  }
  return pivots;
}

}  // namespace

HomSpace::HomSpace(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(source_, target_);
  const auto& alg = *source_.algebra();
  const auto field = alg.field();
  std::vector<std::size_t> offset(alg.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) offset[v + 1] = offset[v] + source_.dim(v) * target_.dim(v);
  const auto unknowns = offset.back();
  std::size_t equations = 0;
  for (const auto& a : alg.quiver().arrows()) equations += target_.dim(a.target) * source_.dim(a.source);
  Matrix sys(field, equations, unknowns);
  std::size_t row0 = 0;
  // N_a F_u − F_v M_a = 0 for a: u -> v; F_x is row-major (dim N_x) x (dim M_x).
  for (std::size_t ai = 0; ai < alg.arrow_count(); ++ai) {
    const auto& a = alg.quiver().arrow(ai);
    const auto u = a.source, v = a.target;
    const auto& na = target_.map(ai);
    const auto& ma = source_.map(ai);
    const auto mu = source_.dim(u), nu = target_.dim(u), nv = target_.dim(v);
    for (std::size_t r = 0; r < nv; ++r)
      for (std::size_t c = 0; c < mu; ++c) {
        const auto row = row0 + r * mu + c;
        for (std::size_t k = 0; k < nu; ++k)
          if (na(r, k) != 0) sys(row, offset[u] + k * mu + c) = field.add(sys(row, offset[u] + k * mu + c), na(r, k));
        const auto mv = source_.dim(v);
        for (std::size_t k = 0; k < mv; ++k)
          if (ma(k, c) != 0)
            sys(row, offset[v] + r * mv + k) = field.sub(sys(row, offset[v] + r * mv + k), ma(k, c));
      }
    row0 += nv * mu;
  }
  ambient_ = kernel_basis(sys);
  pivots_ = column_pivots(ambient_);
  for (std::size_t c = 0; c < ambient_.cols(); ++c) basis_.push_back(devectorize(source_, target_, ambient_.column(c)));
}

std::vector<Residue> HomSpace::coordinates(const RepMorphism& f) const {
  if (!(f.source() == source_) || !(f.target() == target_))
    throw std::invalid_argument("coordinates: morphism between other objects");
  const auto v = vectorize(f);
  const auto& field = source_.field();
  std::vector<Residue> c(dim());
  std::vector<Residue> check(v.size(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (c[i] == 0) continue;
    for (std::size_t r = 0; r < v.size(); ++r) check[r] = field.add(check[r], field.mul(c[i], ambient_(r, i)));
  }
  if (check != v) throw std::invalid_argument("coordinates: not a morphism");
  return c;
}

RepMorphism HomSpace::element(std::span<const Residue> coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("HomSpace::element: coefficient count");
  const auto& field = source_.field();
  std::vector<Residue> v(ambient_.rows(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = field.add(v[r], field.mul(coeffs[i], ambient_(r, i)));
  }
  return devectorize(source_, target_, v);
}

HomSpace hom_space(const Representation& m, const Representation& n) { return HomSpace(m, n); }

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n) {
  return HomSpace(m, n).basis();
}

EndAlgebra end_algebra(const Representation& m) {
  HomSpace hom(m, m);
  const auto field = m.field();
  const auto d = hom.dim();
  std::vector<Matrix> left(d, Matrix(field, d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = hom.coordinates(compose(hom[i], hom[j]));
      for (std::size_t k = 0; k < d; ++k) left[i](k, j) = c[k];
    }
  std::vector<Matrix> action;
  for (const auto& b : hom.basis()) action.push_back(block_diagonal(b.maps(), field));
  Element unit = d == 0 ? Element{} : hom.coordinates(RepMorphism::identity(m));
  FDAlgebra alg(field, std::move(left), std::move(unit), std::move(action));
  return {std::move(hom), std::move(alg)};
}

Subobject submodule(const Representation& m, const std::vector<Matrix>& subspaces) {
  const auto& alg = *m.algebra();
  if (subspaces.size() != alg.vertex_count()) throw std::invalid_argument("submodule: subspace count");
  std::vector<std::size_t> dims;
  for (const auto& s : subspaces) dims.push_back(s.cols());
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < alg.arrow_count(); ++ai) {
    const auto& a = alg.quiver().arrow(ai);
    auto x = solve_right(subspaces[a.target], m.map(ai) * subspaces[a.source]);
    if (!x) throw PreconditionError("subspaces are not closed under the arrows");
    maps.push_back(std::move(*x));
  }
  auto sub = make_unchecked(m.algebra(), std::move(dims), std::move(maps));
  auto inc = RepMorphism::unchecked(sub, m, subspaces);
  return {std::move(sub), std::move(inc)};
}

Subobject kernel(const RepMorphism& f) {
  std::vector<Matrix> spaces;
  for (const auto& m : f.maps()) spaces.push_back(kernel_basis(m));
  return submodule(f.source(), spaces);
}

Subobject image(const RepMorphism& f) {
  std::vector<Matrix> spaces;
  for (const auto& m : f.maps()) spaces.push_back(image_basis(m));
  return submodule(f.target(), spaces);
}

QuotientObject cokernel(const RepMorphism& f) {
  const auto& t = f.target();
  const auto& alg = *t.algebra();
  std::vector<QuotientMap> q;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    q.push_back(quotient_map(image_basis(f.map(v)), t.dim(v)));
    dims.push_back(q.back().projection.rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < alg.arrow_count(); ++ai) {
    const auto& a = alg.quiver().arrow(ai);
    maps.push_back(q[a.target].projection * t.map(ai) * q[a.source].section);
  }
  auto obj = make_unchecked(t.algebra(), std::move(dims), std::move(maps));
  std::vector<Matrix> proj;
  for (auto& x : q) proj.push_back(std::move(x.projection));
  auto p = RepMorphism::unchecked(t, obj, std::move(proj));
  return {std::move(obj), std::move(p)};
}

Pullback pullback(const RepMorphism& f, const RepMorphism& g) {
  if (!(f.target() == g.target())) throw std::invalid_argument("pullback: targets differ");
  const auto& alg = f.source().algebra();
  std::vector<Representation> parts{f.source(), g.source()};
  auto ds = direct_sum(parts, alg);
  const auto minus_one = f.source().field().neg(1);
  std::vector<RepMorphism> legs{compose(f, ds.projections[0]), compose(g.scaled(minus_one), ds.projections[1])};
  auto h = legs[0] + legs[1];
  auto k = kernel(h);
  auto to_first = compose(ds.projections[0], k.inclusion);
  auto to_second = compose(ds.projections[1], k.inclusion);
  return {k.object, std::move(to_first), std::move(to_second)};
}

ProjectiveCover projective_cover(const Representation& m) {
  const auto& alg = *m.algebra();
  const auto field = alg.field();
  std::vector<std::size_t> vertices;
  std::vector<std::vector<Residue>> elements;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    std::vector<Matrix> incoming;
    for (std::size_t ai = 0; ai < alg.arrow_count(); ++ai)
      if (alg.quiver().arrow(ai).target == v) incoming.push_back(m.map(ai));
    const auto rad = image_basis(hstack(incoming, field, m.dim(v)));
    const auto q = quotient_map(rad, m.dim(v));
    for (std::size_t c = 0; c < q.section.cols(); ++c) {
      vertices.push_back(v);
      elements.push_back(q.section.column(c));
    }
  }
  auto p = projective_sum(m.algebra(), vertices);
  auto cover = map_from_projective(p, m, elements);
  return {std::move(p), std::move(cover)};
}

ProjectivePresentation minimal_projective_presentation(const Representation& m) {
  auto c0 = projective_cover(m);
  auto k = kernel(c0.cover);
  auto c1 = projective_cover(k.object);
  auto p1_map = compose(k.inclusion, c1.cover);
  return {std::move(c1.projective), std::move(c0.projective), std::move(p1_map), std::move(c0.cover)};
}

namespace {

AlgebraPtr resolve_opposite(const Representation& m, AlgebraPtr target) {
  auto op = m.algebra()->opposite();
  if (!target) return op;
  if (!same_algebra(target, op)) throw InputError("target algebra is not the opposite algebra");
  return target;
}

}  // namespace

Representation dualize(const Representation& m, AlgebraPtr target) {
  auto op = resolve_opposite(m, std::move(target));
  std::vector<Matrix> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transposed());
  return make_unchecked(std::move(op), m.dims(), std::move(maps));
}

Representation transpose(const Representation& m, AlgebraPtr target) {
  auto op = resolve_opposite(m, std::move(target));
  auto pres = minimal_projective_presentation(m);
  auto f = projective_map_of(pres.p1_map, pres.p1, pres.p0);
  auto d = realize(dual(f, op));
  auto tr = cokernel(d).object;
  return tr.rebind(op);
}

Representation tau(const Representation& m) { return dualize(transpose(m), m.algebra()); }

Representation tau_inverse(const Representation& m) { return transpose(dualize(m), m.algebra()); }

Representation nakayama_module(const Representation& m) {
  auto pres = minimal_projective_presentation(m);
  return cokernel(nakayama_on_projective_morphism(pres.p1_map, pres.p1, pres.p0)).object;
}

Matrix annihilator_ideal(const RepMorphism& f, const HomSpace& end) {
  const auto& field = f.source().field();
  const auto n = hom_ambient_dim(f.source(), f.target());
  Matrix sys(field, n, end.dim());
  for (std::size_t i = 0; i < end.dim(); ++i) {
    const auto v = vectorize(compose(f, end[i]));
    for (std::size_t r = 0; r < n; ++r) sys(r, i) = v[r];
  }
  return kernel_basis(sys);
}

bool is_right_minimal(const RepMorphism& f) {
  auto end = end_algebra(f.source());
  const auto ann = annihilator_ideal(f, end.hom);
  return ann.cols() == 0 || span_contains(radical(end.algebra), ann);
}

namespace {

// The projection X -> Im(e) for an idempotent endomorphism e, paired with the inclusion.
std::pair<Subobject, RepMorphism> split_idempotent(const RepMorphism& e) {
  auto s = image(e);
  std::vector<Matrix> proj;
  for (std::size_t v = 0; v < e.maps().size(); ++v) {
    auto x = solve_right(s.inclusion.map(v), e.map(v));
    if (!x) throw InternalError("idempotent image does not contain its own image");
    proj.push_back(std::move(*x));
  }
  auto p = RepMorphism::unchecked(e.source(), s.object, std::move(proj));
  return {std::move(s), std::move(p)};
}

Element combination(const FDAlgebra& a, const Matrix& basis, const std::vector<Residue>& c) {
  Element x(a.dim(), 0);
  const auto& field = a.field();
  for (std::size_t k = 0; k < basis.cols(); ++k)
    if (c[k] != 0)
      for (std::size_t r = 0; r < a.dim(); ++r) x[r] = field.add(x[r], field.mul(c[k], basis(r, k)));
  return x;
}

std::optional<Element> non_nilpotent_in(const FDAlgebra& a, const Matrix& ideal, std::uint64_t seed) {
  for (std::size_t k = 0; k < ideal.cols(); ++k) {
    auto x = ideal.column(k);
    if (!a.is_nilpotent(x)) return x;
  }
  for (std::size_t k = 0; k < ideal.cols(); ++k)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto y = a.multiply(ideal.column(k), a.basis_element(j));
      if (!a.is_nilpotent(y)) return y;
    }
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 2048; ++round) {
    std::vector<Residue> c(ideal.cols());
    for (auto& v : c) v = static_cast<Residue>(rng() % a.field().modulus());
    auto x = combination(a, ideal, c);
    if (!a.is_nilpotent(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

namespace {

// Projection onto Im y^N along Ker y^N (Fitting decomposition), or nullopt when y is nilpotent.
std::optional<RepMorphism> fitting_projection(const RepMorphism& y) {
  const auto& m = y.source();
  const auto& field = m.field();
  auto z = y;
  for (std::size_t reach = 1; reach < m.total_dim(); reach *= 2) z = compose(z, z);
  if (z.is_zero()) return std::nullopt;
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const auto im = image_basis(z.map(v));
    const auto ker = kernel_basis(z.map(v));
    auto basis = inverse(hstack(im, ker));
    if (!basis) throw InternalError("right_minimalize: Fitting decomposition failed");
    Matrix keep(field, m.dim(v), m.dim(v));
    for (std::size_t i = 0; i < im.cols(); ++i) keep(i, i) = 1;
    maps.push_back(hstack(im, ker) * keep * *basis);
  }
  return RepMorphism::unchecked(m, m, std::move(maps));
}

// A large summand of the source inside Ker f, from random elements of the annihilator.
std::optional<RepMorphism> random_kernel_summand(const RepMorphism& f, const HomSpace& end, const Matrix& ann,
                                                 std::mt19937_64& rng) {
  const auto& field = f.source().field();
  std::optional<RepMorphism> best;
  std::size_t best_rank = 0;
  for (int round = 0; round < 6; ++round) {
    std::vector<Residue> c(ann.cols());
    for (auto& x : c) x = static_cast<Residue>(rng() % field.modulus());
    const auto coords = ann * Matrix::column_vector(field, c);
    auto e = fitting_projection(end.element(coords.column(0)));
    if (!e) continue;
    std::size_t r = 0;
    for (const auto& mv : e->maps()) r += rank(mv);
    if (r > best_rank) {
      best_rank = r;
      best = std::move(e);
    }
  }
  return best;
}

}  // namespace

RightMinimalization right_minimalize(const RepMorphism& f, std::uint64_t seed) {
  const auto& field = f.source().field();
  std::mt19937_64 rng(seed);
  auto current = f;
  auto inclusion = RepMorphism::identity(f.source());
  auto projection = inclusion;
  auto strip = [&](const RepMorphism& keep) {
    auto [sub, proj] = split_idempotent(keep);
    current = compose(current, sub.inclusion);
    inclusion = compose(inclusion, sub.inclusion);
    projection = compose(proj, projection);
  };
  for (;;) {
    HomSpace hom(current.source(), current.source());
    const auto ann = annihilator_ideal(current, hom);
    if (ann.cols() == 0) break;
    if (auto e = random_kernel_summand(current, hom, ann, rng)) {
      strip(RepMorphism::identity(current.source()) - *e);
      continue;
    }
    auto end = end_algebra(current.source());
    if (span_contains(radical(end.algebra), ann)) break;
    auto y = non_nilpotent_in(end.algebra, ann, seed);
    if (!y) throw InternalError("right_minimalize: no non-nilpotent element in a non-radical ideal");
    auto fy = end.algebra.minimal_polynomial(*y);
    std::size_t v = 0;
    while (fy.coeff(v) == 0) ++v;
    Element e;
    if (v == 0) {
      e = end.algebra.unit();
    } else {
      auto tv = Polynomial::x_power(field, v);
      auto h = divmod(fy, tv).first;
      e = end.algebra.evaluate(coprime_idempotent(tv, h), *y);
    }
    strip(end.element(end.algebra.sub(end.algebra.unit(), e)));
  }
  auto null = kernel(projection);
  return {std::move(current), std::move(inclusion), std::move(projection), std::move(null)};
}

std::vector<std::size_t> fingerprint(const Representation& m) {
  std::vector<std::size_t> out = m.dims();
  const auto& alg = *m.algebra();
  for (const auto& p : alg.path_basis())
    if (p.length() > 0) out.push_back(rank(m.path_map(p)));
  out.push_back(hom_space(m, m).dim());
  return out;
}

namespace {

void decompose_into(const Representation& m, std::uint64_t seed, std::vector<Summand>& out) {
  if (m.is_zero()) return;
  auto end = end_algebra(m);
  auto e = find_nontrivial_idempotent(end.algebra, seed);
  if (!e) {
    auto id = RepMorphism::identity(m);
    out.push_back({m, id, id});
    return;
  }
  auto em = end.element(*e);
  auto other = RepMorphism::identity(m) - em;
  for (const auto& idem : {em, other}) {
    auto [sub, proj] = split_idempotent(idem);
    std::vector<Summand> parts;
    decompose_into(sub.object, seed, parts);
    for (auto& s : parts)
      out.push_back({s.module, compose(sub.inclusion, s.inclusion), compose(s.projection, proj)});
  }
}

std::optional<RepMorphism> indecomposable_iso(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return std::nullopt;
  HomSpace ab(a, b);
  if (ab.dim() == 0) return std::nullopt;
  HomSpace ba(b, a);
  for (const auto& phi : ab.basis()) {
    if (phi.is_isomorphism()) return phi;
    for (const auto& psi : ba.basis())
      if (compose(psi, phi).is_isomorphism()) return phi;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed) {
  std::vector<Summand> parts;
  decompose_into(m, seed, parts);
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keys;
  for (std::size_t i = 0; i < parts.size(); ++i) keys.emplace_back(fingerprint(parts[i].module), i);
  std::stable_sort(keys.begin(), keys.end());
  std::vector<Summand> sorted;
  for (const auto& k : keys) sorted.push_back(parts[k.second]);
  return sorted;
}

std::vector<Representation> indecomposable_decomposition(const Representation& m, std::uint64_t seed) {
  std::vector<Representation> out;
  for (auto& s : decompose(m, seed)) out.push_back(std::move(s.module));
  return out;
}

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  return is_local(end_algebra(m).algebra);
}

std::optional<RepMorphism> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  const auto target = n.rebind(m.algebra());
  if (m.is_zero()) return RepMorphism::zero(m, target);
  HomSpace h(m, target);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& b : h.basis())
    if (b.is_isomorphism()) return b;
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 16; ++round) {
    std::vector<Residue> c(h.dim());
    for (auto& v : c) v = static_cast<Residue>(rng() % m.field().modulus());
    auto f = h.element(c);
    if (f.is_isomorphism()) return f;
  }
  auto dm = decompose(m, seed);
  auto dn = decompose(target, seed);
  if (dm.size() != dn.size()) return std::nullopt;
  std::vector<bool> used(dn.size(), false);
  std::optional<RepMorphism> total;
  for (const auto& a : dm) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto phi = indecomposable_iso(a.module, dn[j].module)) {
        used[j] = true;
        matched = true;
        auto piece = compose(dn[j].inclusion, compose(*phi, a.projection));
        total = total ? *total + piece : piece;
      }
    }
    if (!matched) return std::nullopt;
  }
  return total;
}

bool add_member(const Representation& m, const Representation& c) {
  require_same_algebra(m, c);
  auto dm = indecomposable_decomposition(m);
  auto dc = indecomposable_decomposition(c);
  for (const auto& a : dm) {
    bool found = false;
    for (const auto& b : dc)
      if (indecomposable_iso(a, b.rebind(a.algebra()))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace morphdet
