#include "morphdet/representation.hpp"

#include <numeric>
#include <string>

#include "morphdet/error.hpp"

namespace morphdet {

namespace {

void check_shapes(const BoundQuiverAlgebra& alg, const std::vector<std::size_t>& dims,
                  const std::vector<Matrix>& maps) {
  if (dims.size() != alg.vertex_count()) throw InputError("representation: wrong number of vertex dimensions");
  if (maps.size() != alg.arrow_count()) throw InputError("representation: wrong number of arrow maps");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& arrow = alg.quiver().arrow(a);
    const auto& m = maps[a];
    if (m.field() != alg.field()) throw InputError("representation: matrix over the wrong field");
    if (m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source])
      throw InputError("representation: map for arrow '" + arrow.name + "' has shape " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dims[arrow.target]) + "x" +
                       std::to_string(dims[arrow.source]));
  }
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw InputError("representation without an algebra");
  check_shapes(*algebra_, dims_, maps_);
  for (const auto& rel : algebra_->relations()) {
    Path p{algebra_->quiver().arrow(rel.front()).source, algebra_->quiver().arrow(rel.back()).target, rel};
    if (!path_map(p).is_zero()) throw InputError("representation does not satisfy a relation");
  }
}

Representation::Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {}

Representation make_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps) {
  return Representation(Representation::Unchecked{}, std::move(algebra), std::move(dims), std::move(maps));
}

Representation Representation::zero(AlgebraPtr algebra) {
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  std::vector<Matrix> maps(algebra->arrow_count(), Matrix(algebra->field(), 0, 0));
  return Representation(Unchecked{}, std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::path_map(const Path& p) const {
  Matrix acc = Matrix::identity(field(), dims_.at(p.source));
  for (auto a : p.arrows) acc = maps_.at(a) * acc;
  return acc;
}

Representation Representation::rebind(AlgebraPtr algebra) const {
  if (!same_algebra(algebra, algebra_)) throw InputError("rebind: algebras differ");
  return Representation(Unchecked{}, std::move(algebra), dims_, maps_);
}

RepMorphism::RepMorphism(Unchecked, Representation source, Representation target, std::vector<Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertex_maps)) {}

RepMorphism RepMorphism::unchecked(Representation source, Representation target, std::vector<Matrix> vertex_maps) {
  return RepMorphism(Unchecked{}, std::move(source), std::move(target), std::move(vertex_maps));
}

RepMorphism::RepMorphism(Representation source, Representation target, std::vector<Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertex_maps)) {
  if (!same_algebra(source_.algebra(), target_.algebra())) throw InputError("morphism between different algebras");
  const auto& alg = *source_.algebra();
  if (maps_.size() != alg.vertex_count()) throw InputError("morphism: wrong number of vertex maps");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v) || maps_[v].field() != alg.field())
      throw InputError("morphism: vertex map at '" + alg.quiver().vertex(v) + "' has the wrong shape");
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arrow = alg.quiver().arrow(a);
    if (target_.map(a) * maps_[arrow.source] != maps_[arrow.target] * source_.map(a))
      throw InputError("morphism does not commute with arrow '" + arrow.name + "'");
  }
}

RepMorphism RepMorphism::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (auto d : m.dims()) maps.push_back(Matrix::identity(m.field(), d));
  return RepMorphism(Unchecked{}, m, m, std::move(maps));
}

RepMorphism RepMorphism::zero(const Representation& source, const Representation& target) {
  if (!same_algebra(source.algebra(), target.algebra())) throw InputError("morphism between different algebras");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < source.vertex_count(); ++v)
    maps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return RepMorphism(Unchecked{}, source, target, std::move(maps));
}

bool RepMorphism::is_zero() const noexcept {
  for (const auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool RepMorphism::is_isomorphism() const {
  for (const auto& m : maps_)
    if (!is_invertible(m)) return false;
  return true;
}

bool RepMorphism::is_monomorphism() const {
  for (const auto& m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool RepMorphism::is_epimorphism() const {
  for (const auto& m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

RepMorphism RepMorphism::scaled(Residue s) const {
  std::vector<Matrix> maps;
  for (const auto& m : maps_) maps.push_back(m.scaled(s));
  return RepMorphism(Unchecked{}, source_, target_, std::move(maps));
}

namespace {

void require_parallel(const RepMorphism& a, const RepMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw std::invalid_argument("morphisms are not parallel");
}

}  // namespace

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  require_parallel(a, b);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] + b.maps_[v]);
  return RepMorphism::unchecked(a.source_, a.target_, std::move(maps));
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
  require_parallel(a, b);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] - b.maps_[v]);
  return RepMorphism::unchecked(a.source_, a.target_, std::move(maps));
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: target of f is not the source of g");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.map(v) * f.map(v));
  return RepMorphism::unchecked(f.source(), g.target(), std::move(maps));
}

std::size_t hom_ambient_dim(const Representation& source, const Representation& target) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) n += source.dim(v) * target.dim(v);
  return n;
}

std::vector<Residue> vectorize(const RepMorphism& f) {
  std::vector<Residue> out;
  out.reserve(hom_ambient_dim(f.source(), f.target()));
  for (const auto& m : f.maps()) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

RepMorphism devectorize(const Representation& source, const Representation& target, std::span<const Residue> v) {
  if (v.size() != hom_ambient_dim(source, target)) throw std::invalid_argument("devectorize: wrong length");
  std::vector<Matrix> maps;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < source.vertex_count(); ++x) {
    const auto r = target.dim(x), c = source.dim(x);
    maps.emplace_back(source.field(), r, c,
                      std::vector<Residue>(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                           v.begin() + static_cast<std::ptrdiff_t>(offset + r * c)));
    offset += r * c;
  }
  return RepMorphism::unchecked(source, target, std::move(maps));
}

DirectSum direct_sum(std::span<const Representation> parts, const AlgebraPtr& algebra) {
  const auto& alg = *algebra;
  const auto field = alg.field();
  for (const auto& p : parts)
    if (!same_algebra(p.algebra(), algebra)) throw InputError("direct sum of modules over different algebras");
  std::vector<std::size_t> dims(alg.vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    maps.push_back(block_diagonal(blocks, field));
  }
  auto sum = make_unchecked(algebra, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offset(alg.vertex_count(), 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      Matrix i(field, dims[v], p.dim(v)), q(field, p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        q(k, offset[v] + k) = 1;
      }
      inc.push_back(std::move(i));
      proj.push_back(std::move(q));
      offset[v] += p.dim(v);
    }
    out.inclusions.push_back(RepMorphism::unchecked(p.rebind(algebra), sum, std::move(inc)));
    out.projections.push_back(RepMorphism::unchecked(sum, p.rebind(algebra), std::move(proj)));
  }
  return out;
}

Representation direct_sum_module(std::span<const Representation> parts, const AlgebraPtr& algebra) {
  return direct_sum(parts, algebra).sum;
}

Representation power(const Representation& m, std::size_t n) {
  std::vector<Representation> parts(n, m);
  return direct_sum_module(parts, m.algebra());
}

RepMorphism direct_sum_morphism(std::span<const RepMorphism> parts, const AlgebraPtr& algebra) {
  std::vector<Representation> sources, targets;
  for (const auto& f : parts) {
    sources.push_back(f.source());
    targets.push_back(f.target());
  }
  auto src = direct_sum_module(sources, algebra);
  auto tgt = direct_sum_module(targets, algebra);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& f : parts) blocks.push_back(f.map(v));
    maps.push_back(block_diagonal(blocks, algebra->field()));
  }
  return RepMorphism::unchecked(src, tgt, std::move(maps));
}

RepMorphism stack_morphisms(const Representation& source, std::span<const RepMorphism> parts) {
  std::vector<Representation> targets;
  for (const auto& f : parts) {
    if (!(f.source() == source)) throw std::invalid_argument("stack_morphisms: source mismatch");
    targets.push_back(f.target());
  }
  auto tgt = direct_sum_module(targets, source.algebra());
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& f : parts) blocks.push_back(f.map(v));
    maps.push_back(vstack(blocks, source.field(), source.dim(v)));
  }
  return RepMorphism::unchecked(source, tgt, std::move(maps));
}

RepMorphism join_morphisms(const Representation& target, std::span<const RepMorphism> parts) {
  std::vector<Representation> sources;
  for (const auto& f : parts) {
    if (!(f.target() == target)) throw std::invalid_argument("join_morphisms: target mismatch");
    sources.push_back(f.source());
  }
  auto src = direct_sum_module(sources, target.algebra());
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < target.vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& f : parts) blocks.push_back(f.map(v));
    maps.push_back(hstack(blocks, target.field(), target.dim(v)));
  }
  return RepMorphism::unchecked(src, target, std::move(maps));
}

}  // namespace morphdet
