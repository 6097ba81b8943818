#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "morphdet/linalg.hpp"
#include "morphdet/quiver.hpp"

namespace morphdet {

/// A finite-dimensional module over a bound quiver algebra, as a covariant
/// representation: arrow a: u -> v acts by a (dim v) x (dim u) matrix.
class Representation {
 public:
  /// Validates matrix shapes and that every relation composes to zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }
  std::size_t vertex_count() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }

  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  /// Action of a path (identity for a vertex path).
  Matrix path_map(const Path& p) const;

  /// The same representation attached to an equal algebra object.
  Representation rebind(AlgebraPtr algebra) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_ && same_algebra(a.algebra_, b.algebra_);
  }

 private:
  struct Unchecked {};
  Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  friend class RepMorphism;
  friend Representation make_unchecked(AlgebraPtr, std::vector<std::size_t>, std::vector<Matrix>);

  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// Skips the relation check; for internal constructions whose relations
/// hold by construction.
Representation make_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

/// A module homomorphism: one matrix per vertex, (dim target_v) x (dim source_v).
class RepMorphism {
 public:
  /// Validates shapes and the intertwining condition for every arrow.
  RepMorphism(Representation source, Representation target, std::vector<Matrix> vertex_maps);

  static RepMorphism unchecked(Representation source, Representation target, std::vector<Matrix> vertex_maps);
  static RepMorphism identity(const Representation& m);
  static RepMorphism zero(const Representation& source, const Representation& target);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const Matrix& map(std::size_t v) const { return maps_.at(v); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  bool is_zero() const noexcept;
  /// Every vertex map is bijective.
  bool is_isomorphism() const;
  bool is_monomorphism() const;
  bool is_epimorphism() const;

  RepMorphism scaled(Residue s) const;
  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;

 private:
  struct Unchecked {};
  RepMorphism(Unchecked, Representation source, Representation target, std::vector<Matrix> vertex_maps);

  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

/// g ∘ f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

/// Concatenation of the vertex matrices, each row-major, vertices in order.
std::vector<Residue> vectorize(const RepMorphism& f);
std::size_t hom_ambient_dim(const Representation& source, const Representation& target);
RepMorphism devectorize(const Representation& source, const Representation& target, std::span<const Residue> v);

struct DirectSum {
  Representation sum;
  std::vector<RepMorphism> inclusions;
  std::vector<RepMorphism> projections;
};

/// Block layout: at each vertex the summands' bases are concatenated in order.
DirectSum direct_sum(std::span<const Representation> parts, const AlgebraPtr& algebra);
Representation direct_sum_module(std::span<const Representation> parts, const AlgebraPtr& algebra);
Representation power(const Representation& m, std::size_t n);
/// f_1 ⊕ ... ⊕ f_n between the direct sums of sources and targets.
RepMorphism direct_sum_morphism(std::span<const RepMorphism> parts, const AlgebraPtr& algebra);
/// (f_1, ..., f_n): M -> T_1 ⊕ ... ⊕ T_n.
RepMorphism stack_morphisms(const Representation& source, std::span<const RepMorphism> parts);
/// [f_1 ... f_n]: S_1 ⊕ ... ⊕ S_n -> N.
RepMorphism join_morphisms(const Representation& target, std::span<const RepMorphism> parts);

}  // namespace morphdet
