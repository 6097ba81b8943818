#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "morphdet/fdalg.hpp"
#include "morphdet/projective.hpp"
#include "morphdet/representation.hpp"

namespace morphdet {

/// Hom(source, target) with a canonical basis: the columns of `ambient` are
/// the vectorized basis morphisms in reduced form.
class HomSpace {
 public:
  HomSpace(Representation source, Representation target);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<RepMorphism>& basis() const noexcept { return basis_; }
  const RepMorphism& operator[](std::size_t i) const { return basis_.at(i); }
  const Matrix& ambient() const noexcept { return ambient_; }

  /// Coordinates of f in the basis; throws std::invalid_argument if f is not
  /// a morphism between the same objects.
  std::vector<Residue> coordinates(const RepMorphism& f) const;
  RepMorphism element(std::span<const Residue> coeffs) const;

 private:
  Representation source_;
  Representation target_;
  Matrix ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<RepMorphism> basis_;
};

HomSpace hom_space(const Representation& m, const Representation& n);
std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n);

/// End(m) as an algebra; multiplication is composition (x·y = x∘y), basis as
/// in hom_space(m, m).
struct EndAlgebra {
  HomSpace hom;
  FDAlgebra algebra;
  RepMorphism element(const Element& x) const { return hom.element(x); }
};
EndAlgebra end_algebra(const Representation& m);

struct Subobject {
  Representation object;
  RepMorphism inclusion;
};
struct QuotientObject {
  Representation object;
  RepMorphism projection;
};

Subobject kernel(const RepMorphism& f);
Subobject image(const RepMorphism& f);
QuotientObject cokernel(const RepMorphism& f);

/// The submodule with the given per-vertex subspaces (columns); throws
/// PreconditionError if they are not closed under the arrows.
Subobject submodule(const Representation& m, const std::vector<Matrix>& subspaces);

struct Pullback {
  Representation object;
  RepMorphism to_first;
  RepMorphism to_second;
};
/// Pullback of f: A -> C and g: B -> C.
Pullback pullback(const RepMorphism& f, const RepMorphism& g);

struct ProjectiveCover {
  ProjectiveModule projective;
  RepMorphism cover;
};
ProjectiveCover projective_cover(const Representation& m);

struct ProjectivePresentation {
  ProjectiveModule p1;
  ProjectiveModule p0;
  RepMorphism p1_map;  // P1 -> P0
  RepMorphism p0_map;  // P0 -> M
};
ProjectivePresentation minimal_projective_presentation(const Representation& m);

/// D m over the opposite algebra (or over `target` when given; it must equal
/// the opposite algebra).
Representation dualize(const Representation& m, AlgebraPtr target = nullptr);
/// Tr m, a module over the opposite algebra.
Representation transpose(const Representation& m, AlgebraPtr target = nullptr);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);
/// ν m = coker(ν p1) for a minimal projective presentation p1.
Representation nakayama_module(const Representation& m);

struct RightMinimalization {
  RepMorphism minimal;         // X' -> Y
  RepMorphism inclusion;       // X' -> X
  RepMorphism projection;      // X -> X', projection ∘ inclusion = id
  Subobject null_part;         // X'' ⊆ X with f|X'' = 0 and X = X' ⊕ X''
};
RightMinimalization right_minimalize(const RepMorphism& f, std::uint64_t seed = 0);

/// Basis (columns, End-coordinates) of {φ ∈ End X : f∘φ = 0}.
Matrix annihilator_ideal(const RepMorphism& f, const HomSpace& end);
/// The annihilator ideal of f lies in rad End(source).
bool is_right_minimal(const RepMorphism& f);

struct Summand {
  Representation module;
  RepMorphism inclusion;
  RepMorphism projection;
};
/// Krull–Schmidt decomposition with explicit split inclusions/projections,
/// ordered by (dimension vector, invariant fingerprint).
std::vector<Summand> decompose(const Representation& m, std::uint64_t seed = 0);
std::vector<Representation> indecomposable_decomposition(const Representation& m, std::uint64_t seed = 0);

/// Isomorphism invariants: dims, ranks of all basis path maps, dim End.
std::vector<std::size_t> fingerprint(const Representation& m);

bool is_indecomposable(const Representation& m);
std::optional<RepMorphism> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0);
/// Every indecomposable summand of m is isomorphic to a summand of c.
bool add_member(const Representation& m, const Representation& c);

}  // namespace morphdet
