#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "morphdet/error.hpp"
#include "morphdet/rep.hpp"

namespace morphdet {

/// An End(C)-stable subspace H of Hom(C, Y) (stable under precomposition).
/// Stored as a canonical basis of coordinates relative to hom_space(C, Y).
class GammaSubmodule {
 public:
  /// Throws PreconditionError if the span of `coordinates` is not End(C)-stable.
  GammaSubmodule(HomSpace hom, const Matrix& coordinates);

  const Representation& c() const noexcept { return hom_.source(); }
  const Representation& y() const noexcept { return hom_.target(); }
  const HomSpace& hom() const noexcept { return hom_; }
  const Matrix& coordinates() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.cols(); }
  std::vector<RepMorphism> basis() const;
  bool contains(const RepMorphism& f) const;

  friend bool operator==(const GammaSubmodule& a, const GammaSubmodule& b) {
    return a.c() == b.c() && a.y() == b.y() && a.coords_ == b.coords_;
  }

 private:
  HomSpace hom_;
  Matrix coords_;
};

/// Matrix of h ↦ h∘γ on Hom(C, Y)-coordinates, one per basis element γ of End(C).
std::vector<Matrix> precomposition_operators(const HomSpace& hom, const HomSpace& end);
bool is_gamma_closed(const HomSpace& hom, const Matrix& coordinates);

GammaSubmodule gamma_closure(const Representation& c, const Representation& y, const std::vector<RepMorphism>& gens);
GammaSubmodule full_submodule(const Representation& c, const Representation& y);
GammaSubmodule zero_submodule(const Representation& c, const Representation& y);

/// Some φ with a∘φ = a_prime.
std::optional<RepMorphism> factors_through(const RepMorphism& a_prime, const RepMorphism& a);

/// Im Hom(C, a) ⊆ Hom(C, Y).
GammaSubmodule image_hom(const Representation& c, const RepMorphism& a);

struct ConstructOptions {
  /// Order in which annihilating functionals are offered to the greedy
  /// selection; a permutation of 0..codim(H)-1, or empty for the natural order.
  std::vector<std::size_t> functional_order;
  /// Non-zero: replace the functional basis by a random invertible change of basis first.
  std::uint64_t basis_seed = 0;
  /// Check image_hom(C, result) == H before returning.
  bool verify = true;
  std::uint64_t seed = 0;
};

/// The right minimal right C-determined morphism α: X -> Y with Im Hom(C, α) = H.
RepMorphism construct_determined(const GammaSubmodule& h, const ConstructOptions& options = {});

struct Determination {
  bool verdict = false;
  RepMorphism minimal;     // right minimal version of the input
  RepMorphism comparison;  // construct_determined(C, Y, Im Hom(C, minimal))
  /// verdict true: φ with input∘φ = comparison; false: comparison itself
  /// satisfies the C-condition but does not factor through the input.
  std::optional<RepMorphism> factorization;
  std::optional<RepMorphism> counterexample;
};
Determination decide_right_determined(const RepMorphism& a, const Representation& c);
bool is_right_determined(const RepMorphism& a, const Representation& c);

class DeterminatorAssertionError : public InternalError {
 public:
  using InternalError::InternalError;
};

/// τ⁻¹(Ker a_m) ⊕ Λ, checked at run time.
Representation sufficient_determinator(const RepMorphism& a);

struct MinimalDeterminatorOptions {
  /// Pruning order over the deduplicated indecomposable summands of the
  /// sufficient determinator, as a permutation; empty = descending dimension.
  std::vector<std::size_t> order;
};
/// Indecomposables C_1..C_r, pairwise non-isomorphic, such that a is right
/// C'-determined iff every C_i is in add C'. Sorted by (dims, fingerprint).
std::vector<Representation> minimal_determinator(const RepMorphism& a, const MinimalDeterminatorOptions& options = {});
/// Number of candidate summands minimal_determinator prunes (size of a valid `order`).
std::size_t determinator_candidate_count(const RepMorphism& a);

struct AlmostSplit {
  RepMorphism morphism;             // minimal right almost split X -> Z
  std::optional<Subobject> kernel;  // τZ ↪ X when Z is not projective
};
AlmostSplit almost_split_ending_at(const Representation& z);

struct DeterminationReport {
  bool verdict = false;
  std::optional<RepMorphism> witness;
  std::vector<Representation> minimal_summands;
  std::optional<bool> auslander_claim_agrees;
  std::vector<Representation> claim_summands;
  /// add(C_claim) contains an indecomposable not needed for determination.
  std::optional<bool> claim_excess;
};

DeterminationReport check_determination(const RepMorphism& a, const Representation& c);
/// Compares τ⁻¹(Ker a_m) ⊕ P(Coker a_m) with the minimal determinator.
DeterminationReport check_auslander_claim(const RepMorphism& a);

bool is_projective(const Representation& m);

}  // namespace morphdet
