#pragma once

#include <cstddef>
#include <vector>

#include "morphdet/representation.hpp"

namespace morphdet {

/// P(v): basis = paths starting at v; arrows act by appending.
Representation indec_projective(const AlgebraPtr& algebra, std::size_t v);
/// I(v): basis = dual of the paths ending at v; arrows act by the transpose of prepending.
Representation indec_injective(const AlgebraPtr& algebra, std::size_t v);
/// Λ = ⊕_v P(v).
Representation regular_module(const AlgebraPtr& algebra);

/// ⊕ P(summands[i]) laid out in direct-sum block order.
struct ProjectiveModule {
  Representation module;
  std::vector<std::size_t> summands;
};

/// ⊕ I(summands[i]) laid out in direct-sum block order.
struct InjectiveModule {
  Representation module;
  std::vector<std::size_t> summands;
};

ProjectiveModule projective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices);
InjectiveModule injective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices);

/// Row of the basis vector e_{v_i} (summand i) inside the vertex-v_i space of
/// the projective (resp. injective) sum.
std::size_t projective_top_index(const ProjectiveModule& p, std::size_t i);
std::size_t injective_socle_index(const InjectiveModule& q, std::size_t i);

/// The morphism ⊕ P(vertices[i]) -> M sending e_{v_i} to elements[i] ∈ M_{v_i}.
RepMorphism map_from_projective(const ProjectiveModule& p, const Representation& m,
                                const std::vector<std::vector<Residue>>& elements);

/// A morphism ⊕ P(domain[i]) -> ⊕ P(codomain[j]) recorded by the images of
/// the generators: component (j, i) is a vector over the path basis supported
/// on paths codomain[j] -> domain[i].
struct ProjectiveMap {
  AlgebraPtr algebra;
  std::vector<std::size_t> domain;
  std::vector<std::size_t> codomain;
  std::vector<std::vector<std::vector<Residue>>> components;  // [j][i][path]
};

/// Reads a morphism between projective sums; throws PreconditionError if its
/// source or target is not the recorded projective sum.
ProjectiveMap projective_map_of(const RepMorphism& f, const ProjectiveModule& domain,
                                const ProjectiveModule& codomain);
RepMorphism realize(const ProjectiveMap& f);
/// ν f : ⊕ I(domain[i]) -> ⊕ I(codomain[j]).
RepMorphism nakayama(const ProjectiveMap& f);
/// Hom_Λ(f, Λ) as a map of projective Λ^op-modules ⊕ P'(codomain[j]) -> ⊕ P'(domain[i]).
ProjectiveMap dual(const ProjectiveMap& f, const AlgebraPtr& opposite);

RepMorphism nakayama_on_projective_morphism(const RepMorphism& f, const ProjectiveModule& domain,
                                            const ProjectiveModule& codomain);

/// The pairing D Hom(P, Z) x Hom(P, Z)... realised on composites: for
/// g: ⊕P(v_i) -> ⊕I(v_i) (same summand list) returns Σ_i g_{v_i}[e_i, e_i].
Residue nakayama_trace(const RepMorphism& g, const ProjectiveModule& p, const InjectiveModule& q);

}  // namespace morphdet
