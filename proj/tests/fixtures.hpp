#pragma once

#include <cstdint>
#include <vector>

#include "morphdet/determined.hpp"
#include "morphdet/rep.hpp"

namespace fx {

using namespace morphdet;

/// 1 -> 2 -> ... -> n (arrows a1..a_{n-1}).
AlgebraPtr linear_quiver(std::size_t n, std::uint32_t p = 5);
/// The thin module supported on vertices i..j (0-based, inclusive).
Representation interval(const AlgebraPtr& alg, std::size_t i, std::size_t j);
Representation simple(const AlgebraPtr& alg, std::size_t v);
std::vector<Representation> all_intervals(const AlgebraPtr& alg);

/// Acyclic quiver on 2..4 vertices, optionally with random length-2 relations.
AlgebraPtr random_quiver(std::uint64_t seed, std::uint32_t p = 5, bool with_relations = true);

/// ν M computed as D Hom(M, Λ).
Representation nakayama_via_hom(const Representation& m);

/// Mutual factorisation with automorphic composites.
bool morphisms_isomorphic(const RepMorphism& a, const RepMorphism& b);

/// All End(C)-stable subspaces of Hom(C, Y), as coordinate bases (small Hom only).
std::vector<Matrix> gamma_submodules(const HomSpace& hom);

/// Every nonzero element of a small Hom space up to scalars, plus zero.
std::vector<RepMorphism> morphisms_up_to_scalar(const HomSpace& hom);

}  // namespace fx
