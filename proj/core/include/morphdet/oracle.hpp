#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "morphdet/rep.hpp"

namespace morphdet {

inline constexpr std::size_t kDefaultEnumerationCap = 200000;

/// Every representation with dims ≤ max_dims (vertexwise), one per isomorphism
/// class, in enumeration order (dimension vectors lexicographically, then
/// matrices in odometer order). Throws PreconditionError when more than `cap`
/// arrow-matrix assignments would have to be visited.
std::vector<Representation> enumerate_test_modules(const AlgebraPtr& algebra, const std::vector<std::size_t>& max_dims,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// Some α': X' -> Y with X' in `family` such that every composite C -> X' -> Y
/// factors through a but α' does not.
std::optional<RepMorphism> refute_determination(const RepMorphism& a, const Representation& c,
                                                const std::vector<Representation>& family);

/// Arrow matrices with entries drawn from a seeded std::mt19937_64; the
/// algebra must have no relations.
Representation random_representation(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims,
                                     std::uint64_t seed);

/// A seeded random element of Hom(m, n).
RepMorphism random_morphism(const Representation& m, const Representation& n, std::uint64_t seed);

}  // namespace morphdet
