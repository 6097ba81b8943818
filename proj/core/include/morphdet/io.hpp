#pragma once

#include <string>
#include <vector>

#include "morphdet/determined.hpp"
#include "morphdet/poset.hpp"
#include "morphdet/representation.hpp"
#include "morphdet/third_party/json.hpp"

namespace morphdet {

using Json = nlohmann::ordered_json;

/// Parses a file; throws InputError when it is missing or not valid JSON.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

AlgebraPtr algebra_from_json(const Json& j, std::size_t cap = kDefaultPathCap);
Json to_json(const BoundQuiverAlgebra& algebra);

/// {"dims": {label: n}, "maps": {arrow: rows}}; missing entries are zero.
Representation representation_from_json(const Json& j, const AlgebraPtr& algebra);
Json to_json(const Representation& m);

/// {"source": ..., "target": ..., "vertexMaps": {label: rows}}.
RepMorphism morphism_from_json(const Json& j, const AlgebraPtr& algebra);
/// Vertex maps only, between given objects.
RepMorphism morphism_from_json(const Json& j, const Representation& source, const Representation& target);
Json to_json(const RepMorphism& f);

/// A list of morphisms, or {"generators": [...]}; entries may omit source and target.
std::vector<RepMorphism> generators_from_json(const Json& j, const Representation& source, const Representation& target);

/// {"elements": [...], "le": [[x, y], ...]}, closed on load.
FinitePoset poset_from_json(const Json& j);
Json to_json(const FinitePoset& p);

Json to_json(const DeterminationReport& r);

Matrix matrix_from_json(const Json& j, const PrimeField& field, std::size_t rows, std::size_t cols);
Json to_json(const Matrix& m);

}  // namespace morphdet
