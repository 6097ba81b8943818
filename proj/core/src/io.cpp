#include "morphdet/io.hpp"

#include <algorithm>
#include <fstream>

#include "morphdet/error.hpp"

namespace morphdet {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const Json& j, const char* what) {
  auto v = as_integer(j, what);
  if (v < 0) throw InputError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

AlgebraPtr algebra_from_json(const Json& j, std::size_t cap) {
  auto p = as_integer(field_of(j, "p"), "p");
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("p must be a prime below 2^31");
  std::vector<std::string> vertices;
  const auto& vs = field_of(j, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be a list");
  for (const auto& v : vs) vertices.push_back(as_string(v, "vertex label"));
  Quiver probe(vertices, {});
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw InputError("'arrows' must be a list");
    for (const auto& a : j["arrows"])
      arrows.push_back({as_string(field_of(a, "name"), "arrow name"),
                        probe.vertex_index(as_string(field_of(a, "from"), "arrow source")),
                        probe.vertex_index(as_string(field_of(a, "to"), "arrow target"))});
  }
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw InputError("'relations' must be a list");
    for (const auto& r : j["relations"]) {
      if (!r.is_array()) throw InputError("each relation must be a list of arrow names");
      Relation rel;
      for (const auto& name : r) rel.push_back(q.arrow_index(as_string(name, "relation entry")));
      rels.push_back(std::move(rel));
    }
  }
  return BoundQuiverAlgebra::create(PrimeField(static_cast<std::uint32_t>(p)), std::move(q), std::move(rels), cap);
}

Json to_json(const BoundQuiverAlgebra& algebra) {
  const auto& q = algebra.quiver();
  Json j;
  j["p"] = algebra.field().modulus();
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"name", a.name}, {"from", q.vertex(a.source)}, {"to", q.vertex(a.target)}});
  j["relations"] = Json::array();
  for (const auto& r : algebra.relations()) {
    Json names = Json::array();
    for (auto a : r) names.push_back(q.arrow(a).name);
    j["relations"].push_back(names);
  }
  return j;
}

Matrix matrix_from_json(const Json& j, const PrimeField& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw InputError("matrix must be a list of rows");
  Matrix m(field, rows, cols);
  if (rows == 0 || cols == 0) {
    // [] or a list of empty rows
    if (!std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_array() && r.empty(); }))
      throw InputError("matrix has the wrong shape");
    return m;
  }
  if (j.size() != rows) throw InputError("matrix has the wrong number of rows");
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) throw InputError("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, as_integer(row[c], "matrix entry"));
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
  return j;
}

Representation representation_from_json(const Json& j, const AlgebraPtr& algebra) {
  const auto& alg = *algebra;
  const auto& q = alg.quiver();
  if (!j.is_object()) throw InputError("representation must be an object");
  std::vector<std::size_t> dims(alg.vertex_count(), 0);
  if (j.contains("dims")) {
    const auto& d = j["dims"];
    if (!d.is_object()) throw InputError("'dims' must map vertex labels to dimensions");
    for (const auto& [label, value] : d.items()) dims[q.vertex_index(label)] = as_count(value, "dimension");
  }
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(alg.field(), dims[a.target], dims[a.source]);
  if (j.contains("maps")) {
    const auto& m = j["maps"];
    if (!m.is_object()) throw InputError("'maps' must map arrow names to matrices");
    for (const auto& [name, value] : m.items()) {
      const auto ai = q.arrow_index(name);
      const auto& a = q.arrow(ai);
      maps[ai] = matrix_from_json(value, alg.field(), dims[a.target], dims[a.source]);
    }
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

Json to_json(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  Json j;
  j["dims"] = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) j["dims"][q.vertex(v)] = m.dim(v);
  j["maps"] = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) j["maps"][q.arrow(a).name] = to_json(m.map(a));
  return j;
}

RepMorphism morphism_from_json(const Json& j, const Representation& source, const Representation& target) {
  const auto& alg = *source.algebra();
  const auto& q = alg.quiver();
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) maps.emplace_back(alg.field(), target.dim(v), source.dim(v));
  if (j.contains("vertexMaps")) {
    const auto& vm = j["vertexMaps"];
    if (!vm.is_object()) throw InputError("'vertexMaps' must map vertex labels to matrices");
    for (const auto& [label, value] : vm.items()) {
      const auto v = q.vertex_index(label);
      maps[v] = matrix_from_json(value, alg.field(), target.dim(v), source.dim(v));
    }
  }
  return RepMorphism(source, target, std::move(maps));
}

RepMorphism morphism_from_json(const Json& j, const AlgebraPtr& algebra) {
  auto source = representation_from_json(field_of(j, "source"), algebra);
  auto target = representation_from_json(field_of(j, "target"), algebra);
  return morphism_from_json(j, source, target);
}

Json to_json(const RepMorphism& f) {
  const auto& q = f.source().algebra()->quiver();
  Json j;
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  j["vertexMaps"] = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) j["vertexMaps"][q.vertex(v)] = to_json(f.map(v));
  return j;
}

std::vector<RepMorphism> generators_from_json(const Json& j, const Representation& source,
                                              const Representation& target) {
  const Json* list = &j;
  if (j.is_object()) list = &field_of(j, "generators");
  if (!list->is_array()) throw InputError("generators must be a list of morphisms");
  std::vector<RepMorphism> out;
  for (const auto& item : *list) {
    if (item.contains("source") && !(representation_from_json(item["source"], source.algebra()) == source))
      throw InputError("generator source differs from C");
    if (item.contains("target") && !(representation_from_json(item["target"], source.algebra()) == target))
      throw InputError("generator target differs from Y");
    out.push_back(morphism_from_json(item, source, target));
  }
  return out;
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> labels;
  const auto& es = field_of(j, "elements");
  if (!es.is_array()) throw InputError("'elements' must be a list");
  for (const auto& e : es) labels.push_back(as_string(e, "element label"));
  FinitePoset probe(labels, {});
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  if (j.contains("le")) {
    if (!j["le"].is_array()) throw InputError("'le' must be a list of pairs");
    for (const auto& pair : j["le"]) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("each 'le' entry must be a pair");
      gens.emplace_back(probe.index(as_string(pair[0], "element")), probe.index(as_string(pair[1], "element")));
    }
  }
  return FinitePoset(std::move(labels), gens);
}

Json to_json(const FinitePoset& p) {
  Json j;
  j["elements"] = p.labels();
  j["le"] = Json::array();
  for (auto [x, y] : p.cover_relations()) j["le"].push_back({p.label(x), p.label(y)});
  return j;
}

Json to_json(const DeterminationReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["minimalSummands"] = Json::array();
  for (const auto& m : r.minimal_summands) j["minimalSummands"].push_back(to_json(m));
  j["auslanderClaimAgrees"] = r.auslander_claim_agrees ? Json(*r.auslander_claim_agrees) : Json(nullptr);
  if (!r.claim_summands.empty() || r.claim_excess) {
    j["claimSummands"] = Json::array();
    for (const auto& m : r.claim_summands) j["claimSummands"].push_back(to_json(m));
    j["claimExcess"] = r.claim_excess ? Json(*r.claim_excess) : Json(nullptr);
  }
  return j;
}

}  // namespace morphdet
