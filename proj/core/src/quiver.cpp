#include "morphdet/quiver.hpp"

#include <algorithm>
#include <set>

#include "morphdet/error.hpp"

namespace morphdet {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InputError("quiver: duplicate vertex label");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InputError("quiver: arrow '" + a.name + "' has an undeclared endpoint");
    if (!names.insert(a.name).second) throw InputError("quiver: duplicate arrow name '" + a.name + "'");
  }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw InputError("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) throw InputError("unknown arrow '" + name + "'");
  return static_cast<std::size_t>(it - arrows_.begin());
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed = arrows_;
  for (auto& a : reversed) std::swap(a.source, a.target);
  return Quiver(vertices_, std::move(reversed));
}

namespace {

void validate_relations(const Quiver& q, const std::vector<Relation>& relations) {
  for (const auto& r : relations) {
    if (r.size() < 2) throw InputError("relations must have length at least 2");
    for (auto a : r)
      if (a >= q.arrow_count()) throw InputError("relation refers to an unknown arrow");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (q.arrow(r[i]).target != q.arrow(r[i + 1]).source)
        throw InputError("relation is not a path: arrow '" + q.arrow(r[i]).name + "' is not followed by '" +
                         q.arrow(r[i + 1]).name + "'");
  }
}

bool ends_with_relation(const std::vector<std::size_t>& arrows, const std::vector<Relation>& relations) {
  for (const auto& r : relations) {
    if (r.size() > arrows.size()) continue;
    if (std::equal(r.begin(), r.end(), arrows.end() - static_cast<std::ptrdiff_t>(r.size()))) return true;
  }
  return false;
}

}  // namespace

std::vector<Path> path_basis(const Quiver& quiver, const std::vector<Relation>& relations, std::size_t cap) {
  validate_relations(quiver, relations);
  std::vector<Path> basis;
  std::vector<Path> level;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) level.push_back({v, v, {}});
  while (!level.empty()) {
    basis.insert(basis.end(), level.begin(), level.end());
    if (basis.size() > cap)
      throw PreconditionError("infinite-or-too-large algebra: more than " + std::to_string(cap) + " basis paths");
    std::vector<Path> next;
    for (const auto& p : level) {
      for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
        if (quiver.arrow(a).source != p.target) continue;
        Path q = p;
        q.arrows.push_back(a);
        q.target = quiver.arrow(a).target;
        if (!ends_with_relation(q.arrows, relations)) next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return basis;
}

AlgebraPtr BoundQuiverAlgebra::create(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                      std::size_t cap) {
  return std::make_shared<const BoundQuiverAlgebra>(Token{}, field, std::move(quiver), std::move(relations), false,
                                                    cap);
}

BoundQuiverAlgebra::BoundQuiverAlgebra(Token, PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                       bool opposite, std::size_t cap)
    : field_(field),
      quiver_(std::move(quiver)),
      relations_(std::move(relations)),
      opposite_(opposite),
      cap_(cap),
      basis_(morphdet::path_basis(quiver_, relations_, cap)) {
  const auto n = quiver_.vertex_count();
  between_.assign(n * n, {});
  local_index_.resize(basis_.size());
  trivial_.resize(n);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& p = basis_[i];
    index_.emplace(p, i);
    auto& bucket = between_[p.source * n + p.target];
    local_index_[i] = bucket.size();
    bucket.push_back(i);
    if (p.length() == 0) trivial_[p.source] = i;
  }
}

std::optional<std::size_t> BoundQuiverAlgebra::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BoundQuiverAlgebra::concatenate(std::size_t i, std::size_t j) const {
  const auto& a = basis_.at(i);
  const auto& b = basis_.at(j);
  if (a.target != b.source) return std::nullopt;
  Path c{a.source, b.target, a.arrows};
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return find(c);
}

std::string BoundQuiverAlgebra::path_name(std::size_t i) const {
  const auto& p = basis_.at(i);
  if (p.length() == 0) return "e" + quiver_.vertex(p.source);
  std::string out;
  for (auto a : p.arrows) {
    if (!out.empty()) out += '*';
    out += quiver_.arrow(a).name;
  }
  return out;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  std::call_once(opposite_once_, [this] {
    std::vector<Relation> reversed = relations_;
    for (auto& r : reversed) std::reverse(r.begin(), r.end());
    opposite_cache_ = std::make_shared<const BoundQuiverAlgebra>(Token{}, field_, quiver_.opposite(),
                                                                 std::move(reversed), !opposite_, cap_);
  });
  return opposite_cache_;
}

std::size_t BoundQuiverAlgebra::reversed_path_index(std::size_t i, const BoundQuiverAlgebra& op) const {
  const auto& p = basis_.at(i);
  Path r{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
  auto idx = op.find(r);
  if (!idx) throw InternalError("reversed path missing from opposite algebra");
  return *idx;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace morphdet
