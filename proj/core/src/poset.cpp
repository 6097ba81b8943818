#include "morphdet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "morphdet/error.hpp"

namespace morphdet {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InputError("poset: duplicate element label");
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& generators)
    : labels_(std::move(labels)) {
  check_labels(labels_);
  const auto n = labels_.size();
  le_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le_[i][i] = true;
  for (auto [x, y] : generators) {
    if (x >= n || y >= n) throw InputError("poset: relation refers to an unknown element");
    le_[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le_[k][j]) le_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le_[i][j] && le_[j][i]) throw InputError("poset: relations contain a cycle");
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels, std::vector<std::vector<bool>> le) {
  check_labels(labels);
  const auto n = labels.size();
  if (le.size() != n) throw InputError("poset: relation matrix has the wrong size");
  for (const auto& row : le)
    if (row.size() != n) throw InputError("poset: relation matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!le[i][i]) throw InputError("poset: relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i]) throw InputError("poset: relation is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) throw InputError("poset: relation is not transitive");
    }
  }
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.le_ = std::move(le);
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) gens.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(labels), gens);
}

std::size_t FinitePoset::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("poset: unknown element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le_[x][y]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (z != x && z != y && le_[x][z] && le_[z][y]) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

FinitePoset random_poset(std::size_t n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) gens.emplace_back(perm[i], perm[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(std::move(labels), gens);
}

namespace {

void require_morphism(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (x >= p.size() || y >= p.size()) throw InputError("poset: unknown element");
  if (!p.le(x, y)) throw PreconditionError("no morphism: x is not below y");
}

}  // namespace

std::vector<std::size_t> determinator_candidates(const FinitePoset& p, std::size_t x, std::size_t y) {
  require_morphism(p, x, y);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (!p.le(c, x) && p.le(c, y)) out.push_back(c);
  return out;
}

bool object_determines_criterion(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c) {
  require_morphism(p, x, y);
  if (x == y) return true;
  const auto cands = determinator_candidates(p, x, y);
  std::vector<std::size_t> minimal;
  for (auto a : cands) {
    bool is_min = true;
    for (auto b : cands)
      if (b != a && p.le(b, a)) is_min = false;
    if (is_min) minimal.push_back(a);
  }
  return minimal.size() == 1 && minimal.front() == c;
}

bool object_determines_definition(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c) {
  return class_determined(p, x, y, {c});
}

bool object_determines(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c) {
  const bool a = object_determines_criterion(p, x, y, c);
  const bool b = object_determines_definition(p, x, y, c);
  if (a != b) throw InternalError("poset criterion disagrees with the definition");
  return a;
}

bool class_determined(const FinitePoset& p, std::size_t x, std::size_t y, const std::vector<std::size_t>& d) {
  require_morphism(p, x, y);
  for (auto c : d)
    if (c >= p.size()) throw InputError("poset: unknown element");
  for (std::size_t xp = 0; xp < p.size(); ++xp) {
    if (!p.le(xp, y)) continue;
    bool condition = true;
    for (auto c : d)
      if (p.le(c, xp) && !p.le(c, x)) condition = false;
    if (condition != p.le(xp, x)) return false;
  }
  return true;
}

}  // namespace morphdet
