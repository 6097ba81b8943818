#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace morphdet {

/// A finite poset viewed as a category: one morphism x -> y exactly when x ≤ y.
class FinitePoset {
 public:
  /// Reflexive–transitive closure of the generating pairs (x, y) meaning x ≤ y.
  /// Throws InputError on unknown indices, duplicate labels or a cycle.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& generators);

  /// Validates reflexivity, antisymmetry and transitivity of `le`.
  static FinitePoset from_relation(std::vector<std::string> labels, std::vector<std::vector<bool>> le);
  /// 0 < 1 < ... < n-1.
  static FinitePoset chain(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index(const std::string& label) const;
  bool le(std::size_t x, std::size_t y) const { return le_.at(x).at(y); }
  /// Covering pairs (x < y with nothing strictly between).
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

 private:
  FinitePoset() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> le_;
};

/// Seeded random poset on n elements: relations sampled along a random linear
/// extension with the given density, then closed.
FinitePoset random_poset(std::size_t n, std::uint64_t seed, double density = 0.4);

/// {c : c ≰ x, c ≤ y}. Throws PreconditionError unless x ≤ y.
std::vector<std::size_t> determinator_candidates(const FinitePoset& p, std::size_t x, std::size_t y);

/// x = y, or c is the least element of determinator_candidates(p, x, y).
bool object_determines_criterion(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c);
/// The definition checked over every x' ≤ y with D = {c}.
bool object_determines_definition(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c);
/// Computes both verdicts; throws InternalError if they disagree.
bool object_determines(const FinitePoset& p, std::size_t x, std::size_t y, std::size_t c);

/// x -> y is right determined by the class d: every x' -> y all of whose
/// composites from objects of d factor through x -> y factors itself.
bool class_determined(const FinitePoset& p, std::size_t x, std::size_t y, const std::vector<std::size_t>& d);

}  // namespace morphdet
