#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "morphdet/linalg.hpp"

namespace morphdet {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  // Throw InputError for unknown labels.
  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& name) const;

  /// Same labels, every arrow reversed.
  Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path; `arrows` are listed in the order they are traversed (first arrow
/// applied first). Length-0 paths are the vertex idempotents.
struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  // Order: length, then source, then arrow sequence.
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.arrows <=> b.arrows;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

using Relation = std::vector<std::size_t>;  // arrow indices, traversal order

inline constexpr std::size_t kDefaultPathCap = 10000;

/// All paths containing no relation as a contiguous subpath, ordered by
/// (length, source, arrows). Throws PreconditionError when more than `cap`
/// paths exist (the bound quiver algebra is infinite or too large).
std::vector<Path> path_basis(const Quiver& quiver, const std::vector<Relation>& relations,
                             std::size_t cap = kDefaultPathCap);

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// kQ / I for a monomial admissible ideal I over a prime field.
class BoundQuiverAlgebra {
  struct Token {};

 public:
  static AlgebraPtr create(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                           std::size_t cap = kDefaultPathCap);

  BoundQuiverAlgebra(Token, PrimeField field, Quiver quiver, std::vector<Relation> relations, bool opposite,
                     std::size_t cap);

  const PrimeField& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrow_count(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  /// True when this algebra was produced by opposite() an odd number of times.
  bool is_opposite() const noexcept { return opposite_; }

  const std::vector<Path>& path_basis() const noexcept { return basis_; }
  const Path& path(std::size_t i) const { return basis_.at(i); }
  /// Basis indices of the paths from `from` to `to`, in basis order.
  const std::vector<std::size_t>& paths_between(std::size_t from, std::size_t to) const {
    return between_.at(from * vertex_count() + to);
  }
  /// Position of basis path i inside paths_between(source, target).
  std::size_t local_index(std::size_t i) const { return local_index_.at(i); }
  std::size_t trivial_path(std::size_t v) const { return trivial_.at(v); }

  std::optional<std::size_t> find(const Path& p) const;
  /// Path i followed by path j; nullopt when not composable or zero in the algebra.
  std::optional<std::size_t> concatenate(std::size_t i, std::size_t j) const;
  std::string path_name(std::size_t i) const;

  /// The opposite algebra: reversed arrows and reversed relations. Taking the
  /// opposite twice gives an algebra equal to the original.
  AlgebraPtr opposite() const;
  /// Index in `op` (an algebra equal to opposite()) of the reverse of basis path i.
  std::size_t reversed_path_index(std::size_t i, const BoundQuiverAlgebra& op) const;

  friend bool operator==(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
    return a.field_ == b.field_ && a.opposite_ == b.opposite_ && a.quiver_ == b.quiver_ &&
           a.relations_ == b.relations_;
  }

 private:
  PrimeField field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  bool opposite_;
  std::size_t cap_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> local_index_;
  std::vector<std::size_t> trivial_;
  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_cache_;
};

/// Pointer-equal or structurally equal.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace morphdet
