#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "morphdet/linalg.hpp"
#include "morphdet/polynomial.hpp"

namespace morphdet {

using Element = std::vector<Residue>;

/// A finite-dimensional associative unital algebra over F_p, stored as the
/// matrices of left multiplication by each basis element:
/// coords(b_i * x) = left_mult[i] * coords(x).
class FDAlgebra {
 public:
  /// Throws std::invalid_argument on shape mismatch. `action`, when given, is a
  /// faithful matrix representation (one matrix per basis element) used to
  /// compute the radical; the regular representation is used otherwise.
  FDAlgebra(PrimeField field, std::vector<Matrix> left_mult, Element unit,
            std::optional<std::vector<Matrix>> action = std::nullopt);

  /// From structure constants: products[i][j] = coords(b_i * b_j).
  static FDAlgebra from_structure_constants(PrimeField field,
                                            const std::vector<std::vector<Element>>& products, Element unit);
  static FDAlgebra zero(PrimeField field);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return left_.size(); }
  const Element& unit() const noexcept { return unit_; }
  const std::vector<Matrix>& left_mult() const noexcept { return left_; }
  const std::vector<Matrix>& action() const noexcept { return action_; }
  Element basis_element(std::size_t i) const;
  Element zero_element() const { return Element(dim(), 0); }

  Matrix left_matrix(const Element& x) const;
  Matrix action_matrix(const Element& x) const;
  Element multiply(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(Residue s, const Element& x) const;
  Element power(const Element& x, std::uint64_t e) const;
  bool is_zero(const Element& x) const;
  bool is_nilpotent(const Element& x) const;
  bool is_commutative() const;
  /// Checks associativity on every basis triple and the unit laws.
  bool is_associative() const;

  Polynomial minimal_polynomial(const Element& x) const;
  Element evaluate(const Polynomial& f, const Element& x) const;

 private:
  PrimeField field_;
  std::vector<Matrix> left_;
  Element unit_;
  std::vector<Matrix> action_;
};

/// Basis (columns) of the Jacobson radical. Works in every characteristic
/// (Cohen–Ivanyos–Wales / Rónyai trace-function filtration).
Matrix radical(const FDAlgebra& a);

/// Kernel of the trace form (x, y) ↦ tr(L_{xy}); equals the radical when p > dim.
/// Throws PreconditionError("characteristic too small for trace-form radical") otherwise.
Matrix trace_form_radical(const FDAlgebra& a);

/// A / I for a two-sided ideal I (columns of `ideal`), with the maps relating the two.
struct QuotientAlgebra {
  FDAlgebra algebra;
  Matrix projection;  // dim(A/I) x dim A
  Matrix section;     // dim A x dim(A/I)
};
QuotientAlgebra quotient(const FDAlgebra& a, const Matrix& ideal);

/// Basis (columns) of the centre.
Matrix center(const FDAlgebra& a);

/// True iff dim ≥ 1 and A/J has no idempotents besides 0 and 1.
bool is_local(const FDAlgebra& a);

/// Some e with e² = e, e ≠ 0, 1; none iff the algebra is local or zero.
/// `seed` drives the randomised part of the search.
std::optional<Element> find_nontrivial_idempotent(const FDAlgebra& a, std::uint64_t seed = 0);

/// Iterates e ← 3e² − 2e³ from an element idempotent modulo the radical.
/// Throws PreconditionError if e0 is not idempotent modulo the radical.
Element lift_idempotent(const FDAlgebra& a, const Element& e0);

}  // namespace morphdet
