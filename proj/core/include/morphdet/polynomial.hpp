#pragma once

#include <utility>
#include <vector>

#include "morphdet/linalg.hpp"

namespace morphdet {

/// Univariate polynomial over F_p, coefficients stored low degree first and
/// kept trimmed (no trailing zeros). The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field) : field_(field) {}
  Polynomial(PrimeField field, std::vector<Residue> coeffs);

  static Polynomial constant(PrimeField field, Residue c);
  static Polynomial x(PrimeField field);
  static Polynomial x_power(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial monic() const;
  Residue evaluate(Residue x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

struct Bezout {
  Polynomial g;  // monic gcd
  Polynomial u;
  Polynomial v;  // u*a + v*b == g
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod m.
Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m);

/// For f = g*h with gcd(g,h)=1: the polynomial e with e = 0 mod g and
/// e = 1 mod h. Then e(x) is idempotent for any x annihilated by f.
Polynomial coprime_idempotent(const Polynomial& g, const Polynomial& h);

/// All roots in F_p of a polynomial that splits into distinct linear factors
/// (a divisor of t^p - t). Ascending order.
std::vector<Residue> split_roots(const Polynomial& f);

/// Roots in F_p of an arbitrary nonzero polynomial, ascending.
std::vector<Residue> roots_in_field(const Polynomial& f);

}  // namespace morphdet
