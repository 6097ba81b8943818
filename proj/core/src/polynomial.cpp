#include "morphdet/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace morphdet {

Polynomial::Polynomial(PrimeField field, std::vector<Residue> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.modulus();
  trim();
}

Polynomial Polynomial::constant(PrimeField field, Residue c) { return Polynomial(field, {c}); }

Polynomial Polynomial::x(PrimeField field) { return Polynomial(field, {0, 1}); }

Polynomial Polynomial::x_power(PrimeField field, std::size_t n) {
  std::vector<Residue> c(n + 1, 0);
  c[n] = 1;
  return Polynomial(field, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const auto inv = field_.inv(leading());
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = field_.mul(c, inv);
  return out;
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Residue> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Residue> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const auto& f = a.field_;
  std::vector<Residue> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return Polynomial(f, std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& f = a.field();
  std::vector<Residue> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial(f), a};
  std::vector<Residue> quot(rem.size() - db, 0);
  const auto inv_lead = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto q = f.mul(rem[i], inv_lead);
    quot[i - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, b.coeff(j)));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial u0 = Polynomial::constant(f, 1), u1(f);
  Polynomial v0(f), v1 = Polynomial::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const auto inv = Polynomial::constant(f, f.inv(r0.leading()));
  return {r0 * inv, u0 * inv, v0 * inv};
}

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
  const auto& f = base.field();
  Polynomial result = divmod(Polynomial::constant(f, 1), m).second;
  base = divmod(base, m).second;
  while (e != 0) {
    if (e & 1) result = divmod(result * base, m).second;
    base = divmod(base * base, m).second;
    e >>= 1;
  }
  return result;
}

Polynomial coprime_idempotent(const Polynomial& g, const Polynomial& h) {
  auto [d, u, v] = extended_gcd(g, h);
  if (d.degree() != 0) throw std::invalid_argument("coprime_idempotent: factors are not coprime");
  return u * g;
}

std::vector<Residue> split_roots(const Polynomial& f) {
  const auto& field = f.field();
  const auto p = field.modulus();
  if (f.degree() <= 0) return {};
  if (f.degree() == 1) {
    auto m = f.monic();
    return {field.neg(m.coeff(0))};
  }
  std::vector<Residue> out;
  if (p <= 4096) {
    for (Residue x = 0; x < p; ++x)
      if (f.evaluate(x) == 0) out.push_back(x);
    return out;
  }
  // Equal-degree splitting: gcd(f, (t + a)^((p-1)/2) - 1) for a = 0, 1, ...
  for (Residue a = 0; a < p; ++a) {
    Polynomial shift(field, {a, 1});
    auto w = powmod(shift, (p - 1) / 2, f) - Polynomial::constant(field, 1);
    auto g = gcd(f, w);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = split_roots(g);
      auto right = split_roots(divmod(f, g).first);
      out.insert(out.end(), left.begin(), left.end());
      out.insert(out.end(), right.begin(), right.end());
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return out;
}

std::vector<Residue> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const auto& field = f.field();
  const auto p = field.modulus();
  if (f.degree() <= 0) return {};
  // The split part gcd(f, t^p - t).
  auto tp = powmod(Polynomial::x(field), p, f.monic()) - Polynomial::x(field);
  auto g = gcd(f, tp);
  return split_roots(g);
}

}  // namespace morphdet
