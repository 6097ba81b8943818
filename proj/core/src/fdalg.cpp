#include "morphdet/fdalg.hpp"

#include <random>
#include <stdexcept>

#include "morphdet/error.hpp"

namespace morphdet {

FDAlgebra::FDAlgebra(PrimeField field, std::vector<Matrix> left_mult, Element unit,
                     std::optional<std::vector<Matrix>> action)
    : field_(field), left_(std::move(left_mult)), unit_(std::move(unit)) {
  const auto n = left_.size();
  if (unit_.size() != n) throw std::invalid_argument("FDAlgebra: unit length");
  for (const auto& m : left_)
    if (m.rows() != n || m.cols() != n || !(m.field() == field_))
      throw std::invalid_argument("FDAlgebra: left multiplication shape");
  if (action) {
    if (action->size() != n) throw std::invalid_argument("FDAlgebra: action count");
    for (const auto& m : *action)
      if (m.rows() != m.cols() || (n > 0 && m.rows() != action->front().rows()))
        throw std::invalid_argument("FDAlgebra: action shape");
    action_ = std::move(*action);
  } else {
    action_ = left_;
  }
}

FDAlgebra FDAlgebra::from_structure_constants(PrimeField field, const std::vector<std::vector<Element>>& products,
                                              Element unit) {
  const auto n = products.size();
  std::vector<Matrix> left(n, Matrix(field, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (products[i].size() != n) throw std::invalid_argument("FDAlgebra: structure constants shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (products[i][j].size() != n) throw std::invalid_argument("FDAlgebra: structure constants shape");
      for (std::size_t k = 0; k < n; ++k) left[i](k, j) = field.reduce(products[i][j][k]);
    }
  }
  return FDAlgebra(field, std::move(left), std::move(unit));
}

FDAlgebra FDAlgebra::zero(PrimeField field) { return FDAlgebra(field, {}, {}); }

Element FDAlgebra::basis_element(std::size_t i) const {
  Element e(dim(), 0);
  e.at(i) = 1;
  return e;
}

namespace {

Matrix combine(const PrimeField& field, const std::vector<Matrix>& mats, const Element& x, std::size_t n) {
  std::vector<Residue> dst(n * n, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const auto& src = mats[i].entries();
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = field.add(dst[k], field.mul(x[i], src[k]));
  }
  return Matrix(field, n, n, std::move(dst));
}

Element mat_vec(const Matrix& m, const Element& v) {
  const auto& f = m.field();
  Element out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc = (acc + static_cast<std::uint64_t>(row[c]) * v[c]) % f.modulus();
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

}  // namespace

Matrix FDAlgebra::left_matrix(const Element& x) const { return combine(field_, left_, x, dim()); }

Matrix FDAlgebra::action_matrix(const Element& x) const {
  const auto n = action_.empty() ? 0 : action_.front().rows();
  return combine(field_, action_, x, n);
}

Element FDAlgebra::multiply(const Element& x, const Element& y) const {
  Element out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    const auto part = mat_vec(left_[i], y);
    for (std::size_t k = 0; k < dim(); ++k) out[k] = field_.add(out[k], field_.mul(x[i], part[k]));
  }
  return out;
}

Element FDAlgebra::add(const Element& x, const Element& y) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

Element FDAlgebra::sub(const Element& x, const Element& y) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field_.sub(x[i], y[i]);
  return out;
}

Element FDAlgebra::scale(Residue s, const Element& x) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field_.mul(s, x[i]);
  return out;
}

Element FDAlgebra::power(const Element& x, std::uint64_t e) const {
  Element result = unit_;
  Element base = x;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

bool FDAlgebra::is_zero(const Element& x) const {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

bool FDAlgebra::is_nilpotent(const Element& x) const {
  const auto lx = left_matrix(x);
  Element v = x;
  for (std::size_t k = 0; k < dim() && !is_zero(v); ++k) v = mat_vec(lx, v);
  return is_zero(v);
}

bool FDAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (left_[i].column(j) != left_[j].column(i)) return false;
  return true;
}

bool FDAlgebra::is_associative() const {
  // (b_i b_j) x = b_i (b_j x)  <=>  L_{b_i b_j} = L_i L_j
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!(left_matrix(left_[i].column(j)) == left_[i] * left_[j])) return false;
  const auto lu = left_matrix(unit_);
  if (!lu.is_identity()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (mat_vec(left_[i], unit_) != basis_element(i)) return false;
  return true;
}

Polynomial FDAlgebra::minimal_polynomial(const Element& x) const {
  // Incremental elimination over the powers 1, x, x², ... tracking each
  // reduced vector as a combination of powers.
  const auto n = dim();
  if (n == 0) return Polynomial::constant(field_, 1);
  const auto lx = left_matrix(x);
  struct Reduced {
    Element v;
    std::size_t pivot;
    std::vector<Residue> combo;  // coefficients over powers
  };
  std::vector<Reduced> basis;
  Element current = unit_;
  for (std::size_t k = 0; k <= n; ++k) {
    Element v = current;
    std::vector<Residue> combo(k + 1, 0);
    combo[k] = 1;
    for (const auto& r : basis) {
      const auto c = v[r.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] = field_.sub(v[i], field_.mul(c, r.v[i]));
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] = field_.sub(combo[i], field_.mul(c, r.combo[i]));
    }
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) return Polynomial(field_, combo).monic();
    const auto inv = field_.inv(v[pivot]);
    for (auto& e : v) e = field_.mul(e, inv);
    for (auto& e : combo) e = field_.mul(e, inv);
    basis.push_back({std::move(v), pivot, std::move(combo)});
    current = mat_vec(lx, current);
  }
  throw InternalError("minimal_polynomial: no dependency found");
}

Element FDAlgebra::evaluate(const Polynomial& f, const Element& x) const {
  if (f.is_zero()) return zero_element();
  const auto lx = left_matrix(x);
  Element r = scale(f.leading(), unit_);
  for (int i = f.degree() - 1; i >= 0; --i) r = add(mat_vec(lx, r), scale(f.coeff(static_cast<std::size_t>(i)), unit_));
  return r;
}

namespace {

// Integer square matrices modulo m (m < 2^32).
using IntMatrix = std::vector<std::uint64_t>;

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t n, std::uint64_t m) {
  IntMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % m;
    }
  return c;
}

// (tr(lift(x)^q mod p·q)) / q mod p.
Residue trace_function(const Matrix& x, std::uint64_t q, std::uint64_t p) {
  const auto n = x.rows();
  const auto m = p * q;
  IntMatrix base(x.entries().begin(), x.entries().end());
  IntMatrix result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1;
  for (auto e = q; e > 0; e >>= 1) {
    if (e & 1) result = int_mul(result, base, n, m);
    if (e > 1) base = int_mul(base, base, n, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + result[i * n + i]) % m;
  if (t % q != 0) throw InternalError("radical: trace function not divisible");
  return static_cast<Residue>((t / q) % p);
}

}  // namespace

Matrix radical(const FDAlgebra& a) {
  const auto& field = a.field();
  const auto n = a.dim();
  if (n == 0) return Matrix(field, 0, 0);
  const std::uint64_t p = field.modulus();
  const std::size_t size = a.action().front().rows();
  Matrix ideal = Matrix::identity(field, n);  // columns: current I_{i-1}
  std::uint64_t q = 1;
  for (std::size_t level = 0; ideal.cols() > 0; ++level) {
    if (level > 0) {
      if (q > size / p) break;
      q *= p;
    }
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < ideal.cols(); ++k) acts.push_back(a.action_matrix(ideal.column(k)));
    Matrix g(field, n, ideal.cols());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < ideal.cols(); ++k) {
        const auto prod = acts[k] * a.action()[j];
        g(j, k) = q == 1 ? prod.trace() : trace_function(prod, q, p);
      }
    const auto ker = kernel_basis(g);
    ideal = canonical_span(ideal * ker);
  }
  return ideal;
}

Matrix trace_form_radical(const FDAlgebra& a) {
  const auto n = a.dim();
  if (a.field().modulus() <= n) throw PreconditionError("characteristic too small for trace-form radical");
  Matrix t(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = (a.left_mult()[i] * a.left_mult()[j]).trace();
  return kernel_basis(t);
}

QuotientAlgebra quotient(const FDAlgebra& a, const Matrix& ideal) {
  const auto& field = a.field();
  auto qm = quotient_map(ideal.cols() == 0 ? Matrix(field, a.dim(), 0) : ideal, a.dim());
  const auto m = qm.projection.rows();
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < m; ++i) left.push_back(qm.projection * a.left_matrix(qm.section.column(i)) * qm.section);
  Element unit = mat_vec(qm.projection, a.unit());
  return {FDAlgebra(field, std::move(left), std::move(unit)), std::move(qm.projection), std::move(qm.section)};
}

Matrix center(const FDAlgebra& a) {
  const auto n = a.dim();
  const auto& field = a.field();
  if (n == 0) return Matrix(field, 0, 0);
  Matrix sys(field, n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // Σ_i z_i L_i e_j − L_j z = 0
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        sys(j * n + r, i) = field.sub(a.left_mult()[i](r, j), a.left_mult()[j](r, i));
  }
  return kernel_basis(sys);
}

namespace {

// Basis (columns, coordinates of `a`) of {x in span(sub) : x^p = x} for a
// commutative subalgebra spanned by the columns of `sub`.
Matrix berlekamp_subalgebra(const FDAlgebra& a, const Matrix& sub) {
  const auto& field = a.field();
  const auto k = sub.cols();
  Matrix frob(field, k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto img = a.power(sub.column(c), field.modulus());
    auto coords = solve_right(sub, Matrix::column_vector(field, img));
    if (!coords) throw InternalError("Frobenius image left the subalgebra");
    for (std::size_t r = 0; r < k; ++r) frob(r, c) = (*coords)(r, 0);
  }
  return sub * kernel_basis(frob - Matrix::identity(field, k));
}

Polynomial saturate(const Polynomial& f, const Polynomial& h, Polynomial& rest) {
  Polynomial part = Polynomial::constant(f.field(), 1);
  rest = f;
  for (;;) {
    auto g = gcd(rest, h);
    if (g.degree() <= 0) break;
    part = part * g;
    rest = divmod(rest, g).first;
  }
  return part;
}

// A factorisation f = g·h into coprime non-constant factors, when the
// distinct-degree or root splitting finds one.
std::optional<std::pair<Polynomial, Polynomial>> coprime_split(const Polynomial& f) {
  const auto& field = f.field();
  if (f.degree() < 2) return std::nullopt;
  const auto t = Polynomial::x(field);
  Polynomial frob = divmod(t, f).second;
  for (int d = 1; d <= f.degree(); ++d) {
    frob = powmod(frob, field.modulus(), f);
    auto h = gcd(f, frob - t);
    if (h.degree() <= 0) continue;
    Polynomial rest(field);
    auto part = saturate(f, h, rest);
    if (rest.degree() > 0) return std::make_pair(part, rest);
    if (d == 1) {
      auto roots = split_roots(h);
      if (roots.size() >= 2) {
        auto lin = t - Polynomial::constant(field, roots.front());
        auto p1 = saturate(f, lin, rest);
        return std::make_pair(p1, rest);
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Element> split_with(const FDAlgebra& b, const Element& x) {
  auto f = b.minimal_polynomial(x);
  if (auto s = coprime_split(f)) return b.evaluate(coprime_idempotent(s->first, s->second), x);
  return std::nullopt;
}

std::optional<Element> try_candidate(const FDAlgebra& b, const Element& x) {
  if (auto e = split_with(b, x)) return e;
  const auto f = b.minimal_polynomial(x);
  if (f.degree() < 2) return std::nullopt;
  const auto roots = roots_in_field(f);
  if (roots.size() != 1) return std::nullopt;
  // x − λ is a non-zero nilpotent; some product with a basis element is not.
  const auto y = b.sub(x, b.scale(roots.front(), b.unit()));
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const auto bj = b.basis_element(j);
    for (const auto& z : {b.multiply(bj, y), b.multiply(y, bj)})
      if (!b.is_nilpotent(z))
        if (auto e = split_with(b, z)) return e;
  }
  return std::nullopt;
}

bool is_trivial_idempotent(const FDAlgebra& b, const Element& e) {
  return b.is_zero(e) || e == b.unit();
}

std::optional<Element> semisimple_idempotent(const FDAlgebra& b, std::uint64_t seed) {
  const auto& field = b.field();
  if (b.dim() <= 1) return std::nullopt;
  const auto z = center(b);
  const auto k = berlekamp_subalgebra(b, z);
  if (k.cols() >= 2) {
    const auto unit = Matrix::column_vector(field, b.unit());
    for (std::size_t c = 0; c < k.cols(); ++c) {
      auto x = k.column(c);
      if (in_span(unit, x)) continue;
      if (auto e = split_with(b, x); e && !is_trivial_idempotent(b, *e)) return e;
    }
    throw InternalError("failed to split a central element");
  }
  if (b.is_commutative()) return std::nullopt;

  auto accept = [&](const std::optional<Element>& e) { return e && !is_trivial_idempotent(b, *e); };
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (auto e = try_candidate(b, b.basis_element(i)); accept(e)) return e;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      if (auto e = try_candidate(b, b.add(b.basis_element(i), b.basis_element(j))); accept(e)) return e;
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 256; ++round) {
    Element x(b.dim());
    for (auto& v : x) v = static_cast<Residue>(rng() % field.modulus());
    if (auto e = try_candidate(b, x); accept(e)) return e;
  }
  // Exhaustive search over tiny quotients.
  double count = 1;
  for (std::size_t i = 0; i < b.dim(); ++i) count *= field.modulus();
  if (count <= 65536.0) {
    Element x(b.dim(), 0);
    for (;;) {
      std::size_t i = 0;
      while (i < x.size() && ++x[i] == field.modulus()) x[i++] = 0;
      if (i == x.size()) break;
      if (b.multiply(x, x) == x && !is_trivial_idempotent(b, x)) return x;
    }
  }
  throw InternalError("idempotent search failed in a non-local semisimple algebra");
}

Element lift_unchecked(const FDAlgebra& a, Element e) {
  const auto three = a.field().reduce(3);
  const auto two = a.field().reduce(2);
  for (std::size_t iter = 0; iter < 64; ++iter) {
    auto e2 = a.multiply(e, e);
    if (e2 == e) return e;
    auto e3 = a.multiply(e2, e);
    e = a.sub(a.scale(three, e2), a.scale(two, e3));
  }
  throw PreconditionError("element is not idempotent modulo the radical");
}

}  // namespace

bool is_local(const FDAlgebra& a) {
  if (a.dim() == 0) return false;
  const auto q = quotient(a, radical(a));
  const auto& b = q.algebra;
  if (!b.is_commutative()) return false;
  return berlekamp_subalgebra(b, Matrix::identity(b.field(), b.dim())).cols() == 1;
}

std::optional<Element> find_nontrivial_idempotent(const FDAlgebra& a, std::uint64_t seed) {
  if (a.dim() == 0) return std::nullopt;
  const auto q = quotient(a, radical(a));
  auto eb = semisimple_idempotent(q.algebra, seed);
  if (!eb) return std::nullopt;
  const auto e0 = q.section * Matrix::column_vector(a.field(), *eb);
  return lift_unchecked(a, e0.column(0));
}

Element lift_idempotent(const FDAlgebra& a, const Element& e0) {
  if (e0.size() != a.dim()) throw std::invalid_argument("lift_idempotent: element length");
  return lift_unchecked(a, e0);
}

}  // namespace morphdet
