#include "morphdet/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace morphdet {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field()) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
  for (auto& e : data_) e %= field_.modulus();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.modulus();
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::int64_t> row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("from_rows: wrong entry count");
  Matrix m(field, rows, cols);
  std::size_t i = 0;
  for (auto v : row_major) m.data_[i++] = field.reduce(v);
  return m;
}

Matrix Matrix::column_vector(PrimeField field, std::span<const Residue> v) {
  return Matrix(field, v.size(), 1, std::vector<Residue>(v.begin(), v.end()));
}

std::vector<Residue> Matrix::column(std::size_t c) const {
  std::vector<Residue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  return block(0, first, rows_, count);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("matrix block out of range");
  Matrix b(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), ncols,
                b.data_.begin() + static_cast<std::ptrdiff_t>(r * ncols));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(*this, b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    std::copy_n(b.data_.begin() + static_cast<std::ptrdiff_t>(r * b.cols_), b.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix out = *this;
  for (auto& e : out.data_) e = field_.mul(e, s);
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue e) { return e == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Residue Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Residue t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_field(*this, o, "matrix addition");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_field(*this, o, "matrix subtraction");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix product");
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const auto p = a.field_.modulus();
  Matrix out(a.field_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Residue* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Matrix hstack(std::span<const Matrix> parts, PrimeField field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += p.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> parts, PrimeField field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += p.rows();
  }
  Matrix out(field, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return hstack(parts, a.field(), a.rows());
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return vstack(parts, a.field(), a.cols());
}

Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

RowEchelon rref(Matrix m) {
  const auto& f = m.field();
  const std::uint64_t p = f.modulus();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t piv = lead_row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead_row) {
      auto a = m.row(piv), b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead_row);
    const Residue inv = f.inv(prow[col]);
    for (std::size_t c = col; c < m.cols(); ++c) prow[c] = f.mul(prow[c], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      auto row = m.row(r);
      const Residue factor = row[col];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t c = col; c < m.cols(); ++c)
        if (prow[c] != 0) row[c] = static_cast<Residue>((row[c] + neg * prow[c]) % p);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve_right");
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_right: a has " + std::to_string(a.rows()) + " rows, b has " +
                                std::to_string(b.rows()));
  auto [reduced, pivots] = rref(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto pc = pivots[r];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = reduced(r, a.cols() + j);
  }
  return x;
}

Matrix canonical_span(const Matrix& vectors) {
  auto [reduced, pivots] = rref(vectors.transposed());
  return reduced.block(0, 0, pivots.size(), reduced.cols()).transposed();
}

Matrix kernel_basis(const Matrix& m) {
  const auto& f = m.field();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : pivots) is_pivot[pc] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = f.neg(reduced(r, fc));
  }
  return canonical_span(basis);
}

Matrix image_basis(const Matrix& m) { return canonical_span(m); }

bool in_span(const Matrix& basis, std::span<const Residue> v) {
  if (v.size() != basis.rows()) throw std::invalid_argument("in_span: dimension mismatch");
  return solve_right(basis, Matrix::column_vector(basis.field(), v)).has_value();
}

bool span_contains(const Matrix& basis, const Matrix& vectors) {
  if (vectors.rows() != basis.rows()) throw std::invalid_argument("span_contains: dimension mismatch");
  if (vectors.cols() == 0) return true;
  return solve_right(basis, vectors).has_value();
}

bool same_span(const Matrix& a, const Matrix& b) { return canonical_span(a) == canonical_span(b); }

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspace_sum: dimension mismatch");
  return canonical_span(hstack(a, b));
}

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspace_intersection: dimension mismatch");
  const auto& f = a.field();
  // a x = b y  <=>  [a | -b] (x; y) = 0
  Matrix system = hstack(a, b.scaled(f.neg(1 % f.modulus())));
  Matrix ker = kernel_basis(system);
  return canonical_span(a * ker.block(0, 0, a.cols(), ker.cols()));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const auto n = m.rows();
  auto [reduced, pivots] = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

QuotientMap quotient_map(const Matrix& basis, std::size_t ambient_dim) {
  const auto& f = basis.field();
  if (basis.rows() != ambient_dim) throw std::invalid_argument("quotient_map: dimension mismatch");
  auto [reduced, pivots] = rref(basis.transposed());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto pc : pivots) is_pivot[pc] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  Matrix projection(f, rest.size(), ambient_dim);
  Matrix section(f, ambient_dim, rest.size());
  for (std::size_t q = 0; q < rest.size(); ++q) {
    projection(q, rest[q]) = 1;
    section(rest[q], q) = 1;
  }
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t q = 0; q < rest.size(); ++q) projection(q, pivots[i]) = f.neg(reduced(i, rest[q]));
  return {std::move(projection), std::move(section)};
}

}  // namespace morphdet
