#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace morphdet {

using Residue = std::uint32_t;

/// The prime field F_p. Moduli are limited to p < 2^31 so that a product of
/// two residues fits in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() : Matrix(PrimeField(2), 0, 0) {}
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  // Entries are reduced mod p; every row must have `cols` entries.
  static Matrix from_rows(PrimeField field, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::int64_t> row_major);
  static Matrix column_vector(PrimeField field, std::span<const Residue> v);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { (*this)(r, c) = field_.reduce(v); }

  std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Residue>& entries() const noexcept { return data_; }

  std::vector<Residue> column(std::size_t c) const;
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transposed() const;
  Matrix scaled(Residue s) const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  Residue trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(std::span<const Matrix> parts, PrimeField field, std::size_t rows);
Matrix vstack(std::span<const Matrix> parts, PrimeField field, std::size_t cols);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form; unique for a given matrix.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Some X with a * X == b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Columns span the null space {x : m x = 0}; canonical basis.
Matrix kernel_basis(const Matrix& m);
/// Columns span the column space of m; canonical basis.
Matrix image_basis(const Matrix& m);
/// Canonical basis of the span of the columns: the transpose of the nonzero
/// rows of rref(vectorsᵀ). Equal spans give identical matrices.
Matrix canonical_span(const Matrix& vectors);

bool in_span(const Matrix& basis, std::span<const Residue> v);
bool span_contains(const Matrix& basis, const Matrix& vectors);
bool same_span(const Matrix& a, const Matrix& b);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Linear maps realising V / span(basis): `projection` (q × n) has kernel
/// exactly span(basis); `section` (n × q) satisfies projection * section = I.
/// The section picks standard basis vectors at non-pivot positions.
struct QuotientMap {
  Matrix projection;
  Matrix section;
};
QuotientMap quotient_map(const Matrix& basis, std::size_t ambient_dim);

}  // namespace morphdet
