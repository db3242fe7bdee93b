#pragma once

// Exact sparse linear algebra over Q, F_p and Z.
//
// Every matrix stores exact rationals (GMP); the coefficient domain is a
// property of the computation, not of the storage. Over F_p the entries are
// reduced into [0, p) before elimination, over Z they must be integral.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coarsehh {

using Scalar = mpq_class;
using Index = std::uint32_t;

enum class Domain { rational, prime, integer };

class Coefficients {
 public:
  static Coefficients rationals() { return Coefficients(Domain::rational, 0); }
  static Coefficients integers() { return Coefficients(Domain::integer, 0); }
  /// Throws InvalidInput unless p is a prime with p <= 2^31.
  static Coefficients prime_field(std::uint64_t p);
  /// Parses "Q", "Z" or "Fp:<prime>".
  static Coefficients parse(const std::string& text);

  Domain domain() const { return domain_; }
  bool is_field() const { return domain_ != Domain::integer; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  /// Canonical representative: lowest terms over Q, [0, p) over F_p.
  /// Over Z a non-integral value throws DomainError.
  Scalar normalize(const Scalar& v) const;
  bool is_zero(const Scalar& v) const { return normalize(v) == 0; }

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  /// Multiplicative inverse; throws DomainError for zero or over Z.
  Scalar inv(const Scalar& a) const;

  /// True when n is invertible in the domain (n != 0 mod p).
  bool divides_not(std::int64_t n) const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Domain d, std::uint32_t p) : domain_(d), p_(p) {}
  Domain domain_;
  std::uint32_t p_;
};

struct Entry {
  Index row;
  Scalar value;
};

/// Column-compressed sparse matrix. No stored zeros; rows sorted per column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for tests and small literals.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  std::span<const Entry> column(std::size_t j) const { return columns_[j]; }
  /// Replaces column j. Entries may be unsorted and contain duplicates or
  /// zeros; they are merged.
  void set_column(std::size_t j, std::vector<Entry> entries);
  Scalar at(std::size_t r, std::size_t c) const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  /// Entries reduced into the coefficient domain (zeros dropped).
  Matrix reduced(const Coefficients& coeffs) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  /// Places `block` with its top-left corner at (row_offset, col_offset)
  /// into this matrix, adding to existing entries.
  void add_block(const Matrix& block, std::size_t row_offset, std::size_t col_offset);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Dense accumulator for building one sparse column at a time.
class ColumnAccumulator {
 public:
  explicit ColumnAccumulator(std::size_t rows) : values_(rows), used_(rows, false) {}
  void add(Index row, const Scalar& v);
  /// Returns the accumulated nonzero entries (sorted) and resets.
  std::vector<Entry> take();

 private:
  std::vector<Scalar> values_;
  std::vector<bool> used_;
  std::vector<Index> touched_;
};

/// Small dense matrix, used for fibre blocks of controlled morphisms.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  Scalar trace() const;
  DenseMatrix reduced(const Coefficients& coeffs) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// --- elimination ----------------------------------------------------------

/// Rank over a field. Throws DomainError over Z.
std::size_t rank(const Matrix& m, const Coefficients& coeffs);

struct KernelBasis {
  /// Basis vectors of the null space, each of length cols().
  std::vector<std::vector<Scalar>> vectors;
  /// free_columns[i] is the coordinate where vectors[i] is 1 and every other
  /// basis vector is 0; coordinates of a kernel element are read there.
  std::vector<Index> free_columns;
};

/// Null-space basis in reduced form (from the reduced row echelon form).
KernelBasis kernel_basis(const Matrix& m, const Coefficients& coeffs);

struct SmithForm {
  /// d_1 | d_2 | ... , length min(rows, cols), nonnegative.
  std::vector<mpz_class> diagonal;
  Matrix left;   // U, unimodular, rows x rows
  Matrix right;  // V, unimodular, cols x cols
};

/// Smith normal form with transforms, U * m * V = diag. Integer input only.
SmithForm smith_normal_form(const Matrix& m);

/// Nonzero invariant factors of an integer matrix (ascending, divisibility
/// chain). Uses sparse unit-pivot elimination before a dense Smith reduction
/// of the residual block; no transforms.
std::vector<mpz_class> invariant_factors(const Matrix& m);

/// Determinant of a square integer/rational matrix (dense, for tests).
Scalar determinant(const Matrix& m);

// --- homology -------------------------------------------------------------

struct HomologyResult {
  int degree = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1; empty over fields.
  std::vector<mpz_class> torsion;
};

/// Homology at the middle of  C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.
/// Throws InvalidInput on a dimension mismatch or when d_out * d_in != 0.
HomologyResult homology_at(const Matrix& d_out, const Matrix& d_in, const Coefficients& coeffs,
                           int degree = 0);

}  // namespace coarsehh
