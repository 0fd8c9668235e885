#pragma once

// Exact integer linear algebra: Smith normal form, saturated kernels and
// integral solvability. Every entry is an arbitrary-precision integer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gkm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose j-th column is columns[j]; all columns must
  /// have length `rows`.
  static IntMatrix from_columns(std::size_t rows,
                                std::span<const IntVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const BigInt& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source,
                        const BigInt& factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// U * A * V == S with U, V unimodular and S diagonal, nonnegative, with
/// each diagonal entry dividing the next.
struct SNFDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;

  IntVector diagonal() const;
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

/// Z-basis of {x : A x = 0}. The span is saturated in Z^cols. Each vector is
/// normalized so that its first nonzero entry is positive.
std::vector<IntVector> kernel_saturated(const IntMatrix& a);

/// Solves A x = b over the integers. Reuses one Smith decomposition for any
/// number of right-hand sides.
class IntegerSolver {
 public:
  explicit IntegerSolver(IntMatrix a);

  std::optional<IntVector> solve(const IntVector& b) const;
  const IntMatrix& matrix() const { return a_; }
  std::size_t rank() const { return snf_.rank; }

 private:
  IntMatrix a_;
  SNFDecomposition snf_;
};

/// Throws std::invalid_argument when b.size() != A.rows().
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// gcd of the entries (0 for the zero vector).
BigInt content(std::span<const BigInt> v);

/// v / gcd(v). Throws std::invalid_argument on the zero vector.
IntVector primitive_part(const IntVector& v);

bool is_zero(std::span<const BigInt> v);

/// Row-style Hermite normal form of the rows of `a`: echelon rows with
/// positive pivots, entries above each pivot reduced into [0, pivot). Zero
/// rows are dropped.
IntMatrix hermite_rows(const IntMatrix& a);

}  // namespace gkm
