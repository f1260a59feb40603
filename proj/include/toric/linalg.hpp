#pragma once

// Exact integer and rational linear algebra: Smith and Hermite normal forms,
// null spaces, lattice saturation and finite quotient groups.

#include "toric/errors.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
/// GMP rationals; every arithmetic result is kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix from row vectors; `cols` fixes the width when `rows`
  /// is empty.
  static Matrix from_rows(const std::vector<std::vector<T>> &rows,
                          std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<T>> &columns,
                             std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T &factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T &factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T> Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b);
template <class T>
std::vector<T> operator*(const Matrix<T> &a, const std::vector<T> &x);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

RatMatrix to_rational(const IntMatrix &m);
RatVector to_rational(const IntVector &v);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SNFDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D.
  IntVector diagonal() const;
  std::size_t rank() const;
};

/// Kummer-Smith elimination, pivoting on the smallest nonzero absolute value.
SNFDecomposition snf(const IntMatrix &a);

/// U * A = H with H in row Hermite normal form: echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot).
struct HNFDecomposition {
  IntMatrix H;
  IntMatrix U;
};
HNFDecomposition hnf(const IntMatrix &a);

Integer determinant(const IntMatrix &a);
std::size_t rank(const RatMatrix &a);
std::size_t rank(const IntMatrix &a);

/// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
struct RowEchelon {
  RatMatrix R;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(const RatMatrix &a);

/// Basis of the right null space {x : A x = 0}.
std::vector<RatVector> kernel_basis(const RatMatrix &a);

/// Inverse of an integer matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix &a);

/// Solves A x = b when A is square and invertible; returns false otherwise.
bool solve_square(const RatMatrix &a, const RatVector &b, RatVector &x);

/// Z-basis of span_R(vs) ∩ Z^n, in Hermite normal form.
std::vector<IntVector> saturate(const std::vector<IntVector> &vs,
                                std::size_t ambient_dim);

/// Surjection Z^n -> Z^{n-r} whose kernel is the lattice spanned by `basis`.
/// Throws NotSaturatedError when `basis` is dependent or not saturated.
IntMatrix quotient_projection(const std::vector<IntVector> &basis,
                              std::size_t ambient_dim);

/// Finite abelian group in invariant-factor form, factors > 1 only.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(IntVector factors);

  const IntVector &invariant_factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return factors_.empty(); }
  Integer order() const;
  /// "[d1,d2,...]"; the trivial group prints as "[]".
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup &,
                         const FiniteAbelianGroup &) = default;

private:
  IntVector factors_;
};

/// Z^k / <mus>. Throws NotFiniteError when the vectors do not span Q^k.
FiniteAbelianGroup abelian_quotient(const std::vector<IntVector> &mus,
                                    std::size_t k);

Integer content(const IntVector &v);
/// v / gcd(v). Throws ZeroVectorError on the zero vector.
IntVector primitive(const IntVector &v);
/// Clears denominators and divides out the content.
IntVector primitive(const RatVector &v);

Integer dot(const IntVector &a, const IntVector &b);
Rational dot(const IntVector &a, const RatVector &b);
Rational dot(const RatVector &a, const RatVector &b);

/// Parses "p" or "p/q" with q > 0 in lowest terms.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);
/// "(a,b,c)"
std::string to_string(const IntVector &v);
std::string to_string(const RatVector &v);

} // namespace toric
