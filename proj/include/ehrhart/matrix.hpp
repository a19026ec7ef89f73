#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ehrhart/arith.hpp"

namespace ehrhart {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void append_row(const std::vector<T>& r);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
std::vector<Integer> multiply(const IntMatrix& a, const std::vector<Integer>& x);
RatVector multiply(const RatMatrix& a, const RatVector& x);
RatMatrix to_rational(const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const RatMatrix& a);

/// Reduced row echelon form; pivots are chosen column by column, first
/// nonzero row from the top.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon row_echelon(const RatMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column of the RREF.
std::vector<RatVector> nullspace(const RatMatrix& a);

/// Exact solution of a x = b, or nullopt when inconsistent.  Free
/// variables are set to zero.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// U * A * V = S with U, V unimodular and S diagonal with nonnegative
/// entries s_1 | s_2 | ... ; rank counts the nonzero diagonal entries.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// All integer solutions of a x = b: particular + kernel * z, z integral.
/// kernel has one column per lattice basis vector of ker(a).
struct IntegerSolutionSet {
  IntVector particular;
  IntMatrix kernel;
};
std::optional<IntegerSolutionSet> solve_integer(const IntMatrix& a, const RatVector& b);

/// The affine subspace {x : A x = b} with integer, row-gcd-reduced A.
struct AffineSubspace {
  std::size_t ambient_dim = 0;
  IntMatrix A;
  RatVector b;

  /// Rescales each rational row (and its right-hand side) to a primitive
  /// integer row.
  static AffineSubspace from_rows(std::size_t ambient_dim,
                                  const std::vector<RatVector>& rows,
                                  const RatVector& rhs);
  /// The whole ambient space.
  static AffineSubspace whole(std::size_t ambient_dim);

  std::size_t dim() const;
  bool contains(const RatVector& x) const;
};

/// Least m >= 1 such that A x = m b has an integer solution.  Throws
/// Infeasible when {A x = b} is empty over the rationals.
Integer min_dilate_with_lattice_point(const AffineSubspace& sub);

}  // namespace ehrhart
