#include "ehrhart/matrix.hpp"

#include <algorithm>
#include <utility>

#include "ehrhart/error.hpp"

namespace ehrhart {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
void Matrix<T>::append_row(const std::vector<T>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionMismatch("row length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <class T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> multiply_vec(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl(a, b); }
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return multiply_impl(a, b); }
std::vector<Integer> multiply(const IntMatrix& a, const std::vector<Integer>& x) {
  return multiply_vec(a, x);
}
RatVector multiply(const RatMatrix& a, const RatVector& x) { return multiply_vec(a, x); }

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RowEchelon row_echelon(const RatMatrix& a) {
  RowEchelon out{a, {}};
  RatMatrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& a) { return row_echelon(a).pivot_cols.size(); }

std::vector<RatVector> nullspace(const RatMatrix& a) {
  const RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_rational right-hand side");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = row_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, a.cols());
  return x;
}

namespace {

// Row operation row_dst += f * row_src applied to S and mirrored on U.
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm out{IntMatrix::identity(rows), a, IntMatrix::identity(cols), 0};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    S.swap_rows(t, i);
    U.swap_rows(t, i);
    S.swap_cols(t, j);
    V.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| in the trailing block, first in row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (S(i, j) == 0) continue;
        if (!best || abs(S(i, j)) < abs(S(best->first, best->second))) best = {i, j};
      }
    if (!best) break;
    move_to_pivot(t, best->first, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        add_row(S, i, t, -q);
        add_row(U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        add_col(S, j, t, -q);
        add_col(V, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (S(i, t) != 0 && abs(S(i, t)) < abs(S(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(t, j) != 0 && abs(S(t, j)) < abs(S(bi, bj))) bi = t, bj = j;
        move_to_pivot(t, bi, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(i, j) % S(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      add_row(S, t, *offending, 1);
      add_row(U, t, *offending, 1);
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < rows; ++j) U(t, j) = -U(t, j);
    }
    ++out.rank;
  }
  return out;
}

std::optional<IntegerSolutionSet> solve_integer(const IntMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_integer right-hand side");
  const SmithForm snf = smith_normal_form(a);
  RatVector c(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (snf.U(i, j) != 0) c[i] += Rational(snf.U(i, j)) * b[j];
  for (std::size_t i = snf.rank; i < a.rows(); ++i)
    if (c[i] != 0) return std::nullopt;
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const Rational yi = c[i] / Rational(snf.S(i, i));
    if (!is_integer(yi)) return std::nullopt;
    y[i] = yi.get_num();
  }
  IntegerSolutionSet out;
  out.particular = multiply(snf.V, y);
  out.kernel = IntMatrix(a.cols(), a.cols() - snf.rank);
  for (std::size_t j = snf.rank; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) out.kernel(i, j - snf.rank) = snf.V(i, j);
  return out;
}

AffineSubspace AffineSubspace::from_rows(std::size_t ambient_dim,
                                         const std::vector<RatVector>& rows,
                                         const RatVector& rhs) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("affine subspace rows vs rhs");
  AffineSubspace s;
  s.ambient_dim = ambient_dim;
  s.A = IntMatrix(0, ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient_dim) throw DimensionMismatch("affine subspace row");
    const IntVector prim = primitive_integer(rows[i]);
    // prim = rows[i] * f for a positive rational f; find f from a nonzero entry.
    std::size_t nz = 0;
    while (nz < ambient_dim && rows[i][nz] == 0) ++nz;
    if (nz == ambient_dim) {
      if (rhs[i] != 0) throw Infeasible("0 = nonzero in affine equations");
      continue;
    }
    const Rational f = Rational(prim[nz]) / rows[i][nz];
    s.A.append_row(prim);
    s.b.push_back(rhs[i] * f);
  }
  return s;
}

AffineSubspace AffineSubspace::whole(std::size_t ambient_dim) {
  AffineSubspace s;
  s.ambient_dim = ambient_dim;
  s.A = IntMatrix(0, ambient_dim);
  return s;
}

std::size_t AffineSubspace::dim() const {
  return ambient_dim - (A.rows() == 0 ? 0 : rank(to_rational(A)));
}

bool AffineSubspace::contains(const RatVector& x) const {
  if (x.size() != ambient_dim) throw DimensionMismatch("affine subspace membership");
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (dot(A.row(i), x) != b[i]) return false;
  return true;
}

Integer min_dilate_with_lattice_point(const AffineSubspace& sub) {
  if (sub.A.rows() == 0) return 1;
  const SmithForm snf = smith_normal_form(sub.A);
  Integer m = 1;
  for (std::size_t i = 0; i < sub.A.rows(); ++i) {
    Rational ci = 0;
    for (std::size_t j = 0; j < sub.A.rows(); ++j)
      if (snf.U(i, j) != 0) ci += Rational(snf.U(i, j)) * sub.b[j];
    if (i >= snf.rank) {
      if (ci != 0) throw Infeasible("affine subspace is empty over the rationals");
      continue;
    }
    const Rational yi = ci / Rational(snf.S(i, i));
    m = lcm(m, yi.get_den());
  }
  return m;
}

}  // namespace ehrhart
