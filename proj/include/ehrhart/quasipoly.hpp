#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/counting.hpp"

namespace ehrhart {

/// f(k) = sum_i c_i(k) k^i where each c_i is periodic with period dividing
/// the modulus D.  coeffs[i][r] is the value of c_i on k ≡ r (mod D).
///
/// Period sequences are reported constant term first: (p_0, p_1, ..., p_n),
/// where p_i is the minimal period of the coefficient of k^i.
class QuasiPolynomial {
 public:
  /// Throws std::invalid_argument on an empty or ragged table or modulus < 1.
  QuasiPolynomial(std::int64_t modulus, std::vector<std::vector<Rational>> coeffs);

  static QuasiPolynomial zero() { return QuasiPolynomial(1, {{Rational(0)}}); }
  /// An ordinary polynomial, coefficients ascending.
  static QuasiPolynomial polynomial(const std::vector<Rational>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::vector<Rational>>& coeffs() const { return coeffs_; }
  /// c_i evaluated on residue class r (any integer r).
  const Rational& coeff(int i, std::int64_t r) const;

  Rational evaluate(std::int64_t k) const;

  /// Same function over modulus m (a multiple of the current modulus).
  QuasiPolynomial with_modulus(std::int64_t m) const;
  /// Drops identically zero leading coefficients (degree stays >= 0).
  QuasiPolynomial trimmed() const;
  bool is_zero() const;

 private:
  std::int64_t modulus_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// Pointwise equality on all integers.
bool operator==(const QuasiPolynomial& f, const QuasiPolynomial& g);

/// Interpolates each residue class r from the counts at r0, r0 + D, ...,
/// r0 + nD (r0 = r, or D for r = 0), then checks n + 2 further dilates.
/// Throws VerificationFailed on a mismatch.
QuasiPolynomial fit(const CountFunction& counter, int degree, std::int64_t modulus);

/// Same interpolation from arbitrary exact samples; when include_zero is
/// set, residue 0 is sampled at k = 0, D, 2D, ...
QuasiPolynomial fit_values(const std::function<Rational(std::int64_t)>& value, int degree,
                           std::int64_t modulus, bool include_zero);

std::int64_t coefficient_period(const QuasiPolynomial& f, int i);
std::vector<std::int64_t> period_sequence(const QuasiPolynomial& f);

/// f ≡ g: the difference is a polynomial.
bool equivalent(const QuasiPolynomial& f, const QuasiPolynomial& g);

QuasiPolynomial add(const QuasiPolynomial& f, const QuasiPolynomial& g);
QuasiPolynomial subtract(const QuasiPolynomial& f, const QuasiPolynomial& g);
QuasiPolynomial scale(const QuasiPolynomial& f, const Rational& c);
QuasiPolynomial negate(const QuasiPolynomial& f);
/// f(k) * poly(k), poly given by ascending coefficients.
QuasiPolynomial multiply_by_polynomial(const QuasiPolynomial& f, const std::vector<Rational>& poly);

/// g(k) = 1 + f(1) + ... + f(k), the Ehrhart function of a pyramid over a
/// polytope with Ehrhart function f.  Degree rises by one; modulus kept.
QuasiPolynomial prefix_sum(const QuasiPolynomial& f);

}  // namespace ehrhart
