#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehrhart {

/// N(t) / (1 - t^D)^m with an integer numerator of degree < D*m.
class EhrhartSeries {
 public:
  EhrhartSeries(IntVector numerator, std::int64_t period, int power);

  const IntVector& numerator() const { return numerator_; }
  std::int64_t period() const { return period_; }
  int power() const { return power_; }

  /// Power-series coefficients of t^0 .. t^(terms-1).
  std::vector<Integer> expand(std::size_t terms) const;

  friend bool operator==(const EhrhartSeries&, const EhrhartSeries&) = default;

 private:
  IntVector numerator_;
  std::int64_t period_;
  int power_;
};

/// Generating function sum_{k>=0} f(k) t^k over (1 - t^D)^(n+1), where f(0)
/// is taken from f's formula.  Throws NonterminatingNumerator when the
/// product with the denominator does not truncate, std::domain_error when f
/// takes a non-integer value.
EhrhartSeries from_quasipolynomial(const QuasiPolynomial& f);

/// Multiplies by 1 / (1 - t)^i, i >= 1.
EhrhartSeries pyramid_transform(const EhrhartSeries& e, int i);

EhrhartSeries negate(const EhrhartSeries& e);

/// The quasi-polynomial whose values for k >= 0 are the series coefficients.
QuasiPolynomial to_quasipolynomial(const EhrhartSeries& e);

bool series_equivalent(const EhrhartSeries& e, const EhrhartSeries& f);

}  // namespace ehrhart
