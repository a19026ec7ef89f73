#include "ehrhart/series.hpp"

#include <stdexcept>

#include "ehrhart/error.hpp"

namespace ehrhart {

namespace {

// (1 - t^D)^m as a dense integer polynomial.
IntVector denominator_poly(std::int64_t D, int m) {
  IntVector p{Integer(1)};
  for (int j = 0; j < m; ++j) {
    IntVector next(p.size() + D, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + D] -= p[i];
    }
    p = std::move(next);
  }
  return p;
}

void trim(IntVector& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

EhrhartSeries::EhrhartSeries(IntVector numerator, std::int64_t period, int power)
    : numerator_(std::move(numerator)), period_(period), power_(power) {
  if (period_ < 1) throw std::invalid_argument("series period must be positive");
  if (power_ < 0) throw std::invalid_argument("series power must be nonnegative");
  if (numerator_.empty()) numerator_.push_back(0);
  trim(numerator_);
}

std::vector<Integer> EhrhartSeries::expand(std::size_t terms) const {
  std::vector<Integer> c(terms, Integer(0));
  for (std::size_t i = 0; i < terms && i < numerator_.size(); ++i) c[i] = numerator_[i];
  // Each factor 1 / (1 - t^D) is a running sum with stride D.
  for (int j = 0; j < power_; ++j)
    for (std::size_t i = period_; i < terms; ++i) c[i] += c[i - period_];
  return c;
}

EhrhartSeries from_quasipolynomial(const QuasiPolynomial& f) {
  const std::int64_t D = f.modulus();
  const int m = f.degree() + 1;
  const std::size_t span = static_cast<std::size_t>(D) * m;
  // Terms beyond `span` must cancel; check a full extra window.
  const std::size_t terms = 2 * span + 1;
  std::vector<Integer> values(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    const Rational v = f.evaluate(static_cast<std::int64_t>(k));
    if (!is_integer(v)) throw std::domain_error("series of a non-integer-valued function");
    values[k] = v.get_num();
  }
  const IntVector den = denominator_poly(D, m);
  IntVector num(terms, Integer(0));
  for (std::size_t i = 0; i < terms; ++i)
    for (std::size_t j = 0; j < den.size() && j <= i; ++j)
      if (den[j] != 0) num[i] += den[j] * values[i - j];
  for (std::size_t i = span; i < terms; ++i)
    if (num[i] != 0)
      throw NonterminatingNumerator("coefficient of t^" + std::to_string(i) + " is " +
                                    num[i].get_str());
  num.resize(span);
  return EhrhartSeries(std::move(num), D, m);
}

EhrhartSeries pyramid_transform(const EhrhartSeries& e, int i) {
  if (i < 1) throw std::invalid_argument("pyramid transform needs i >= 1");
  // 1/(1-t) = (1 + t + ... + t^(D-1)) / (1 - t^D).
  IntVector num = e.numerator();
  const std::int64_t D = e.period();
  for (int j = 0; j < i; ++j) {
    IntVector next(num.size() + D - 1, Integer(0));
    for (std::size_t a = 0; a < num.size(); ++a)
      for (std::int64_t b = 0; b < D; ++b) next[a + b] += num[a];
    num = std::move(next);
  }
  return EhrhartSeries(std::move(num), D, e.power() + i);
}

EhrhartSeries negate(const EhrhartSeries& e) {
  IntVector num = e.numerator();
  for (auto& v : num) v = -v;
  return EhrhartSeries(std::move(num), e.period(), e.power());
}

QuasiPolynomial to_quasipolynomial(const EhrhartSeries& e) {
  const std::int64_t D = e.period();
  const int degree = std::max(e.power() - 1, 0);
  const std::size_t terms = static_cast<std::size_t>(D) * (degree + 2) + degree + 3;
  const auto coeffs = e.expand(terms);
  return fit_values([&](std::int64_t k) { return Rational(coeffs.at(k)); }, degree, D, true);
}

bool series_equivalent(const EhrhartSeries& e, const EhrhartSeries& f) {
  return equivalent(to_quasipolynomial(e), to_quasipolynomial(f));
}

}  // namespace ehrhart
