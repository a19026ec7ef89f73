#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/constructions.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/series.hpp"

using namespace ehrhart;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

QuasiPolynomial fit_of(const ConvexPolytope& q, int degree, std::int64_t modulus) {
  return fit(counter(q), degree, modulus);
}

void check_expansion(const EhrhartSeries& e, const QuasiPolynomial& f) {
  const std::size_t terms = 3 * e.period() * e.power() + 1;
  const auto coeffs = e.expand(terms);
  for (std::size_t k = 0; k < terms; ++k) CHECK(Rational(coeffs[k]) == f.evaluate(k));
}

}  // namespace

TEST_CASE("from_quasipolynomial: segment l(2)") {
  const auto f = fit_of(segment_l(2), 1, 2);
  const auto e = from_quasipolynomial(f);
  CHECK(e.period() == 2);
  CHECK(e.power() == 2);
  // (1 - t^2)^2 (1 + t + 2t^2 + 2t^3 + ...) = 1 + t - t^2 - t^3 ... truncates to 1 + t.
  CHECK(e.numerator() == IntVector{1, 1});
  CHECK(e.expand(13) == std::vector<Integer>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7});
  check_expansion(e, f);
}

TEST_CASE("from_quasipolynomial: trivial cases") {
  const auto point = from_quasipolynomial(QuasiPolynomial::polynomial({r(1)}));
  CHECK(point == EhrhartSeries({1}, 1, 1));
  const auto seg = from_quasipolynomial(QuasiPolynomial::polynomial({r(1), r(1)}));
  CHECK(seg == EhrhartSeries({1}, 1, 2));
  CHECK_THROWS_AS(from_quasipolynomial(QuasiPolynomial::polynomial({r(1, 2)})), std::domain_error);
}

TEST_CASE("expansion matches the quasi-polynomial") {
  for (const auto& [Q, deg, mod] : std::vector<std::tuple<ConvexPolytope, int, std::int64_t>>{
           {pentagon_P(2), 2, 2}, {heptagon_H(3), 2, 3}, {simplex_S(4, 2), 3, 2}}) {
    const auto f = fit_of(Q, deg, mod);
    check_expansion(from_quasipolynomial(f), f);
    CHECK(to_quasipolynomial(from_quasipolynomial(f)) == f);
  }
}

TEST_CASE("pyramid transform") {
  const auto l2 = from_quasipolynomial(fit_of(segment_l(2), 1, 2));
  const auto once = pyramid_transform(l2, 1);
  CHECK(once.expand(3)[2] == 4);
  CHECK(once.expand(3)[2] == count_convex(simplex_S(3, 2), 2));
  CHECK(pyramid_transform(pyramid_transform(l2, 1), 1) == pyramid_transform(l2, 2));
  CHECK(pyramid_transform(EhrhartSeries({1}, 1, 1), 1) == EhrhartSeries({1}, 1, 2));
  CHECK_THROWS_AS(pyramid_transform(l2, 0), std::invalid_argument);
  // Transform of the base equals the series of the counted pyramid.
  const auto P = pentagon_P(3);
  const auto pyrP = pyramid(P, {0, 0, 1});
  CHECK(pyramid_transform(from_quasipolynomial(fit_of(P, 2, 3)), 1) ==
        from_quasipolynomial(fit_of(pyrP, 3, 3)));
}

TEST_CASE("series equivalence") {
  const auto pyrP = pyramid(pentagon_P(2), {0, 0, 1});
  const auto pyrL = pyramid(segment_l(2), {0, 1});
  const auto eP = from_quasipolynomial(fit_of(pyrP, 3, 2));
  const auto eL = from_quasipolynomial(fit_of(pyrL, 2, 2));
  CHECK(series_equivalent(eP, negate(eL)));
  CHECK(series_equivalent(eP, eP));
  const auto l2 = from_quasipolynomial(fit_of(segment_l(2), 1, 2));
  const auto l3 = from_quasipolynomial(fit_of(segment_l(3), 1, 3));
  CHECK_FALSE(series_equivalent(l2, l3));
  CHECK(negate(negate(l2)) == l2);
}
