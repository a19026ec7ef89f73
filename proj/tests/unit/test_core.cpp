#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrhart/arith.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/matrix.hpp"

using namespace ehrhart;

namespace {

// gcd of all k x k minors, by brute force over row/column subsets.
Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<bool> rsel(m, false), csel(n, false);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      IntMatrix sub(k, k);
      std::size_t si = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!rsel[i]) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (csel[j]) sub(si, sj++) = a(i, j);
        ++si;
      }
      g = gcd(g, determinant(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = dist(rng);
  return a;
}

void check_smith(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  REQUIRE(multiply(multiply(snf.U, a), snf.V) == snf.S);
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.V)) == 1);
  const std::size_t r = std::min(a.rows(), a.cols());
  Integer prev_d = 1;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != k) CHECK(snf.S(k, j) == 0);
    if (k > 0 && snf.S(k, k) != 0) CHECK(snf.S(k, k) % snf.S(k - 1, k - 1) == 0);
    const Integer d = minor_gcd(a, k + 1);
    if (prev_d != 0 && d != 0) {
      CHECK(snf.S(k, k) == d / prev_d);
    } else {
      CHECK(snf.S(k, k) == 0);
    }
    prev_d = d;
  }
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational x = make_rational(6, -4);
  CHECK(x.get_num() == -3);
  CHECK(x.get_den() == 2);
  CHECK(to_string(x) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(floor(make_rational(-3, 2)) == -2);
  CHECK(ceil(make_rational(-3, 2)) == -1);
  CHECK(floor(Rational(4)) == 4);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
  CHECK(lcm(Integer(0), Integer(6)) == 0);
}

TEST_CASE("vector helpers") {
  const RatVector v{make_rational(1, 2), make_rational(-2, 3), Rational(0)};
  CHECK(common_denominator(v) == 6);
  CHECK(primitive_integer(v) == IntVector{3, -4, 0});
  CHECK(primitive_integer(RatVector{0, 0}) == IntVector{0, 0});
  CHECK(dot(v, v) == make_rational(25, 36));
  CHECK_THROWS_AS(add(v, RatVector{1}), DimensionMismatch);
  CHECK(to_int64(Integer("9223372036854775807")) == INT64_MAX);
  CHECK_THROWS(to_int64(Integer("9223372036854775808")));
}

TEST_CASE("smith normal form examples") {
  SUBCASE("2x2") {
    const auto snf = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(snf.S == IntMatrix{{2, 0}, {0, 4}});
    CHECK(snf.rank == 2);
  }
  SUBCASE("identity") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).S == IntMatrix::identity(3));
  }
  SUBCASE("zero") {
    const auto snf = smith_normal_form(IntMatrix{{0}});
    CHECK(snf.S == IntMatrix{{0}});
    CHECK(snf.rank == 0);
  }
  SUBCASE("rectangular") {
    check_smith(IntMatrix{{1, 4}});
    check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  }
}

TEST_CASE("smith normal form against minor gcds") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    check_smith(random_matrix(rng, r, c, -6, 6));
  }
  // Rank-deficient inputs.
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 3, -5, 5);
    for (std::size_t j = 0; j < 3; ++j) a(2, j) = 2 * a(0, j) - 3 * a(1, j);
    check_smith(a);
    CHECK(smith_normal_form(a).rank <= 2);
  }
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(rank(RatMatrix{{1, 1}, {2, 2}}) == 1);
  CHECK(rank(RatMatrix{{1, 0}, {0, 1}}) == 2);
  const auto ns = nullspace(RatMatrix{{1, 1, 1}});
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(RatVector{1, 1, 1}, v) == 0);
}

TEST_CASE("solve_rational") {
  const RatVector b{make_rational(1, 3), Rational(-2), Rational(5)};
  CHECK(solve_rational(RatMatrix::identity(3), b) == b);
  const RatMatrix vandermonde{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};
  CHECK(solve_rational(vandermonde, RatVector{1, 4, 9}) == RatVector{0, 0, 1});
  CHECK_FALSE(solve_rational(RatMatrix{{1, 1}, {2, 2}}, RatVector{1, 3}).has_value());
}

TEST_CASE("solve_integer") {
  const auto sol = solve_integer(IntMatrix{{1, 4}}, RatVector{6});
  REQUIRE(sol);
  CHECK(dot(IntVector{1, 4}, to_rational(sol->particular)) == 6);
  CHECK(sol->kernel.cols() == 1);
  CHECK_FALSE(solve_integer(IntMatrix{{2, 4}}, RatVector{3}).has_value());
  CHECK_FALSE(solve_integer(IntMatrix{{1}}, RatVector{make_rational(1, 2)}).has_value());
}

TEST_CASE("min_dilate_with_lattice_point examples") {
  CHECK(min_dilate_with_lattice_point(AffineSubspace::from_rows(1, {{1}}, {make_rational(3, 2)})) == 2);
  CHECK(min_dilate_with_lattice_point(
            AffineSubspace::from_rows(2, {{1, 0}, {0, 1}}, {Rational(0), Rational(0)})) == 1);
  CHECK(min_dilate_with_lattice_point(AffineSubspace::from_rows(2, {{1, 4}}, {Rational(6)})) == 1);
  CHECK(min_dilate_with_lattice_point(AffineSubspace::whole(3)) == 1);
  CHECK_THROWS_AS(min_dilate_with_lattice_point(AffineSubspace::from_rows(
                      2, {{1, 1}, {2, 2}}, {Rational(1), Rational(3)})),
                  Infeasible);
}

TEST_CASE("min_dilate agrees with brute-force search") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 2, rows = 1 + trial % n;
    IntMatrix a = random_matrix(rng, rows, n, -4, 4);
    // Right-hand side from a rational point keeps the system consistent.
    RatVector x0(n);
    for (auto& x : x0) x = make_rational(num(rng), den(rng));
    std::vector<RatVector> rrows;
    RatVector rhs;
    for (std::size_t i = 0; i < rows; ++i) {
      rrows.push_back(to_rational(a.row(i)));
      rhs.push_back(dot(a.row(i), x0));
    }
    const auto sub = AffineSubspace::from_rows(n, rrows, rhs);
    const Integer m = min_dilate_with_lattice_point(sub);
    std::int64_t brute = 0;
    for (std::int64_t k = 1; k <= 1000 && brute == 0; ++k) {
      RatVector scaled;
      for (const auto& v : sub.b) scaled.push_back(v * Rational(k));
      if (solve_integer(sub.A, scaled)) brute = k;
    }
    INFO("trial " << trial);
    CHECK(m == brute);
  }
}

TEST_CASE("affine subspace membership") {
  const auto s = AffineSubspace::from_rows(3, {{make_rational(1, 2), 1, 0}}, {Rational(1)});
  CHECK(s.A.row(0) == IntVector{1, 2, 0});
  CHECK(s.b == RatVector{2});
  CHECK(s.dim() == 2);
  CHECK(s.contains(RatVector{0, 1, 7}));
  CHECK_FALSE(s.contains(RatVector{1, 1, 0}));
}
