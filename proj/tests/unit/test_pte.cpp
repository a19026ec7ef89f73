#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/error.hpp"
#include "ehrhart/pte.hpp"

using namespace ehrhart;
using namespace ehrhart::pte;

TEST_CASE("power sums and elementary symmetric functions") {
  CHECK(power_sum(2, {1, 2, 6}) == 41);
  CHECK(elem_sym(2, {1, 2, 6}) == 20);
  CHECK(elem_sym(0, {1, 2, 6}) == 1);
  CHECK(elem_sym(3, {1, 2, 6}) == 12);
  CHECK(elem_sym(4, {1, 2, 6}) == 0);
  CHECK(power_sum(1, {}) == 0);
  CHECK(power_sum(3, {}) == 0);
  CHECK(power_sum(0, {5, 7}) == 2);
}

TEST_CASE("verify") {
  CHECK(verify({{1, 2}, {3, 0}}));
  CHECK(verify({{1, 2, 6}, {4, 5, 0}}));
  CHECK_FALSE(verify({{1, 2}, {2, 0}}));
  // Sign pattern: zero must be last in t and unique.
  CHECK_FALSE(verify({{3, 0}, {1, 2}}));
  CHECK_FALSE(verify({{1, 2, 6}, {4, 0, 5}}));
  CHECK_FALSE(verify({{1, 2}, {3}}));
}

TEST_CASE("normalize") {
  CHECK(normalize({1, 5, 6}, {2, 3, 7}) == PteSolution{{1, 2, 6}, {4, 5, 0}});
  CHECK(normalize({0, 3}, {1, 2}) == PteSolution{{1, 2}, {3, 0}});
  CHECK(normalize({1, 2}, {0, 3}) == PteSolution{{1, 2}, {3, 0}});
  CHECK(normalize({0, 4, 7, 11}, {1, 2, 9, 10}) == PteSolution{{1, 2, 9, 10}, {4, 7, 11, 0}});
  CHECK(normalize({-10, 5}, {-7, 2}) == PteSolution{{3, 12}, {15, 0}});
  CHECK_THROWS_AS(normalize({0, 1}, {0, 1}), Rejected);
  CHECK_THROWS_AS(normalize({0, 3}, {1, 3}), Rejected);
  CHECK_THROWS_AS(normalize({0, 3}, {1, 2, 0}), Rejected);
}

TEST_CASE("product identity") {
  CHECK(linear_factor_product({1, 2, 6}) == IntVector{1, 9, 20, 12});
  CHECK(linear_factor_product({4, 5}) == IntVector{1, 9, 20});
  CHECK(linear_factor_product({}) == IntVector{1});
  CHECK(product_identity_check({{1, 2, 6}, {4, 5, 0}}));
  CHECK(product_identity_check({{1, 2}, {3, 0}}));
  CHECK_FALSE(product_identity_check({{1, 2}, {2, 0}}));
}

TEST_CASE("shipped table") {
  const auto& t = table();
  std::vector<std::size_t> sizes;
  for (const auto& [m, sol] : t) {
    sizes.push_back(m);
    CHECK(sol.size() == m);
    CHECK(verify(sol));
    CHECK(product_identity_check(sol));
    // Newton's identities: equal power sums below m give equal e_k below m.
    for (unsigned k = 0; k < m; ++k) CHECK(elem_sym(k, sol.s) == elem_sym(k, sol.t));
    CHECK(power_sum(static_cast<unsigned>(m), sol.s) != power_sum(static_cast<unsigned>(m), sol.t));
  }
  CHECK(sizes == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
  CHECK(table_lookup(2) == PteSolution{{1, 2}, {3, 0}});
  CHECK(table_lookup(3) == PteSolution{{1, 2, 6}, {4, 5, 0}});
  CHECK(table_lookup(4) == normalize({0, 4, 7, 11}, {1, 2, 9, 10}));
  CHECK_FALSE(table_lookup(11).has_value());
  CHECK_FALSE(table_lookup(1).has_value());
}

TEST_CASE("parse_table") {
  const auto t = parse_table("# comment\n2: 1,2 ; 3,0\n\n3: 1, 2, 6 ; 4, 5, 0  # trailing\n");
  CHECK(t.size() == 2);
  CHECK(t.at(3) == PteSolution{{1, 2, 6}, {4, 5, 0}});
  CHECK_THROWS_AS(parse_table("2: 1,2 ; 2,0\n"), UnverifiedSolution);
  CHECK_THROWS_AS(parse_table("2: 1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_table("3: 1,2 ; 3,0\n"), ParseError);
  CHECK_THROWS_AS(parse_table("x: 1,2 ; 3,0\n"), ParseError);
}
