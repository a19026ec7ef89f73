#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ehrhart/constructions.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/polytope.hpp"

using namespace ehrhart;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

// x is in conv(pts) iff it is in the convex hull of some d+1 of them.
bool caratheodory_contains(const std::vector<RatVector>& pts, const RatVector& x) {
  const std::size_t d = x.size(), n = pts.size();
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + std::min(n, d + 1), true);
  do {
    std::vector<RatVector> s;
    for (std::size_t i = 0; i < n; ++i)
      if (sel[i]) s.push_back(pts[i]);
    // Barycentric system: sum l_i s_i = x, sum l_i = 1.
    RatMatrix a(d + 1, s.size());
    RatVector b(d + 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) a(i, j) = s[j][i];
      a(d, j) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
    b[d] = 1;
    if (rank(a) < s.size()) continue;
    const auto lam = solve_rational(a, b);
    if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& l) { return l >= 0; }))
      return true;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return false;
}

std::vector<RatVector> random_points(std::mt19937& rng, std::size_t count, std::size_t d) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  std::vector<RatVector> pts(count, RatVector(d));
  for (auto& p : pts)
    for (auto& x : p) x = make_rational(num(rng), den(rng));
  return pts;
}

}  // namespace

TEST_CASE("from_vertices: pentagon P(2)") {
  const auto P = ConvexPolytope::from_vertices(
      {{r(3), r(0)}, {r(-3), r(0)}, {r(2), r(1)}, {r(-2), r(1)}, {r(0), r(3, 2)}});
  CHECK(P.vertices().size() == 5);
  CHECK(P.facets().size() == 5);
  CHECK(P.intrinsic_dim() == 2);
  CHECK(std::count(P.facets().begin(), P.facets().end(), Facet{{0, -1}, 0}) == 1);
  CHECK(std::count(P.facets().begin(), P.facets().end(), Facet{{1, 4}, 6}) == 1);
  for (const auto& v : P.vertices())
    for (const auto& f : P.facets()) CHECK(dot(f.normal, v) <= Rational(f.offset));
}

TEST_CASE("from_vertices drops duplicates and interior points") {
  const auto T = ConvexPolytope::from_vertices(
      {{r(1), r(0)}, {r(-1), r(0)}, {r(0), r(1)}, {r(0), r(1)}, {r(0), r(1)}, {r(0), r(0)}});
  CHECK(T.vertices() == std::vector<RatVector>{{r(-1), r(0)}, {r(0), r(1)}, {r(1), r(0)}});
  CHECK(T == pentagon_P(1));
}

TEST_CASE("from_vertices: a point and a lower-dimensional polytope") {
  const auto pt = ConvexPolytope::from_vertices({{r(0), r(0)}});
  CHECK(pt.intrinsic_dim() == 0);
  CHECK(pt.facets().empty());
  const auto seg = ConvexPolytope::from_vertices({{r(0), r(0), r(1)}, {r(2), r(2), r(1)}, {r(1), r(1), r(1)}});
  CHECK(seg.intrinsic_dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.facets().size() == 2);
  CHECK(contains(seg, {r(1, 2), r(1, 2), r(1)}));
  CHECK_FALSE(contains(seg, {r(1, 2), r(1, 2), r(0)}));
  CHECK_THROWS_AS(ConvexPolytope::from_vertices({{r(0)}, {r(0), r(1)}}), DimensionMismatch);
  CHECK_THROWS_AS(ConvexPolytope::from_vertices({}), DimensionMismatch);
}

TEST_CASE("contains examples") {
  const auto P = pentagon_P(2);
  CHECK(contains(P, {r(0), r(0)}));
  CHECK(contains(P, {r(0), r(3, 2)}));
  CHECK_FALSE(contains(P, {r(3), r(1)}));
  CHECK_THROWS_AS(contains(P, {r(0)}), DimensionMismatch);
}

TEST_CASE("contains agrees with the Caratheodory oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto pts = random_points(rng, d + 2 + trial % 3, d);
    const auto Q = ConvexPolytope::from_vertices(pts);
    if (Q.intrinsic_dim() != static_cast<int>(d)) continue;
    // Every input point is in the hull, every vertex is an input point.
    for (const auto& v : Q.vertices()) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
    for (const auto& x : random_points(rng, 25, d)) CHECK(contains(Q, x) == caratheodory_contains(pts, x));
    for (const auto& x : pts) CHECK(contains(Q, x));
  }
}

TEST_CASE("vertex/facet round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(rng, 7, 3);
    const auto Q = ConvexPolytope::from_vertices(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(ConvexPolytope::from_vertices(pts) == Q);
    CHECK(ConvexPolytope::from_vertices(Q.vertices()) == Q);
    // Each facet is tight on at least dim affinely independent vertices.
    for (const auto& f : Q.facets()) {
      std::vector<RatVector> tight;
      for (const auto& v : Q.vertices())
        if (dot(f.normal, v) == Rational(f.offset)) tight.push_back(v);
      CHECK(static_cast<int>(tight.size()) >= Q.intrinsic_dim());
    }
  }
}

TEST_CASE("dilate and translate") {
  const auto l = segment_l(2);
  CHECK(dilate(l, 5) == interval(r(-5, 2), r(0)));
  CHECK(dilate(l, 1) == l);
  const auto P = pentagon_P(2);
  const auto T = translate(P, {4, -1});
  CHECK(contains(T, {r(4), r(1, 2)}));
  for (std::int64_t k = 1; k <= 4; ++k) CHECK(count_convex(T, k) == count_convex(P, k));
}

TEST_CASE("product") {
  const auto box = product(interval(0, 1), interval(0, 2));
  CHECK(box.vertices().size() == 4);
  CHECK(box.facets().size() == 4);
  CHECK(product(interval(-3, 3), segment_l(2)) == rectangle_R(2));
  const auto pt = ConvexPolytope::from_vertices({{r(0)}});
  const auto P = pentagon_P(2);
  const auto embedded = product(pt, P);
  CHECK(embedded.ambient_dim() == 3);
  CHECK(embedded.intrinsic_dim() == 2);
  CHECK(embedded.vertices().size() == 5);
  // Product agrees with the brute-force hull of vertex pairs.
  std::vector<RatVector> pairs;
  const auto l = segment_l(3);
  for (const auto& a : l.vertices())
    for (const auto& b : P.vertices()) {
      RatVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      pairs.push_back(v);
    }
  CHECK(product(segment_l(3), P) == ConvexPolytope::from_vertices(pairs));
  for (std::int64_t k = 1; k <= 4; ++k)
    CHECK(count_convex(product(segment_l(3), P), k) == count_convex(segment_l(3), k) * count_convex(P, k));
}

TEST_CASE("pyramid") {
  CHECK(pyramid(segment_l(2), {0, 1}) == simplex_S(3, 2));
  CHECK(pyramid(pentagon_P(2), {0, 0, 1}) == pentagon_pyramid_P(3, 2));
  const auto seg = pyramid(ConvexPolytope::from_vertices({{r(0)}}), {0, 1});
  CHECK(seg.intrinsic_dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK_THROWS_AS(pyramid(segment_l(2), {0, 2}), BadApex);
  CHECK_THROWS_AS(pyramid(segment_l(2), {0, 0, 1}), DimensionMismatch);
}

TEST_CASE("faces") {
  const auto P = pentagon_P(2);
  CHECK(faces(P, 0).size() == 5);
  const auto edges = faces(P, 1);
  CHECK(edges.size() == 5);
  bool found = false;
  for (const auto& e : edges) {
    CHECK(e.dim == 1);
    CHECK(e.vertex_indices.size() == 2);
    if (e.span.A.rows() == 1 && e.span.A.row(0) == IntVector{1, 4} && e.span.b == RatVector{6}) found = true;
  }
  CHECK(found);
  CHECK(faces(P, 2).size() == 1);
  const auto seg = faces(segment_l(2), 1);
  REQUIRE(seg.size() == 1);
  CHECK(seg.front().vertex_indices.size() == 2);
  CHECK(faces(simplex_S(4, 2), 1).size() == 6);
  CHECK(faces(simplex_S(4, 2), 2).size() == 4);
  CHECK_THROWS_AS(faces(P, 3), std::out_of_range);
  CHECK_THROWS_AS(faces(simplex_S(5, 2), 1, 3), DimensionCapExceeded);
}

TEST_CASE("integrality and denominators") {
  CHECK(is_integral(middle_M(3, 2)));
  CHECK_FALSE(is_integral(segment_l(2)));
  CHECK(is_integral(segment_l(1)));
  CHECK(denominator(pentagon_P(3)) == 3);
  CHECK(denominator(middle_M(3, 3)) == 1);
  CHECK(denominator(barn_B(3, 2)) == 2);
  for (std::int64_t p = 1; p <= 6; ++p) CHECK(denominator(segment_l(p)) == p);
}

TEST_CASE("union validation") {
  PolytopalUnion u;
  u.ambient_dim = 2;
  u.pieces = {pentagon_P(2), segment_l(2)};
  CHECK_THROWS_AS(u.validate(), DimensionMismatch);
  u.pieces = {pentagon_P(2), ConvexPolytope::from_vertices({{r(0), r(0)}, {r(1), r(0)}})};
  CHECK_THROWS_AS(u.validate(), DimensionMismatch);
  u.pieces = {pentagon_P(2), rectangle_R(2)};
  CHECK_NOTHROW(u.validate());
}
