#include "ehrhart/constructions.hpp"

#include <stdexcept>

#include "ehrhart/error.hpp"

namespace ehrhart {

namespace {

void require_p(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
}

void require_n(int n, bool capped) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (capped && n > kConstructionDimCap)
    throw DimensionCapExceeded("construction for n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kConstructionDimCap));
}

RatVector point(std::initializer_list<Rational> xs) { return RatVector(xs); }

}  // namespace

std::int64_t q_of(std::int64_t p) { return p * p - p + 1; }

ConvexPolytope interval(const Rational& lo, const Rational& hi) {
  return ConvexPolytope::from_vertices({point({lo}), point({hi})});
}

ConvexPolytope segment_l(std::int64_t p) {
  require_p(p);
  return interval(make_rational(-1, p), 0);
}

ConvexPolytope pentagon_P(std::int64_t p) {
  require_p(p);
  const Rational q = q_of(p);
  return ConvexPolytope::from_vertices({
      point({q, 0}),
      point({-q, 0}),
      point({q - 1, 1}),
      point({-(q - 1), 1}),
      point({0, q / p}),
  });
}

ConvexPolytope rectangle_R(std::int64_t p) {
  require_p(p);
  const Rational q = q_of(p);
  return product(interval(-q, q), segment_l(p));
}

ConvexPolytope heptagon_H(std::int64_t p) {
  auto pts = rectangle_R(p).vertices();
  const auto P = pentagon_P(p);
  const auto& pv = P.vertices();
  pts.insert(pts.end(), pv.begin(), pv.end());
  return ConvexPolytope::from_vertices(std::move(pts));
}

ConvexPolytope simplex_S(int n, std::int64_t p) {
  require_p(p);
  require_n(n, false);
  const std::size_t d = n - 1;
  std::vector<RatVector> pts;
  pts.push_back(RatVector(d, Rational(0)));
  pts.push_back(scale(unit_vector(d, 0), make_rational(-1, p)));
  for (std::size_t j = 1; j < d; ++j) pts.push_back(unit_vector(d, j));
  return ConvexPolytope::from_vertices(std::move(pts));
}

ConvexPolytope prism_W(int n, std::int64_t p) {
  require_n(n, true);
  const std::int64_t q = q_of(p);
  IntVector shift(n, Integer(0));
  shift[1] = -q;
  return translate(product(interval(-q, q), simplex_S(n, p)), shift);
}

ConvexPolytope pentagon_pyramid_P(int n, std::int64_t p) {
  require_n(n, true);
  ConvexPolytope acc = pentagon_P(p);
  for (int d = 3; d <= n; ++d) {
    IntVector apex(d, Integer(0));
    apex[d - 1] = 1;
    acc = pyramid(acc, apex);
  }
  return acc;
}

ConvexPolytope hull_H(int n, std::int64_t p) {
  auto pts = prism_W(n, p).vertices();
  const auto P = pentagon_pyramid_P(n, p);
  const auto& pv = P.vertices();
  pts.insert(pts.end(), pv.begin(), pv.end());
  return ConvexPolytope::from_vertices(std::move(pts));
}

ConvexPolytope face_FW(int n, std::int64_t p) {
  require_p(p);
  require_n(n, true);
  const Rational q = q_of(p);
  std::vector<RatVector> pts;
  for (int sign : {1, -1}) {
    RatVector base(n, Rational(0));
    base[0] = q * sign;
    base[1] = -q;
    pts.push_back(base);
    for (int j = 2; j < n; ++j) pts.push_back(add(base, unit_vector(n, j)));
  }
  return ConvexPolytope::from_vertices(std::move(pts));
}

ConvexPolytope face_FP(int n, std::int64_t p) {
  require_p(p);
  require_n(n, true);
  const Rational q = q_of(p);
  std::vector<RatVector> pts;
  for (int sign : {1, -1}) pts.push_back(scale(unit_vector(n, 0), q * sign));
  for (int j = 2; j < n; ++j) pts.push_back(unit_vector(n, j));
  return ConvexPolytope::from_vertices(std::move(pts));
}

ConvexPolytope middle_M(int n, std::int64_t p) {
  auto pts = face_FW(n, p).vertices();
  const auto F = face_FP(n, p);
  const auto& fp = F.vertices();
  pts.insert(pts.end(), fp.begin(), fp.end());
  return ConvexPolytope::from_vertices(std::move(pts));
}

DecompositionReport decomposition_check(int n, std::int64_t p, std::int64_t k_max,
                                        const CountOptions& opts) {
  if (n > 4) throw DimensionCapExceeded("decomposition check is limited to n <= 4");
  const auto H = hull_H(n, p);
  const auto W = prism_W(n, p);
  const auto P = pentagon_pyramid_P(n, p);
  const auto M = middle_M(n, p);
  const auto FW = face_FW(n, p);
  const auto FP = face_FP(n, p);

  DecompositionReport report;
  report.intersections_integral = is_integral(M) && is_integral(FW) && is_integral(FP);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    DecompositionRow row;
    row.k = k;
    row.hull = count_convex(H, k, opts);
    row.prism = count_convex(W, k, opts);
    row.middle = count_convex(M, k, opts);
    row.pyramid = count_convex(P, k, opts);
    row.prism_middle = count_convex(FW, k, opts);
    row.middle_pyramid = count_convex(FP, k, opts);
    const bool glued = count_common({W, M}, k, opts) == row.prism_middle &&
                       count_common({M, P}, k, opts) == row.middle_pyramid &&
                       count_common({W, P}, k, opts) == 0;
    const bool additive = row.hull == row.prism + row.middle + row.pyramid - row.prism_middle -
                                          row.middle_pyramid;
    report.rows.push_back(row);
    if ((!glued || !additive) && !report.first_failing_k) report.first_failing_k = k;
  }
  report.ok = report.intersections_integral && !report.first_failing_k;
  return report;
}

PolytopalUnion barn_B(int n, std::int64_t p, const pte::PteSolution& sol) {
  require_p(p);
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const std::size_t m = static_cast<std::size_t>(n) - 1;
  if (sol.s.size() != m || sol.t.size() != m)
    throw SizeMismatch("barn in dimension " + std::to_string(n) + " needs a PTE solution of size " +
                       std::to_string(m));
  if (!pte::verify(sol)) throw UnverifiedSolution("PTE pair fails the power-sum equalities");
  const std::int64_t q = q_of(p);
  const std::size_t dim = n;

  Factorization first, second, common;
  for (std::size_t i = 0; i < m; ++i) first.push_back({{i}, interval(0, Rational(sol.s[i]))});
  first.push_back({{dim - 1}, segment_l(p)});
  for (std::size_t j = 0; j + 1 < m; ++j) second.push_back({{j}, interval(0, Rational(sol.t[j]))});
  second.push_back({{dim - 2, dim - 1}, pentagon_P(p)});
  for (std::size_t i = 0; i + 1 < m; ++i)
    common.push_back({{i}, interval(0, Rational(std::min(sol.s[i], sol.t[i])))});
  common.push_back({{dim - 2}, interval(0, Rational(std::min(sol.s[m - 1], Integer(q))))});
  common.push_back({{dim - 1}, ConvexPolytope::from_vertices({point({0})})});

  PolytopalUnion u;
  u.ambient_dim = dim;
  u.pieces = {assemble(dim, first), assemble(dim, second)};
  u.pairwise_intersections = std::vector<PieceIntersection>{
      PieceIntersection{0, 1, assemble(dim, common), common}};
  u.product_structure = std::vector<Factorization>{first, second};
  u.validate();

  if (n <= 4) {
    for (std::int64_t k = 1; k <= 2; ++k) {
      const Integer actual = count_common(u.pieces, k);
      const Integer recorded = count_factorized(common, k);
      if (actual != recorded)
        throw VerificationFailed("recorded barn intersection has " + recorded.get_str() +
                                 " points at k = " + std::to_string(k) + ", enumeration finds " +
                                 actual.get_str());
    }
  }
  return u;
}

PolytopalUnion barn_B(int n, std::int64_t p) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const auto sol = pte::table_lookup(static_cast<std::size_t>(n) - 1);
  if (!sol) throw NotAvailable("PTE size " + std::to_string(n - 1));
  return barn_B(n, p, *sol);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Segment: return "segment";
    case Family::Pentagon: return "pentagon";
    case Family::Rectangle: return "rectangle";
    case Family::Heptagon: return "heptagon";
    case Family::Simplex: return "simplex";
    case Family::Prism: return "prism";
    case Family::PentagonPyramid: return "pentagon-pyramid";
    case Family::HullHn: return "hull";
    case Family::MiddleMn: return "middle";
    case Family::Barn: return "barn";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  static const std::pair<std::string_view, Family> names[] = {
      {"segment", Family::Segment},          {"Segment", Family::Segment},
      {"pentagon", Family::Pentagon},        {"Pentagon", Family::Pentagon},
      {"rectangle", Family::Rectangle},      {"Rectangle", Family::Rectangle},
      {"heptagon", Family::Heptagon},        {"Heptagon", Family::Heptagon},
      {"simplex", Family::Simplex},          {"Simplex", Family::Simplex},
      {"prism", Family::Prism},              {"Prism", Family::Prism},
      {"pentagon-pyramid", Family::PentagonPyramid},
      {"PentagonPyramid", Family::PentagonPyramid},
      {"hull", Family::HullHn},              {"HullHn", Family::HullHn},
      {"middle", Family::MiddleMn},          {"MiddleMn", Family::MiddleMn},
      {"barn", Family::Barn},                {"Barn", Family::Barn},
  };
  for (const auto& [key, fam] : names)
    if (key == name) return fam;
  return std::nullopt;
}

Construction build(const ConstructionSpec& spec) {
  const std::string pn = "p = " + std::to_string(spec.p);
  const std::string pnn = pn + ", n = " + std::to_string(spec.n);
  switch (spec.family) {
    case Family::Segment:
      return {segment_l(spec.p), "segment l = [-1/p, 0], " + pn};
    case Family::Pentagon:
      return {pentagon_P(spec.p), "pentagon P = conv{±q e1, ±(q-1) e1 + e2, (q/p) e2}, " + pn};
    case Family::Rectangle:
      return {rectangle_R(spec.p), "rectangle R = [-q, q] x l, " + pn};
    case Family::Heptagon:
      return {heptagon_H(spec.p), "heptagon H = conv(R u P), " + pn};
    case Family::Simplex:
      return {simplex_S(spec.n, spec.p), "simplex S_n = conv{0, -(1/p) e1, e2, ..., e_(n-1)}, " + pnn};
    case Family::Prism:
      return {prism_W(spec.n, spec.p), "prism W_n = ([-q, q] x S_n) - q e2, " + pnn};
    case Family::PentagonPyramid:
      return {pentagon_pyramid_P(spec.n, spec.p), "pyramid P_n = conv(P' u {e3, ..., en}), " + pnn};
    case Family::HullHn:
      return {hull_H(spec.n, spec.p), "hull H_n = conv(W_n u P_n), " + pnn};
    case Family::MiddleMn:
      return {middle_M(spec.n, spec.p), "middle piece M_n = conv(F_W u F_P), " + pnn};
    case Family::Barn: {
      auto u = spec.pte ? barn_B(spec.n, spec.p, *spec.pte) : barn_B(spec.n, spec.p);
      return {std::move(u), "barn B_n = (prod [0, s_i]) x l  u  (prod [0, t_j]) x P, " + pnn};
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace ehrhart
