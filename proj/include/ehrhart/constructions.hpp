#pragma once

// Generators for the polytope families built from the segment
// l = [-1/p, 0] and the pentagon P with vertices ±q e1, ±(q-1) e1 + e2 and
// (q/p) e2, where q = p^2 - p + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/pte.hpp"

namespace ehrhart {

/// Families with a hull or face computation are limited to n <= 5.
inline constexpr int kConstructionDimCap = 5;

std::int64_t q_of(std::int64_t p);

ConvexPolytope segment_l(std::int64_t p);
ConvexPolytope pentagon_P(std::int64_t p);
/// [-q, q] x l
ConvexPolytope rectangle_R(std::int64_t p);
/// conv(R u P)
ConvexPolytope heptagon_H(std::int64_t p);

/// conv{0, -(1/p) e1, e2, ..., e_{n-1}} in R^{n-1}.
ConvexPolytope simplex_S(int n, std::int64_t p);
/// ([-q, q] x S_n) - q e2 in R^n.
ConvexPolytope prism_W(int n, std::int64_t p);
/// Pyramid over P with apexes e3, ..., en, added in that order.
ConvexPolytope pentagon_pyramid_P(int n, std::int64_t p);
/// conv(W_n u P_n)
ConvexPolytope hull_H(int n, std::int64_t p);
/// The facet of W_n on the hyperplane x2 = -q.
ConvexPolytope face_FW(int n, std::int64_t p);
/// The facet of P_n on the hyperplane x2 = 0.
ConvexPolytope face_FP(int n, std::int64_t p);
/// conv(F_W u F_P)
ConvexPolytope middle_M(int n, std::int64_t p);

/// [lo, hi] as a one-dimensional polytope.
ConvexPolytope interval(const Rational& lo, const Rational& hi);

struct DecompositionRow {
  std::int64_t k = 0;
  Integer hull, prism, middle, pyramid, prism_middle, middle_pyramid;
};

struct DecompositionReport {
  bool ok = false;
  bool intersections_integral = false;
  std::optional<std::int64_t> first_failing_k;
  std::vector<DecompositionRow> rows;
};

/// Checks H_n = W_n u M_n u P_n by lattice counts for k = 1..k_max, with
/// W_n ∩ M_n = F_W and M_n ∩ P_n = F_P confirmed by direct counts of the
/// intersections, and integrality of M_n, F_W and F_P.  Requires n <= 4.
DecompositionReport decomposition_check(int n, std::int64_t p, std::int64_t k_max,
                                        const CountOptions& opts = {});

/// (prod [0, s_i]) x l  ∪  (prod_{j<n-1} [0, t_j]) x P in R^n with the
/// product structure and the integral intersection recorded.  Throws
/// SizeMismatch unless sol has n - 1 entries per side, UnverifiedSolution
/// when sol fails verification.  For n <= 4 the recorded intersection is
/// confirmed against enumeration at k = 1, 2 (VerificationFailed).
PolytopalUnion barn_B(int n, std::int64_t p, const pte::PteSolution& sol);
/// Uses the shipped PTE table; throws NotAvailable when no solution of size
/// n - 1 is known.
PolytopalUnion barn_B(int n, std::int64_t p);

enum class Family {
  Segment,
  Pentagon,
  Rectangle,
  Heptagon,
  Simplex,
  Prism,
  PentagonPyramid,
  HullHn,
  MiddleMn,
  Barn,
};

std::string to_string(Family f);
/// Accepts the enum spelling or the CLI tags (segment, pentagon, rectangle,
/// heptagon, simplex, prism, pentagon-pyramid, hull, middle, barn).
std::optional<Family> parse_family(std::string_view name);

struct ConstructionSpec {
  Family family = Family::Segment;
  std::int64_t p = 1;
  int n = 2;
  std::optional<pte::PteSolution> pte;

  std::int64_t q() const { return q_of(p); }
};

struct Construction {
  std::variant<ConvexPolytope, PolytopalUnion> object;
  std::string provenance;
};

Construction build(const ConstructionSpec& spec);

}  // namespace ehrhart
