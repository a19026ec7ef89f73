#pragma once

// JSON encodings.  Rationals are strings "num/den" (denominator omitted when
// it is 1); integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise.

#include <json.hpp>

#include "ehrhart/arith.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/pte.hpp"
#include "ehrhart/quasipoly.hpp"
#include "ehrhart/series.hpp"

namespace ehrhart {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& x);
Json integers_json(const std::vector<Integer>& xs);
Integer integer_from_json(const Json& j);

Json to_json(const RatVector& v);
Json to_json(const ConvexPolytope& q);
Json to_json(const PolytopalUnion& u);
Json to_json(const QuasiPolynomial& f);
Json to_json(const EhrhartSeries& e);
Json to_json(const pte::PteSolution& sol);

/// { "ambient_dim": n, "vertices": [["num/den", ...], ...] }.  Throws
/// ParseError / DimensionMismatch.
ConvexPolytope polytope_from_json(const Json& j);
/// Either a polytope document or one with "pieces" (and optionally
/// "product_structure" / "pairwise_intersections").
PolytopalUnion union_from_json(const Json& j);
QuasiPolynomial quasipolynomial_from_json(const Json& j);

}  // namespace ehrhart
