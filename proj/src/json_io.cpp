#include "ehrhart/json_io.hpp"

#include "ehrhart/error.hpp"

namespace ehrhart {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json integers_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(integer_json(x));
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json facets_json(const ConvexPolytope& q) {
  Json fs = Json::array();
  for (const auto& f : q.facets())
    fs.push_back(Json{{"normal", integers_json(f.normal)}, {"offset", integer_json(f.offset)}});
  return fs;
}

Json factorization_json(const Factorization& fz) {
  Json a = Json::array();
  for (const auto& f : fz) a.push_back(Json{{"coords", f.coords}, {"factor", to_json(f.factor)}});
  return a;
}

Factorization factorization_from_json(const Json& j) {
  Factorization fz;
  for (const auto& f : j)
    fz.push_back({f.at("coords").get<std::vector<std::size_t>>(), polytope_from_json(f.at("factor"))});
  return fz;
}

}  // namespace

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const ConvexPolytope& q) {
  Json verts = Json::array();
  for (const auto& v : q.vertices()) verts.push_back(to_json(v));
  Json j{{"ambient_dim", q.ambient_dim()},
         {"intrinsic_dim", q.intrinsic_dim()},
         {"vertices", verts},
         {"facets", facets_json(q)}};
  if (q.affine_hull().A.rows() > 0) {
    Json eqs = Json::array();
    for (std::size_t i = 0; i < q.affine_hull().A.rows(); ++i)
      eqs.push_back(Json{{"normal", integers_json(q.affine_hull().A.row(i))},
                         {"rhs", to_string(q.affine_hull().b[i])}});
    j["equations"] = eqs;
  }
  return j;
}

Json to_json(const PolytopalUnion& u) {
  Json pieces = Json::array();
  for (const auto& p : u.pieces) pieces.push_back(to_json(p));
  Json j{{"ambient_dim", u.ambient_dim}, {"pieces", pieces}};
  if (u.product_structure) {
    Json ps = Json::array();
    for (const auto& fz : *u.product_structure) ps.push_back(factorization_json(fz));
    j["product_structure"] = ps;
  }
  if (u.pairwise_intersections) {
    Json xs = Json::array();
    for (const auto& pi : *u.pairwise_intersections) {
      Json x{{"i", pi.i}, {"j", pi.j}, {"polytope", to_json(pi.polytope)}};
      if (pi.factors) x["factors"] = factorization_json(*pi.factors);
      xs.push_back(x);
    }
    j["pairwise_intersections"] = xs;
  }
  return j;
}

Json to_json(const QuasiPolynomial& f) {
  Json coeffs = Json::array();
  for (const auto& row : f.coeffs()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    coeffs.push_back(r);
  }
  return Json{{"degree", f.degree()},
              {"modulus", f.modulus()},
              {"coeffs", coeffs},
              {"period_sequence", period_sequence(f)}};
}

Json to_json(const EhrhartSeries& e) {
  return Json{{"numerator", integers_json(e.numerator())}, {"D", e.period()}, {"power", e.power()}};
}

Json to_json(const pte::PteSolution& sol) {
  return Json{{"size", sol.size()}, {"s", integers_json(sol.s)}, {"t", integers_json(sol.t)}};
}

ConvexPolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw ParseError("polytope needs \"vertices\"");
  std::vector<RatVector> pts;
  for (const auto& v : j.at("vertices")) {
    RatVector p;
    for (const auto& x : v) p.push_back(rational_from_json(x));
    pts.push_back(std::move(p));
  }
  if (j.contains("ambient_dim")) {
    const auto n = j.at("ambient_dim").get<std::size_t>();
    for (const auto& p : pts)
      if (p.size() != n) throw DimensionMismatch("vertex does not match ambient_dim");
  }
  return ConvexPolytope::from_vertices(std::move(pts));
}

PolytopalUnion union_from_json(const Json& j) {
  PolytopalUnion u;
  if (!j.contains("pieces")) {
    u.pieces.push_back(polytope_from_json(j));
  } else {
    for (const auto& p : j.at("pieces")) u.pieces.push_back(polytope_from_json(p));
  }
  u.ambient_dim = u.pieces.front().ambient_dim();
  if (j.contains("product_structure")) {
    std::vector<Factorization> ps;
    for (const auto& fz : j.at("product_structure")) ps.push_back(factorization_from_json(fz));
    u.product_structure = std::move(ps);
  }
  if (j.contains("pairwise_intersections")) {
    std::vector<PieceIntersection> xs;
    for (const auto& x : j.at("pairwise_intersections")) {
      PieceIntersection pi{x.at("i").get<std::size_t>(), x.at("j").get<std::size_t>(),
                           polytope_from_json(x.at("polytope")), std::nullopt};
      if (x.contains("factors")) pi.factors = factorization_from_json(x.at("factors"));
      xs.push_back(std::move(pi));
    }
    u.pairwise_intersections = std::move(xs);
  }
  u.validate();
  return u;
}

QuasiPolynomial quasipolynomial_from_json(const Json& j) {
  std::vector<std::vector<Rational>> table;
  for (const auto& row : j.at("coeffs")) {
    std::vector<Rational> r;
    for (const auto& c : row) r.push_back(rational_from_json(c));
    table.push_back(std::move(r));
  }
  return QuasiPolynomial(j.at("modulus").get<std::int64_t>(), std::move(table));
}

}  // namespace ehrhart
