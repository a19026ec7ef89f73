#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ehrhart/error.hpp"

namespace ehrhart {

namespace {

RatMatrix rows_to_matrix(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

// gcd-reduces (normal, offset) jointly, with a rational offset allowed.
Facet make_facet(const IntVector& normal, const Rational& offset) {
  const Integer d = offset.get_den();
  Facet f;
  f.normal.resize(normal.size());
  Integer g = abs(offset.get_num());
  for (std::size_t i = 0; i < normal.size(); ++i) {
    f.normal[i] = normal[i] * d;
    g = gcd(g, f.normal[i]);
  }
  f.offset = offset.get_num();
  if (g > 1) {
    for (auto& v : f.normal) v /= g;
    f.offset /= g;
  }
  return f;
}

std::vector<RatVector> equation_rows(const AffineSubspace& s) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < s.A.rows(); ++i) rows.push_back(to_rational(s.A.row(i)));
  return rows;
}

}  // namespace

AffineSubspace affine_hull_of(const std::vector<RatVector>& points) {
  if (points.empty()) throw DimensionMismatch("affine hull of an empty set");
  const std::size_t dim = points.front().size();
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  std::vector<RatVector> normals;
  if (diffs.empty()) {
    for (std::size_t j = 0; j < dim; ++j) normals.push_back(unit_vector(dim, j));
  } else {
    normals = nullspace(rows_to_matrix(diffs, dim));
  }
  RatVector rhs;
  for (const auto& n : normals) rhs.push_back(dot(n, points[0]));
  return AffineSubspace::from_rows(dim, normals, rhs);
}

void ConvexPolytope::normalize() {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(facets_.begin(), facets_.end());
}

ConvexPolytope ConvexPolytope::from_vertices(std::vector<RatVector> points) {
  if (points.empty()) throw DimensionMismatch("polytope needs at least one point");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("ragged vertex list");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  ConvexPolytope q;
  q.ambient_dim_ = dim;
  q.hull_ = affine_hull_of(points);
  const int r = static_cast<int>(dim - q.hull_.A.rows());
  q.intrinsic_dim_ = r;
  if (r == 0) {
    q.vertices_ = {points.front()};
    return q;
  }

  const std::vector<RatVector> eq_rows = equation_rows(q.hull_);
  const std::size_t npts = points.size();
  std::set<Facet> found;

  // Every r-subset of points spans a candidate hyperplane of the hull.
  std::vector<std::size_t> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<RatVector> rows;
    for (int i = 1; i < r; ++i) rows.push_back(sub(points[idx[i]], points[idx[0]]));
    rows.insert(rows.end(), eq_rows.begin(), eq_rows.end());
    const auto kernel = nullspace(rows_to_matrix(rows, dim));
    if (kernel.size() == 1) {
      const IntVector normal = primitive_integer(kernel.front());
      const Rational c = dot(normal, points[idx[0]]);
      bool below = true, above = true;
      for (const auto& p : points) {
        const Rational v = dot(normal, p);
        if (v > c) below = false;
        if (v < c) above = false;
        if (!below && !above) break;
      }
      if (below) {
        found.insert(make_facet(normal, c));
      } else if (above) {
        IntVector neg = normal;
        for (auto& v : neg) v = -v;
        found.insert(make_facet(neg, -c));
      }
    }
    // Next combination.
    int k = r - 1;
    while (k >= 0 && idx[k] == npts - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  q.facets_.assign(found.begin(), found.end());

  // A point is extreme iff its tight facet normals span the direction space.
  for (const auto& p : points) {
    std::vector<RatVector> tight;
    for (const auto& f : q.facets_)
      if (dot(f.normal, p) == Rational(f.offset)) tight.push_back(to_rational(f.normal));
    if (static_cast<int>(tight.size()) < r) continue;
    if (static_cast<int>(rank(rows_to_matrix(tight, dim))) == r) q.vertices_.push_back(p);
  }
  q.normalize();
  return q;
}

bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_ &&
         a.facets_ == b.facets_ && a.hull_.A == b.hull_.A && a.hull_.b == b.hull_.b;
}

bool contains(const ConvexPolytope& q, const RatVector& x) {
  if (x.size() != q.ambient_dim()) throw DimensionMismatch("membership query");
  if (!q.affine_hull().contains(x)) return false;
  for (const auto& f : q.facets())
    if (dot(f.normal, x) > Rational(f.offset)) return false;
  return true;
}

ConvexPolytope dilate(const ConvexPolytope& q, const Integer& k) {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  ConvexPolytope out = q;
  for (auto& v : out.vertices_) v = scale(v, Rational(k));
  for (auto& f : out.facets_) f = make_facet(f.normal, Rational(f.offset * k));
  for (auto& b : out.hull_.b) b *= k;
  out.normalize();
  return out;
}

ConvexPolytope translate(const ConvexPolytope& q, const IntVector& v) {
  if (v.size() != q.ambient_dim()) throw DimensionMismatch("translation vector");
  const RatVector rv = to_rational(v);
  ConvexPolytope out = q;
  for (auto& x : out.vertices_) x = add(x, rv);
  for (auto& f : out.facets_) {
    Integer shift = 0;
    for (std::size_t i = 0; i < v.size(); ++i) shift += f.normal[i] * v[i];
    f.offset += shift;
  }
  for (std::size_t i = 0; i < out.hull_.A.rows(); ++i) out.hull_.b[i] += dot(out.hull_.A.row(i), rv);
  out.normalize();
  return out;
}

ConvexPolytope product(const ConvexPolytope& a, const ConvexPolytope& b) {
  const std::size_t da = a.ambient_dim(), db = b.ambient_dim(), d = da + db;
  ConvexPolytope out;
  out.ambient_dim_ = d;
  out.intrinsic_dim_ = a.intrinsic_dim() + b.intrinsic_dim();
  out.vertices_.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) {
      RatVector v = va;
      v.insert(v.end(), vb.begin(), vb.end());
      out.vertices_.push_back(std::move(v));
    }
  for (const auto& f : a.facets()) {
    Facet g{f.normal, f.offset};
    g.normal.resize(d, Integer(0));
    out.facets_.push_back(std::move(g));
  }
  for (const auto& f : b.facets()) {
    Facet g{IntVector(da, Integer(0)), f.offset};
    g.normal.insert(g.normal.end(), f.normal.begin(), f.normal.end());
    out.facets_.push_back(std::move(g));
  }
  // Kernel bases of block-diagonal systems are block-diagonal, so padding
  // preserves the canonical equation form.
  out.hull_.ambient_dim = d;
  out.hull_.A = IntMatrix(0, d);
  for (std::size_t i = 0; i < a.affine_hull().A.rows(); ++i) {
    IntVector row = a.affine_hull().A.row(i);
    row.resize(d, Integer(0));
    out.hull_.A.append_row(row);
    out.hull_.b.push_back(a.affine_hull().b[i]);
  }
  for (std::size_t i = 0; i < b.affine_hull().A.rows(); ++i) {
    IntVector row(da, Integer(0));
    const IntVector rb = b.affine_hull().A.row(i);
    row.insert(row.end(), rb.begin(), rb.end());
    out.hull_.A.append_row(row);
    out.hull_.b.push_back(b.affine_hull().b[i]);
  }
  out.normalize();
  return out;
}

ConvexPolytope pyramid(const ConvexPolytope& q, const IntVector& apex) {
  if (apex.size() != q.ambient_dim() + 1)
    throw DimensionMismatch("apex must live one dimension up");
  if (apex.back() != 1) throw BadApex("apex final coordinate is " + apex.back().get_str());
  std::vector<RatVector> pts;
  for (const auto& v : q.vertices()) {
    RatVector w = v;
    w.emplace_back(0);
    pts.push_back(std::move(w));
  }
  pts.push_back(to_rational(apex));
  return ConvexPolytope::from_vertices(std::move(pts));
}

std::vector<Face> faces(const ConvexPolytope& q, int i, int cap) {
  const int d = q.intrinsic_dim();
  if (d > cap)
    throw DimensionCapExceeded("face enumeration for dimension " + std::to_string(d) +
                               " exceeds cap " + std::to_string(cap));
  if (i < 0 || i > d) throw std::out_of_range("face dimension out of range");
  const auto& verts = q.vertices();
  if (i == d) {
    Face f;
    for (std::size_t v = 0; v < verts.size(); ++v) f.vertex_indices.push_back(v);
    f.span = q.affine_hull();
    f.dim = d;
    return {f};
  }

  using VSet = std::vector<std::size_t>;
  std::vector<VSet> facet_sets;
  for (const auto& f : q.facets()) {
    VSet s;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (dot(f.normal, verts[v]) == Rational(f.offset)) s.push_back(v);
    facet_sets.push_back(std::move(s));
  }
  // Proper faces are exactly the nonempty intersections of facets.
  std::set<VSet> all(facet_sets.begin(), facet_sets.end());
  std::vector<VSet> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<VSet> next;
    for (const auto& s : frontier)
      for (const auto& f : facet_sets) {
        VSet inter;
        std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(inter));
        if (!inter.empty() && all.insert(inter).second) next.push_back(std::move(inter));
      }
    frontier = std::move(next);
  }

  std::vector<Face> out;
  for (const auto& s : all) {
    std::vector<RatVector> pts;
    for (auto v : s) pts.push_back(verts[v]);
    AffineSubspace span = affine_hull_of(pts);
    const int fd = static_cast<int>(q.ambient_dim() - span.A.rows());
    if (fd != i) continue;
    out.push_back(Face{s, std::move(span), fd});
  }
  return out;
}

bool is_integral(const ConvexPolytope& q) {
  for (const auto& v : q.vertices())
    for (const auto& x : v)
      if (!is_integer(x)) return false;
  return true;
}

Integer denominator(const ConvexPolytope& q) {
  Integer d = 1;
  for (const auto& v : q.vertices()) d = lcm(d, common_denominator(v));
  return d;
}

void PolytopalUnion::validate() const {
  if (pieces.empty()) throw DimensionMismatch("union without pieces");
  for (const auto& p : pieces) {
    if (p.ambient_dim() != ambient_dim) throw DimensionMismatch("piece ambient dimension");
    if (!p.full_dimensional()) throw DimensionMismatch("union pieces must be full-dimensional");
  }
  if (product_structure) {
    if (product_structure->size() != pieces.size())
      throw DimensionMismatch("one factorization per piece");
    for (const auto& fz : *product_structure) {
      std::vector<std::size_t> seen;
      for (const auto& f : fz) {
        if (f.coords.size() != f.factor.ambient_dim())
          throw DimensionMismatch("factor coordinate block");
        seen.insert(seen.end(), f.coords.begin(), f.coords.end());
      }
      std::sort(seen.begin(), seen.end());
      for (std::size_t c = 0; c < seen.size(); ++c)
        if (seen[c] != c || seen.size() != ambient_dim)
          throw DimensionMismatch("factorization must cover each coordinate once");
    }
  }
  if (pairwise_intersections) {
    for (const auto& pi : *pairwise_intersections)
      if (pi.i >= pieces.size() || pi.j >= pieces.size() || pi.i == pi.j ||
          pi.polytope.ambient_dim() != ambient_dim)
        throw DimensionMismatch("bad recorded intersection");
  }
}

Integer denominator(const PolytopalUnion& u) {
  Integer d = 1;
  for (const auto& p : u.pieces) d = lcm(d, denominator(p));
  return d;
}

ConvexPolytope assemble(std::size_t ambient_dim, const Factorization& factors) {
  if (factors.empty()) throw DimensionMismatch("empty factorization");
  ConvexPolytope acc = factors.front().factor;
  std::vector<std::size_t> order = factors.front().coords;
  for (std::size_t f = 1; f < factors.size(); ++f) {
    acc = product(acc, factors[f].factor);
    order.insert(order.end(), factors[f].coords.begin(), factors[f].coords.end());
  }
  if (order.size() != ambient_dim) throw DimensionMismatch("factorization coordinate count");
  bool identity = true;
  for (std::size_t c = 0; c < order.size(); ++c) identity = identity && order[c] == c;
  if (identity) return acc;
  // Coordinate permutation: rebuilt through the vertex constructor, so only
  // suitable for low dimensions.
  std::vector<RatVector> pts;
  for (const auto& v : acc.vertices()) {
    RatVector w(ambient_dim);
    for (std::size_t c = 0; c < order.size(); ++c) w.at(order[c]) = v[c];
    pts.push_back(std::move(w));
  }
  return ConvexPolytope::from_vertices(std::move(pts));
}

}  // namespace ehrhart
