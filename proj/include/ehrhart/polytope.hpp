#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

/// normal . x <= offset, with gcd(normal, offset) = 1.
struct Facet {
  IntVector normal;
  Integer offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Convex hull of finitely many rational points.
///
/// Construction reduces the input to its extreme points and computes the
/// affine hull plus the facet inequalities inside it. Facet normals of a
/// lower-dimensional polytope are taken parallel to its affine hull, so the
/// description is unique.  Vertices and facets are kept in lexicographic
/// order.
class ConvexPolytope {
 public:
  /// Throws DimensionMismatch on ragged or empty input.
  static ConvexPolytope from_vertices(std::vector<RatVector> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  bool full_dimensional() const { return intrinsic_dim_ == static_cast<int>(ambient_dim_); }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const AffineSubspace& affine_hull() const { return hull_; }

  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b);

 private:
  ConvexPolytope() = default;
  void normalize();

  std::size_t ambient_dim_ = 0;
  int intrinsic_dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  AffineSubspace hull_;

  friend ConvexPolytope dilate(const ConvexPolytope&, const Integer&);
  friend ConvexPolytope translate(const ConvexPolytope&, const IntVector&);
  friend ConvexPolytope product(const ConvexPolytope&, const ConvexPolytope&);
};

/// Affine hull of a nonempty point set.  Equation rows are the canonical
/// kernel basis of the difference vectors, scaled to primitive integers.
AffineSubspace affine_hull_of(const std::vector<RatVector>& points);

bool contains(const ConvexPolytope& q, const RatVector& x);

/// k * Q for a positive integer k.
ConvexPolytope dilate(const ConvexPolytope& q, const Integer& k);
/// Q + v for an integer vector v.
ConvexPolytope translate(const ConvexPolytope& q, const IntVector& v);
/// Cartesian product; coordinates of a come first.
ConvexPolytope product(const ConvexPolytope& a, const ConvexPolytope& b);
/// conv((Q x {0}) u {apex}); the apex is integral with last coordinate 1.
ConvexPolytope pyramid(const ConvexPolytope& q, const IntVector& apex);

/// An i-dimensional face, identified by the indices of its vertices in the
/// parent's vertex list.
struct Face {
  std::vector<std::size_t> vertex_indices;
  AffineSubspace span;
  int dim = 0;
};

inline constexpr int kDefaultFaceEnumCap = 4;

/// All i-faces.  Throws DimensionCapExceeded when the polytope's dimension
/// exceeds cap, std::out_of_range when i is outside [0, dim].
std::vector<Face> faces(const ConvexPolytope& q, int i, int cap = kDefaultFaceEnumCap);

bool is_integral(const ConvexPolytope& q);
/// lcm of all vertex-coordinate denominators.
Integer denominator(const ConvexPolytope& q);

/// One factor of a product decomposition: the polytope `factor` lives in
/// the listed ambient coordinates (in order).
struct ProductFactor {
  std::vector<std::size_t> coords;
  ConvexPolytope factor;
};
using Factorization = std::vector<ProductFactor>;

struct PieceIntersection {
  std::size_t i = 0;
  std::size_t j = 0;
  ConvexPolytope polytope;
  std::optional<Factorization> factors;
};

/// Finite union of full-dimensional convex pieces glued along integral
/// intersections.
struct PolytopalUnion {
  std::size_t ambient_dim = 0;
  std::vector<ConvexPolytope> pieces;
  std::optional<std::vector<PieceIntersection>> pairwise_intersections;
  std::optional<std::vector<Factorization>> product_structure;

  /// Checks that pieces share the ambient dimension and are full-dimensional,
  /// and that recorded factorizations cover each piece's coordinates.
  /// Throws DimensionMismatch.
  void validate() const;
};

Integer denominator(const PolytopalUnion& u);

/// Reassembles the product of the factors in ambient coordinates.
ConvexPolytope assemble(std::size_t ambient_dim, const Factorization& factors);

}  // namespace ehrhart
