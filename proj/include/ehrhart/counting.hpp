#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000'000ULL;

struct CountOptions {
  /// Maximum number of lattice points in the enumerated bounding box.
  std::uint64_t budget = kDefaultPointBudget;
};

/// |kQ ∩ Z^n|.  k = 0 yields 1 for every nonempty polytope.  Lower
/// dimensional polytopes are enumerated inside the integer slice of their
/// affine span.  Throws BudgetExceeded.
Integer count_convex(const ConvexPolytope& q, std::int64_t k, const CountOptions& opts = {});

/// Number of lattice points lying in every listed polytope after dilation
/// by k (their intersection).
Integer count_common(const std::vector<ConvexPolytope>& polys, std::int64_t k,
                     const CountOptions& opts = {});

enum class CountStrategy { Enumerate, Product, InclusionExclusion };
std::string to_string(CountStrategy s);

/// |kU ∩ Z^n|.  Without product structure (or with strategy Enumerate) the
/// union's bounding box is scanned once, counting points in at least one
/// piece.  With product structure, inclusion-exclusion over the pieces and
/// the recorded pairwise intersections, each term a product of factor
/// counts.  Throws MissingIntersection when the product path lacks
/// recorded intersections.
Integer count_union(const PolytopalUnion& u, std::int64_t k, const CountOptions& opts = {});
Integer count_union(const PolytopalUnion& u, std::int64_t k, CountStrategy strategy,
                    const CountOptions& opts = {});

/// Product of the factor counts at dilate k.
Integer count_factorized(const Factorization& factors, std::int64_t k,
                         const CountOptions& opts = {});

/// k ↦ |kX ∩ Z^n| with the strategy that produces it.
struct CountFunction {
  std::function<Integer(std::int64_t)> count;
  CountStrategy strategy = CountStrategy::Enumerate;

  Integer operator()(std::int64_t k) const { return count(k); }
};

CountFunction counter(const ConvexPolytope& q, const CountOptions& opts = {});
CountFunction counter(const PolytopalUnion& u, const CountOptions& opts = {});
CountFunction counter(const PolytopalUnion& u, CountStrategy strategy,
                      const CountOptions& opts = {});

/// Counts for k = 1..k_max.
std::vector<Integer> count_series(const CountFunction& f, std::int64_t k_max);
std::vector<Integer> count_series(const ConvexPolytope& q, std::int64_t k_max,
                                  const CountOptions& opts = {});

}  // namespace ehrhart
