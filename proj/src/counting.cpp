#include "ehrhart/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "ehrhart/error.hpp"

namespace ehrhart {

namespace {

// ---------------------------------------------------------------------------
// Integer systems {z : A z <= c} inside a box, counted by nested interval
// clipping.  The coordinate with the widest range runs innermost.

struct System {
  std::vector<IntVector> A;
  IntVector c;
};

struct Region {
  std::vector<System> pieces;  // counted as a union
  IntVector lo, hi;
};

// Integer kernels: int64 and __int128 when magnitudes provably fit, GMP
// otherwise.
using i128 = __int128;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
template <class T>
inline T ceil_div(const T& a, const T& b) {
  return -floor_div(T(-a), b);
}

template <class T>
T convert(const Integer& x);
template <>
std::int64_t convert<std::int64_t>(const Integer& x) {
  return to_int64(x);
}
template <>
i128 convert<i128>(const Integer& x) {
  const Integer ax = abs(x);
  const Integer hi = ax >> 64;
  const Integer lo = ax - (hi << 64);
  const auto hv = static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t()));
  const auto lv = static_cast<unsigned __int128>(mpz_get_ui(lo.get_mpz_t()));
  const i128 v = static_cast<i128>((hv << 64) | lv);
  return x < 0 ? -v : v;
}
template <>
Integer convert<Integer>(const Integer& x) {
  return x;
}

template <class T>
std::uint64_t to_u64(const T& x) {
  return static_cast<std::uint64_t>(x);
}
template <>
std::uint64_t to_u64<Integer>(const Integer& x) {
  return mpz_get_ui(x.get_mpz_t());
}

template <class T>
class Enumerator {
 public:
  Enumerator(const Region& region, const std::vector<std::size_t>& order) : d_(order.size()) {
    for (std::size_t j = 0; j < d_; ++j) {
      lo_.push_back(convert<T>(region.lo[order[j]]));
      hi_.push_back(convert<T>(region.hi[order[j]]));
    }
    for (const auto& sys : region.pieces) {
      Piece p;
      p.m = sys.c.size();
      p.first = total_;
      total_ += p.m;
      for (std::size_t f = 0; f < p.m; ++f) {
        std::vector<T> row(d_);
        for (std::size_t j = 0; j < d_; ++j) row[j] = convert<T>(sys.A[f][order[j]]);
        // suffix[j] = min over the box of sum_{l >= j} a_l z_l
        std::vector<T> suffix(d_ + 1, T(0));
        for (std::size_t j = d_; j-- > 0;) {
          const T a = row[j];
          const T m = a >= 0 ? T(a * lo_[j]) : T(a * hi_[j]);
          suffix[j] = suffix[j + 1] + m;
        }
        p.a.push_back(std::move(row));
        p.suffix.push_back(std::move(suffix));
        p.c.push_back(convert<T>(sys.c[f]));
      }
      pieces_.push_back(std::move(p));
    }
    partial_.assign(d_ + 1, std::vector<T>(total_, T(0)));
  }

  std::uint64_t run() {
    std::vector<std::size_t> alive(pieces_.size());
    std::iota(alive.begin(), alive.end(), 0);
    return level(0, alive);
  }

 private:
  struct Piece {
    std::size_t m = 0, first = 0;
    std::vector<std::vector<T>> a;
    std::vector<std::vector<T>> suffix;
    std::vector<T> c;
  };

  // Range of coordinate j for piece p given the fixed outer coordinates;
  // returns false when empty.
  bool clip(std::size_t j, const Piece& p, T& lo, T& hi) const {
    lo = lo_[j];
    hi = hi_[j];
    const auto& part = partial_[j];
    for (std::size_t f = 0; f < p.m; ++f) {
      const T rhs = p.c[f] - part[p.first + f] - p.suffix[f][j + 1];
      const T& a = p.a[f][j];
      if (a > 0) {
        const T u = floor_div(rhs, a);
        if (u < hi) hi = u;
      } else if (a < 0) {
        const T l = ceil_div(rhs, a);
        if (l > lo) lo = l;
      } else if (rhs < 0) {
        return false;
      }
      if (lo > hi) return false;
    }
    return true;
  }

  std::uint64_t level(std::size_t j, const std::vector<std::size_t>& alive) {
    std::vector<std::pair<T, T>> iv(alive.size());
    std::vector<std::size_t> live;
    for (std::size_t a = 0; a < alive.size(); ++a) {
      T lo, hi;
      if (clip(j, pieces_[alive[a]], lo, hi)) {
        iv[live.size()] = {lo, hi};
        live.push_back(alive[a]);
      }
    }
    iv.resize(live.size());
    if (live.empty()) return 0;

    if (j + 1 == d_) {
      std::sort(iv.begin(), iv.end());
      std::uint64_t total = 0;
      T cur_lo = iv[0].first, cur_hi = iv[0].second;
      for (std::size_t a = 1; a < iv.size(); ++a) {
        if (iv[a].first > cur_hi + 1) {
          total += to_u64(T(cur_hi - cur_lo + 1));
          cur_lo = iv[a].first;
          cur_hi = iv[a].second;
        } else if (iv[a].second > cur_hi) {
          cur_hi = iv[a].second;
        }
      }
      total += to_u64(T(cur_hi - cur_lo + 1));
      return total;
    }

    T zlo = iv[0].first, zhi = iv[0].second;
    for (const auto& [l, h] : iv) {
      if (l < zlo) zlo = l;
      if (h > zhi) zhi = h;
    }
    std::uint64_t total = 0;
    std::vector<std::size_t> next;
    next.reserve(live.size());
    for (T z = zlo; z <= zhi; ++z) {
      next.clear();
      for (std::size_t a = 0; a < live.size(); ++a) {
        if (z < iv[a].first || z > iv[a].second) continue;
        const Piece& p = pieces_[live[a]];
        for (std::size_t f = 0; f < p.m; ++f)
          partial_[j + 1][p.first + f] = partial_[j][p.first + f] + p.a[f][j] * z;
        next.push_back(live[a]);
      }
      if (!next.empty()) total += level(j + 1, next);
    }
    return total;
  }

  std::size_t d_;
  std::size_t total_ = 0;
  std::vector<T> lo_, hi_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<T>> partial_;
};

Integer count_region(const Region& region, const CountOptions& opts) {
  const std::size_t d = region.lo.size();
  if (d == 0) throw std::logic_error("zero-dimensional region");
  Integer box = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (region.lo[j] > region.hi[j]) return 0;
    box *= region.hi[j] - region.lo[j] + 1;
  }
  if (box > Integer(std::to_string(opts.budget)))
    throw BudgetExceeded("bounding box holds " + box.get_str() + " points, budget " +
                         std::to_string(opts.budget));

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  // Widest coordinate innermost; ties keep the natural order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return region.hi[a] - region.lo[a] < region.hi[b] - region.lo[b];
  });

  Integer bound = 0;
  for (const auto& sys : region.pieces)
    for (std::size_t f = 0; f < sys.c.size(); ++f) {
      Integer s = abs(sys.c[f]);
      for (std::size_t j = 0; j < d; ++j)
        s += abs(sys.A[f][j]) * std::max(abs(region.lo[j]), abs(region.hi[j]));
      bound = std::max(bound, s);
    }
  bound = 4 * bound + 4;
  if (bound < (Integer(1) << 62)) return Integer(std::to_string(Enumerator<std::int64_t>(region, order).run()));
  if (bound < (Integer(1) << 125)) return Integer(std::to_string(Enumerator<i128>(region, order).run()));
  return Integer(std::to_string(Enumerator<Integer>(region, order).run()));
}

void require_dilate(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("dilate must be nonnegative");
}

// Full-dimensional polytope scaled by k, in the original coordinates.
System scaled_system(const ConvexPolytope& q, std::int64_t k) {
  System s;
  for (const auto& f : q.facets()) {
    s.A.push_back(f.normal);
    s.c.push_back(f.offset * k);
  }
  return s;
}

void scaled_box(const ConvexPolytope& q, std::int64_t k, IntVector& lo, IntVector& hi) {
  const std::size_t n = q.ambient_dim();
  lo.assign(n, Integer(0));
  hi.assign(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = q.vertices().front()[j], mx = mn;
    for (const auto& v : q.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil(mn * k);
    hi[j] = floor(mx * k);
  }
}

}  // namespace

Integer count_convex(const ConvexPolytope& q, std::int64_t k, const CountOptions& opts) {
  require_dilate(k);
  if (k == 0) return 1;
  const std::size_t n = q.ambient_dim();
  if (q.full_dimensional()) {
    Region r;
    r.pieces.push_back(scaled_system(q, k));
    scaled_box(q, k, r.lo, r.hi);
    return count_region(r, opts);
  }

  // Lower-dimensional: x = x0 + N z over the lattice of the affine slice.
  const AffineSubspace& hull = q.affine_hull();
  const auto sol = solve_integer(hull.A, scale(hull.b, Rational(k)));
  if (!sol) return 0;
  const IntMatrix& N = sol->kernel;
  const std::size_t d = N.cols();
  if (d == 0) {
    // The slice is a single point; the polytope is that point.
    return contains(dilate(q, k), to_rational(sol->particular)) ? 1 : 0;
  }
  Region r;
  System sys;
  for (const auto& f : q.facets()) {
    IntVector row(d, Integer(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += f.normal[i] * N(i, j);
    Integer shift = 0;
    for (std::size_t i = 0; i < n; ++i) shift += f.normal[i] * sol->particular[i];
    sys.A.push_back(std::move(row));
    sys.c.push_back(f.offset * k - shift);
  }
  r.pieces.push_back(std::move(sys));

  const RatMatrix Nr = to_rational(N);
  const RatVector x0 = to_rational(sol->particular);
  std::optional<RatVector> zmin, zmax;
  for (const auto& v : q.vertices()) {
    const auto z = solve_rational(Nr, sub(scale(v, Rational(k)), x0));
    if (!z) throw std::logic_error("vertex outside its own affine hull");
    if (!zmin) {
      zmin = *z;
      zmax = *z;
    }
    for (std::size_t j = 0; j < d; ++j) {
      (*zmin)[j] = std::min((*zmin)[j], (*z)[j]);
      (*zmax)[j] = std::max((*zmax)[j], (*z)[j]);
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    r.lo.push_back(ceil((*zmin)[j]));
    r.hi.push_back(floor((*zmax)[j]));
  }
  return count_region(r, opts);
}

Integer count_common(const std::vector<ConvexPolytope>& polys, std::int64_t k,
                     const CountOptions& opts) {
  require_dilate(k);
  if (polys.empty()) throw DimensionMismatch("intersection of nothing");
  if (k == 0) return 1;
  const std::size_t n = polys.front().ambient_dim();
  Region r;
  System sys;
  IntVector lo, hi;
  for (std::size_t p = 0; p < polys.size(); ++p) {
    const auto& q = polys[p];
    if (q.ambient_dim() != n) throw DimensionMismatch("intersection operands");
    for (const auto& f : q.facets()) {
      sys.A.push_back(f.normal);
      sys.c.push_back(f.offset * k);
    }
    const auto& hull = q.affine_hull();
    for (std::size_t i = 0; i < hull.A.rows(); ++i) {
      const Rational rhs = hull.b[i] * k;
      if (!is_integer(rhs)) return 0;
      IntVector row = hull.A.row(i);
      sys.A.push_back(row);
      sys.c.push_back(rhs.get_num());
      for (auto& v : row) v = -v;
      sys.A.push_back(std::move(row));
      sys.c.push_back(-rhs.get_num());
    }
    IntVector plo, phi;
    scaled_box(q, k, plo, phi);
    if (p == 0) {
      lo = plo;
      hi = phi;
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        lo[j] = std::max(lo[j], plo[j]);
        hi[j] = std::min(hi[j], phi[j]);
      }
    }
  }
  r.pieces.push_back(std::move(sys));
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return count_region(r, opts);
}

std::string to_string(CountStrategy s) {
  switch (s) {
    case CountStrategy::Enumerate: return "enumerate";
    case CountStrategy::Product: return "product";
    case CountStrategy::InclusionExclusion: return "inclusion-exclusion";
  }
  return "unknown";
}

Integer count_factorized(const Factorization& factors, std::int64_t k, const CountOptions& opts) {
  Integer total = 1;
  for (const auto& f : factors) {
    total *= count_convex(f.factor, k, opts);
    if (total == 0) break;
  }
  return total;
}

Integer count_union(const PolytopalUnion& u, std::int64_t k, CountStrategy strategy,
                    const CountOptions& opts) {
  require_dilate(k);
  u.validate();
  if (k == 0) return 1;
  if (strategy == CountStrategy::Enumerate) {
    Region r;
    for (std::size_t p = 0; p < u.pieces.size(); ++p) {
      r.pieces.push_back(scaled_system(u.pieces[p], k));
      IntVector lo, hi;
      scaled_box(u.pieces[p], k, lo, hi);
      if (p == 0) {
        r.lo = lo;
        r.hi = hi;
      } else {
        for (std::size_t j = 0; j < u.ambient_dim; ++j) {
          r.lo[j] = std::min(r.lo[j], lo[j]);
          r.hi[j] = std::max(r.hi[j], hi[j]);
        }
      }
    }
    return count_region(r, opts);
  }

  if (strategy == CountStrategy::Product && !u.product_structure)
    throw MissingIntersection("product strategy needs a product structure");
  if (u.pieces.size() > 1 && !u.pairwise_intersections)
    throw MissingIntersection("inclusion-exclusion needs recorded pairwise intersections");
  Integer total = 0;
  for (std::size_t p = 0; p < u.pieces.size(); ++p) {
    total += u.product_structure ? count_factorized((*u.product_structure)[p], k, opts)
                                 : count_convex(u.pieces[p], k, opts);
  }
  if (u.pairwise_intersections) {
    for (const auto& inter : *u.pairwise_intersections) {
      total -= inter.factors ? count_factorized(*inter.factors, k, opts)
                             : count_convex(inter.polytope, k, opts);
    }
  }
  return total;
}

Integer count_union(const PolytopalUnion& u, std::int64_t k, const CountOptions& opts) {
  return count_union(u, k, u.product_structure ? CountStrategy::Product : CountStrategy::Enumerate,
                     opts);
}

CountFunction counter(const ConvexPolytope& q, const CountOptions& opts) {
  return CountFunction{[q, opts](std::int64_t k) { return count_convex(q, k, opts); },
                       CountStrategy::Enumerate};
}

CountFunction counter(const PolytopalUnion& u, CountStrategy strategy, const CountOptions& opts) {
  return CountFunction{[u, strategy, opts](std::int64_t k) { return count_union(u, k, strategy, opts); },
                       strategy};
}

CountFunction counter(const PolytopalUnion& u, const CountOptions& opts) {
  return counter(u, u.product_structure ? CountStrategy::Product : CountStrategy::Enumerate, opts);
}

std::vector<Integer> count_series(const CountFunction& f, std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  std::vector<Integer> out;
  out.reserve(k_max);
  for (std::int64_t k = 1; k <= k_max; ++k) out.push_back(f(k));
  return out;
}

std::vector<Integer> count_series(const ConvexPolytope& q, std::int64_t k_max,
                                  const CountOptions& opts) {
  return count_series(counter(q, opts), k_max);
}

}  // namespace ehrhart
