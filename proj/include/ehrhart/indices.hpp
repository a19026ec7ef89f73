#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehrhart {

/// (g_0, ..., g_d): g_i is the least m such that every i-face of mQ has a
/// lattice point in its affine span.
struct IndexSequence {
  std::vector<Integer> values;
};

/// Throws DimensionCapExceeded beyond the face-enumeration cap.
IndexSequence index_sequence(const ConvexPolytope& q, int cap = kDefaultFaceEnumCap);

/// g_d | g_{d-1} | ... | g_0 (which implies the monotone ordering).
bool chain_check(const IndexSequence& seq);

struct McMullenReport {
  std::vector<std::int64_t> periods;
  IndexSequence indices;
  std::vector<bool> divides;  // periods[i] | indices[i]
  bool chain_ok = false;
  bool ok = false;
  QuasiPolynomial fitted = QuasiPolynomial::zero();
};

/// Fits the Ehrhart quasi-polynomial (modulus = denominator(Q)), computes
/// the index sequence, and checks p_i | g_i and the chain.
McMullenReport mcmullen_check(const ConvexPolytope& q, const CountOptions& opts = {},
                              int cap = kDefaultFaceEnumCap);

}  // namespace ehrhart
