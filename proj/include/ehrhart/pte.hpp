#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ehrhart/arith.hpp"

namespace ehrhart::pte {

/// Ideal Prouhet-Tarry-Escott pair: p_k(s) = p_k(t) for 0 <= k < m, all s
/// positive, t positive except its last entry, which is 0.
struct PteSolution {
  IntVector s;
  IntVector t;

  std::size_t size() const { return s.size(); }
  friend bool operator==(const PteSolution&, const PteSolution&) = default;
};

Integer power_sum(unsigned k, const IntVector& xs);
Integer elem_sym(unsigned k, const IntVector& xs);

/// Power-sum equalities plus the sign pattern (and equal sizes).
bool verify(const PteSolution& sol);

/// Shifts an ideal pair so its unique minimum becomes 0 and orients it as
/// (s; t) with the zero last in t.  Throws Rejected when the sizes differ,
/// the power sums disagree, or the minimum occurs more than once.
PteSolution normalize(const IntVector& a, const IntVector& b);

/// prod (s_i x + 1) - prod_{j<m} (t_j x + 1) == (s_1 ... s_m) x^m.
bool product_identity_check(const PteSolution& sol);

/// Integer polynomial prod (x_i x + 1), ascending coefficients.
IntVector linear_factor_product(const IntVector& xs);

/// Parses lines "m: s_1,...,s_m ; t_1,...,t_m" ('#' starts a comment).
/// Every entry must pass verify() and product_identity_check(); throws
/// UnverifiedSolution or ParseError otherwise.
std::map<std::size_t, PteSolution> parse_table(std::string_view text);

/// The shipped table (sizes 2-10 and 12).
const std::map<std::size_t, PteSolution>& table();
std::optional<PteSolution> table_lookup(std::size_t m);

}  // namespace ehrhart::pte
