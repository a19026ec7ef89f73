#pragma once

// Verification claims.  Each check rebuilds its polytopes, counts lattice
// points, and embeds the raw counts it used in the report witness so the
// verdict can be rechecked independently.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/json_io.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehrhart {

enum class Outcome { Pass, Fail, Partial, NotAvailable };
std::string to_string(Outcome o);

struct VerificationReport {
  std::string claim;
  Json parameters = Json::object();
  Outcome outcome = Outcome::Fail;
  std::string detail;
  Json witness = Json::object();

  bool passed() const { return outcome == Outcome::Pass; }
};

Json to_json(const VerificationReport& r);

/// A fit together with every count it consumed.
struct RecordedFit {
  QuasiPolynomial fitted = QuasiPolynomial::zero();
  std::map<std::int64_t, Integer> counts;
};
RecordedFit fit_recorded(const CountFunction& f, int degree, std::int64_t modulus);
Json counts_json(const std::map<std::int64_t, Integer>& counts);

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "pentagon-equivalence", "heptagon",       "pyramid-equivalence", "prism-identity",
      "sn-pn-equivalence",    "decomposition",  "hn-periods",          "barn-periods",
      "mcmullen",             "pte-table",      "product-identity",
  };
  return ids;
}

VerificationReport verify_pentagon_equivalence(std::int64_t p, const CountOptions& opts = {});
VerificationReport verify_heptagon(std::int64_t p, const CountOptions& opts = {});
/// i-fold pyramids over P(p) and l(p), counted directly.
VerificationReport verify_pyramid_equivalence(std::int64_t p, int i, const CountOptions& opts = {});
VerificationReport verify_prism_identity(int n, std::int64_t p, std::int64_t k_max = 8,
                                         const CountOptions& opts = {});
VerificationReport verify_sn_pn_equivalence(int n, std::int64_t p, const CountOptions& opts = {});
VerificationReport verify_decomposition(int n, std::int64_t p, std::int64_t k_max = 4,
                                        const CountOptions& opts = {});
VerificationReport verify_hn_periods(int n, std::int64_t p, const CountOptions& opts = {});
VerificationReport verify_barn_periods(int n, std::int64_t p, const CountOptions& opts = {});
/// McMullen's bound for a named convex construction ("segment", "pentagon",
/// "rectangle", "heptagon", "simplex", "prism", "pentagon-pyramid", "hull",
/// "middle", "face-w", "face-p").
VerificationReport verify_mcmullen(const std::string& family, int n, std::int64_t p,
                                   const CountOptions& opts = {});
VerificationReport verify_pte_table();
VerificationReport verify_product_identity(std::size_t m);

struct VerifyAllOptions {
  std::int64_t max_p = 3;
  int max_n = 4;
  std::uint64_t budget = kDefaultPointBudget;
};

/// Every claim over the requested parameter ranges, in claim-id order.
std::vector<VerificationReport> verify_all(const VerifyAllOptions& opts = {});

}  // namespace ehrhart
