// ehrhart: construct, count and fit the polytopes behind the period-collapse
// examples, and run the verification claims.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "ehrhart/constructions.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/indices.hpp"
#include "ehrhart/json_io.hpp"
#include "ehrhart/pte.hpp"
#include "ehrhart/report.hpp"
#include "ehrhart/series.hpp"

using namespace ehrhart;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string family;
  std::string input;
  std::int64_t p = 2;
  int n = 3;
  int i = 1;
  std::int64_t k_max = 5;
  std::uint64_t budget = kDefaultPointBudget;
  std::string format = "json";
  std::string strategy;
  int degree = -1;
  std::int64_t modulus = 0;
  std::int64_t max_p = 3;
  int max_n = 4;
  std::size_t m = 0;
  std::vector<std::string> s, t;
  std::string claim;
};

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("EHRHART_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad EHRHART_BUDGET: ") + env);
    }
  }
  return kDefaultPointBudget;
}

IntVector parse_ints(const std::vector<std::string>& xs) {
  IntVector out;
  for (const auto& x : xs) {
    Integer v;
    if (v.set_str(x, 10) != 0) throw UsageError("not an integer: " + x);
    out.push_back(v);
  }
  return out;
}

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

using Object = std::variant<ConvexPolytope, PolytopalUnion>;

ConstructionSpec spec_from(const Args& a) {
  const auto fam = parse_family(a.family);
  if (!fam) throw UsageError("unknown family: " + a.family);
  ConstructionSpec spec{*fam, a.p, a.n, std::nullopt};
  if (!a.s.empty() || !a.t.empty()) spec.pte = pte::normalize(parse_ints(a.s), parse_ints(a.t));
  return spec;
}

Object load_object(const Args& a) {
  if (!a.input.empty() && !a.family.empty()) throw UsageError("give either --family or --input");
  if (!a.input.empty()) {
    auto u = union_from_json(read_json(a.input));
    if (u.pieces.size() == 1 && !u.product_structure) return u.pieces.front();
    return u;
  }
  if (a.family.empty()) throw UsageError("--family or --input is required");
  return build(spec_from(a)).object;
}

std::optional<CountStrategy> parse_strategy(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (auto c : {CountStrategy::Enumerate, CountStrategy::Product, CountStrategy::InclusionExclusion})
    if (to_string(c) == s) return c;
  throw UsageError("unknown strategy: " + s);
}

CountFunction counter_for(const Object& obj, const Args& a) {
  const CountOptions opts{a.budget};
  if (const auto* q = std::get_if<ConvexPolytope>(&obj)) return counter(*q, opts);
  const auto& u = std::get<PolytopalUnion>(obj);
  if (const auto s = parse_strategy(a.strategy)) return counter(u, *s, opts);
  return counter(u, opts);
}

int dimension(const Object& obj) {
  if (const auto* q = std::get_if<ConvexPolytope>(&obj)) return q->intrinsic_dim();
  int d = 0;
  for (const auto& piece : std::get<PolytopalUnion>(obj).pieces) d = std::max(d, piece.intrinsic_dim());
  return d;
}

std::int64_t modulus_of(const Object& obj) {
  return std::visit([](const auto& x) { return to_int64(denominator(x)); }, obj);
}

RecordedFit fit_object(const Object& obj, const Args& a) {
  const int degree = a.degree >= 0 ? a.degree : dimension(obj);
  const std::int64_t modulus = a.modulus > 0 ? a.modulus : modulus_of(obj);
  return fit_recorded(counter_for(obj, a), degree, modulus);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_counts_csv(const std::map<std::int64_t, Integer>& counts) {
  std::cout << "k,count\n";
  for (const auto& [k, c] : counts) std::cout << k << ',' << c.get_str() << '\n';
}

int cmd_construct(const Args& a) {
  const auto spec = spec_from(a);
  const auto c = build(spec);
  Json out{{"family", to_string(spec.family)}, {"p", a.p}, {"q", spec.q()}, {"n", a.n},
           {"provenance", c.provenance}};
  std::visit([&](const auto& x) { out["object"] = to_json(x); }, c.object);
  emit(out);
  return 0;
}

int cmd_count(const Args& a) {
  const auto obj = load_object(a);
  const auto f = counter_for(obj, a);
  std::map<std::int64_t, Integer> counts;
  for (std::int64_t k = 1; k <= a.k_max; ++k) counts.emplace(k, f(k));
  if (a.format == "csv") {
    emit_counts_csv(counts);
  } else {
    Json out = counts_json(counts);
    out["strategy"] = to_string(f.strategy);
    emit(out);
  }
  return 0;
}

int cmd_fit(const Args& a) {
  const auto obj = load_object(a);
  const auto f = fit_object(obj, a);
  if (a.format == "csv") {
    std::cout << "i,r,coeff\n";
    for (int i = 0; i <= f.fitted.degree(); ++i)
      for (std::int64_t r = 0; r < f.fitted.modulus(); ++r)
        std::cout << i << ',' << r << ',' << to_string(f.fitted.coeff(i, r)) << '\n';
  } else {
    emit(Json{{"fit", to_json(f.fitted)}, {"counts", counts_json(f.counts)}});
  }
  return 0;
}

int cmd_periods(const Args& a) {
  const auto obj = load_object(a);
  const auto f = fit_object(obj, a);
  const auto periods = period_sequence(f.fitted);
  if (a.format == "csv") {
    std::cout << "i,period\n";
    for (std::size_t i = 0; i < periods.size(); ++i) std::cout << i << ',' << periods[i] << '\n';
  } else {
    emit(Json{{"period_sequence", periods}, {"counts", counts_json(f.counts)}});
  }
  return 0;
}

int cmd_indices(const Args& a) {
  const auto obj = load_object(a);
  const auto* q = std::get_if<ConvexPolytope>(&obj);
  if (!q) throw Rejected("index sequences are defined for convex polytopes only");
  const auto rep = mcmullen_check(*q, CountOptions{a.budget});
  if (a.format == "csv") {
    std::cout << "i,index,period\n";
    for (std::size_t i = 0; i < rep.periods.size(); ++i)
      std::cout << i << ',' << rep.indices.values[i].get_str() << ',' << rep.periods[i] << '\n';
  } else {
    emit(Json{{"index_sequence", integers_json(rep.indices.values)},
              {"period_sequence", rep.periods},
              {"mcmullen_ok", rep.ok}});
  }
  return rep.ok ? 0 : kExitFail;
}

int cmd_series(const Args& a) {
  const auto obj = load_object(a);
  const auto f = fit_object(obj, a);
  auto e = from_quasipolynomial(f.fitted);
  if (a.i > 0 && a.strategy == "pyramid") e = pyramid_transform(e, a.i);
  if (a.format == "csv") {
    std::cout << "power,coeff\n";
    for (std::size_t j = 0; j < e.numerator().size(); ++j)
      std::cout << j << ',' << e.numerator()[j].get_str() << '\n';
  } else {
    emit(Json{{"series", to_json(e)}, {"counts", counts_json(f.counts)}});
  }
  return 0;
}

int cmd_pte_list(const Args& a) {
  if (a.format == "csv") {
    std::cout << "size,s,t\n";
    for (const auto& [m, sol] : pte::table()) {
      std::cout << m << ',';
      for (std::size_t j = 0; j < sol.s.size(); ++j) std::cout << (j ? " " : "") << sol.s[j].get_str();
      std::cout << ',';
      for (std::size_t j = 0; j < sol.t.size(); ++j) std::cout << (j ? " " : "") << sol.t[j].get_str();
      std::cout << '\n';
    }
    return 0;
  }
  Json entries = Json::array();
  for (const auto& [m, sol] : pte::table()) entries.push_back(to_json(sol));
  emit(Json{{"entries", entries}});
  return 0;
}

int cmd_pte_verify(const Args& a) {
  if (a.s.empty() && a.t.empty()) {
    const auto r = verify_pte_table();
    emit(Json{{"reports", Json::array({to_json(r)})}});
    return r.outcome == Outcome::Fail ? kExitFail : 0;
  }
  const auto sol = pte::normalize(parse_ints(a.s), parse_ints(a.t));
  const bool ok = pte::verify(sol) && pte::product_identity_check(sol);
  Json out = to_json(sol);
  out["verified"] = ok;
  emit(out);
  return ok ? 0 : kExitFail;
}

std::vector<VerificationReport> run_claim(const Args& a) {
  const CountOptions opts{a.budget};
  const std::string& c = a.claim;
  if (c == "all") return verify_all(VerifyAllOptions{a.max_p, a.max_n, a.budget});
  if (c == "pentagon-equivalence") return {verify_pentagon_equivalence(a.p, opts)};
  if (c == "heptagon") return {verify_heptagon(a.p, opts)};
  if (c == "pyramid-equivalence") return {verify_pyramid_equivalence(a.p, a.i, opts)};
  if (c == "prism-identity") return {verify_prism_identity(a.n, a.p, a.k_max, opts)};
  if (c == "sn-pn-equivalence") return {verify_sn_pn_equivalence(a.n, a.p, opts)};
  if (c == "decomposition") return {verify_decomposition(a.n, a.p, a.k_max, opts)};
  if (c == "hn-periods") return {verify_hn_periods(a.n, a.p, opts)};
  if (c == "barn-periods" || c == "barn") return {verify_barn_periods(a.n, a.p, opts)};
  if (c == "mcmullen") {
    if (a.family.empty()) throw UsageError("verify mcmullen needs --family");
    return {verify_mcmullen(a.family, a.n, a.p, opts)};
  }
  if (c == "pte-table") return {verify_pte_table()};
  if (c == "product-identity") {
    if (a.m > 0) return {verify_product_identity(a.m)};
    std::vector<VerificationReport> out;
    for (const auto& [m, sol] : pte::table()) out.push_back(verify_product_identity(m));
    return out;
  }
  throw UsageError("unknown claim: " + c);
}

int cmd_verify(const Args& a) {
  const auto reports = run_claim(a);
  std::map<Outcome, int> tally;
  for (const auto& r : reports) ++tally[r.outcome];
  if (a.format == "csv") {
    std::cout << "claim,parameters,outcome\n";
    for (const auto& r : reports) {
      std::string params;
      for (const auto& [key, v] : r.parameters.items()) params += (params.empty() ? "" : " ") + key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
      std::cout << r.claim << ',' << params << ',' << to_string(r.outcome) << '\n';
    }
  } else {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    emit(Json{{"reports", rs},
              {"summary",
               {{"pass", tally[Outcome::Pass]},
                {"fail", tally[Outcome::Fail]},
                {"partial", tally[Outcome::Partial]},
                {"not_available", tally[Outcome::NotAvailable]}}}});
  }
  return tally[Outcome::Fail] > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart quasi-polynomial period collapse toolkit"};
  app.require_subcommand(1);
  Args a;
  try {
    a.budget = budget_from_env();
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--budget", a.budget, "bounding-box point budget")->check(CLI::PositiveNumber);
  };
  auto add_object = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--family", a.family, "construction family");
    sub->add_option("--input", a.input, "polytope or union JSON file, - for stdin");
    sub->add_option("--p", a.p, "period parameter")->check(CLI::PositiveNumber);
    sub->add_option("--n", a.n, "dimension parameter")->check(CLI::PositiveNumber);
    sub->add_option("--s", a.s, "PTE left multiset (barn)")->delimiter(',');
    sub->add_option("--t", a.t, "PTE right multiset (barn)")->delimiter(',');
    sub->add_option("--strategy", a.strategy, "enumerate, product or inclusion-exclusion");
  };

  auto* construct = app.add_subcommand("construct", "build a named construction");
  add_common(construct);
  construct->add_option("--family", a.family, "construction family")->required();
  construct->add_option("--p", a.p, "period parameter")->check(CLI::PositiveNumber);
  construct->add_option("--n", a.n, "dimension parameter")->check(CLI::PositiveNumber);
  construct->add_option("--s", a.s, "PTE left multiset (barn)")->delimiter(',');
  construct->add_option("--t", a.t, "PTE right multiset (barn)")->delimiter(',');

  auto* count = app.add_subcommand("count", "lattice-point counts for k = 1..k-max");
  add_object(count);
  count->add_option("--k-max", a.k_max, "largest dilate")->check(CLI::PositiveNumber);

  auto* fit = app.add_subcommand("fit", "fit the Ehrhart quasi-polynomial");
  auto* periods = app.add_subcommand("periods", "coefficient period sequence");
  auto* series = app.add_subcommand("series", "rational generating function");
  for (auto* sub : {fit, periods, series}) {
    add_object(sub);
    sub->add_option("--degree", a.degree, "polynomial degree (default: dimension)");
    sub->add_option("--modulus", a.modulus, "candidate period (default: denominator)");
  }
  series->add_option("--pyramid", a.i, "apply the i-fold pyramid transform")->each([&](const std::string&) {
    a.strategy = "pyramid";
  });
  a.i = 0;

  auto* indices = app.add_subcommand("indices", "index sequence and McMullen check");
  add_object(indices);

  auto* pte_cmd = app.add_subcommand("pte", "Prouhet-Tarry-Escott solutions");
  pte_cmd->require_subcommand(1);
  auto* pte_list = pte_cmd->add_subcommand("list", "shipped ideal solutions");
  add_common(pte_list);
  auto* pte_verify = pte_cmd->add_subcommand("verify", "verify a solution or the shipped table");
  add_common(pte_verify);
  pte_verify->add_option("--s", a.s, "left multiset")->delimiter(',');
  pte_verify->add_option("--t", a.t, "right multiset")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run a verification claim");
  add_common(verify);
  verify->add_option("claim", a.claim, "claim id or all")->required();
  verify->add_option("--family", a.family, "family for mcmullen");
  verify->add_option("--p", a.p, "period parameter")->check(CLI::PositiveNumber);
  verify->add_option("--n", a.n, "dimension parameter")->check(CLI::PositiveNumber);
  verify->add_option("--i", a.i, "pyramid count")->check(CLI::PositiveNumber);
  verify->add_option("--m", a.m, "PTE size for product-identity");
  verify->add_option("--k-max", a.k_max, "largest dilate")->check(CLI::PositiveNumber);
  verify->add_option("--max-p", a.max_p, "largest p for all")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", a.max_n, "largest n for all")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(a);
    if (*count) return cmd_count(a);
    if (*fit) return cmd_fit(a);
    if (*periods) return cmd_periods(a);
    if (*series) return cmd_series(a);
    if (*indices) return cmd_indices(a);
    if (*pte_list) return cmd_pte_list(a);
    if (*pte_verify) return cmd_pte_verify(a);
    if (*verify) {
      if (verify->count("--i") == 0 && a.claim == "pyramid-equivalence") a.i = 1;
      if (verify->count("--k-max") == 0) a.k_max = a.claim == "decomposition" ? 4 : 8;
      return cmd_verify(a);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
