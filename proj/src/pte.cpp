#include "ehrhart/pte.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "ehrhart/error.hpp"

namespace ehrhart::pte {

namespace detail {
extern const std::string_view kShippedTable;
}

Integer power_sum(unsigned k, const IntVector& xs) {
  Integer acc = 0;
  for (const auto& x : xs) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), x.get_mpz_t(), k);
    acc += v;
  }
  return acc;
}

Integer elem_sym(unsigned k, const IntVector& xs) {
  // e[j] after processing a prefix is the degree-j elementary polynomial.
  std::vector<Integer> e(k + 1, Integer(0));
  e[0] = 1;
  for (const auto& x : xs)
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

bool verify(const PteSolution& sol) {
  const std::size_t m = sol.s.size();
  if (m == 0 || sol.t.size() != m) return false;
  if (sol.t.back() != 0) return false;
  for (const auto& v : sol.s)
    if (v <= 0) return false;
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (sol.t[j] <= 0) return false;
  for (unsigned k = 0; k < m; ++k)
    if (power_sum(k, sol.s) != power_sum(k, sol.t)) return false;
  return true;
}

PteSolution normalize(const IntVector& a, const IntVector& b) {
  if (a.empty() || a.size() != b.size()) throw Rejected("sides must have equal positive size");
  for (unsigned k = 0; k < a.size(); ++k)
    if (power_sum(k, a) != power_sum(k, b))
      throw Rejected("power sums of degree " + std::to_string(k) + " differ");
  Integer mn = a.front();
  for (const auto& v : a) mn = std::min(mn, v);
  for (const auto& v : b) mn = std::min(mn, v);
  const auto hits = std::count(a.begin(), a.end(), mn) + std::count(b.begin(), b.end(), mn);
  if (hits != 1) throw Rejected("minimum value " + mn.get_str() + " occurs " + std::to_string(hits) + " times");

  IntVector sa, sb;
  for (const auto& v : a) sa.push_back(v - mn);
  for (const auto& v : b) sb.push_back(v - mn);
  if (std::find(sa.begin(), sa.end(), 0) == sa.end()) std::swap(sa, sb);
  PteSolution sol;
  sol.s = std::move(sb);
  std::sort(sol.s.begin(), sol.s.end());
  for (const auto& v : sa)
    if (v != 0) sol.t.push_back(v);
  std::sort(sol.t.begin(), sol.t.end());
  sol.t.push_back(0);
  return sol;
}

IntVector linear_factor_product(const IntVector& xs) {
  IntVector p{Integer(1)};
  for (const auto& x : xs) {
    IntVector next(p.size() + 1, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + 1] += p[i] * x;
    }
    p = std::move(next);
  }
  return p;
}

bool product_identity_check(const PteSolution& sol) {
  const std::size_t m = sol.s.size();
  if (m == 0 || sol.t.size() != m) return false;
  IntVector lhs = linear_factor_product(sol.s);
  const IntVector rhs = linear_factor_product(IntVector(sol.t.begin(), sol.t.end() - 1));
  for (std::size_t i = 0; i < rhs.size(); ++i) lhs[i] -= rhs[i];
  Integer lead = 1;
  for (const auto& v : sol.s) lead *= v;
  for (std::size_t i = 0; i < m; ++i)
    if (lhs[i] != 0) return false;
  return lhs[m] == lead;
}

namespace {

IntVector parse_list(const std::string& text, std::size_t line_no) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      out.emplace_back(item, 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

std::map<std::size_t, PteSolution> parse_table(std::string_view text) {
  std::map<std::size_t, PteSolution> out;
  std::stringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    const auto semi = line.find(';');
    if (colon == std::string::npos || semi == std::string::npos || semi < colon)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'm: s ; t'");
    std::size_t m = 0;
    try {
      m = std::stoul(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad size");
    }
    PteSolution sol{parse_list(line.substr(colon + 1, semi - colon - 1), line_no),
                    parse_list(line.substr(semi + 1), line_no)};
    if (sol.size() != m || sol.t.size() != m)
      throw ParseError("line " + std::to_string(line_no) + ": size does not match entries");
    if (!verify(sol) || !product_identity_check(sol))
      throw UnverifiedSolution("table entry of size " + std::to_string(m));
    out[m] = std::move(sol);
  }
  return out;
}

const std::map<std::size_t, PteSolution>& table() {
  static const auto shipped = parse_table(detail::kShippedTable);
  return shipped;
}

std::optional<PteSolution> table_lookup(std::size_t m) {
  const auto& t = table();
  const auto it = t.find(m);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

}  // namespace ehrhart::pte
