#include "ehrhart/quasipoly.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ehrhart/error.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

namespace {

std::int64_t mod(std::int64_t k, std::int64_t m) {
  const std::int64_t r = k % m;
  return r < 0 ? r + m : r;
}

Rational power(std::int64_t k, int i) {
  Integer v;
  mpz_pow_ui(v.get_mpz_t(), Integer(static_cast<long>(k)).get_mpz_t(), static_cast<unsigned long>(i));
  return Rational(v);
}

// Polynomial of degree <= n through (x_j, y_j), ascending coefficients.
std::vector<Rational> interpolate(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  RatMatrix vander(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) vander(r, c) = power(xs[r], static_cast<int>(c));
  const auto sol = solve_rational(vander, ys);
  if (!sol) throw std::logic_error("singular interpolation nodes");
  return *sol;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::int64_t modulus, std::vector<std::vector<Rational>> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus_ < 1) throw std::invalid_argument("quasi-polynomial modulus must be positive");
  if (coeffs_.empty()) throw std::invalid_argument("quasi-polynomial needs a coefficient table");
  for (const auto& row : coeffs_)
    if (static_cast<std::int64_t>(row.size()) != modulus_)
      throw std::invalid_argument("coefficient row length must equal the modulus");
}

QuasiPolynomial QuasiPolynomial::polynomial(const std::vector<Rational>& coeffs) {
  std::vector<std::vector<Rational>> table;
  for (const auto& c : coeffs) table.push_back({c});
  if (table.empty()) table.push_back({Rational(0)});
  return QuasiPolynomial(1, std::move(table));
}

const Rational& QuasiPolynomial::coeff(int i, std::int64_t r) const {
  return coeffs_.at(i)[mod(r, modulus_)];
}

Rational QuasiPolynomial::evaluate(std::int64_t k) const {
  const std::int64_t r = mod(k, modulus_);
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * k + coeffs_[i][r];
  return acc;
}

QuasiPolynomial QuasiPolynomial::with_modulus(std::int64_t m) const {
  if (m < 1 || m % modulus_ != 0) throw std::invalid_argument("modulus must be a multiple");
  std::vector<std::vector<Rational>> table(coeffs_.size(), std::vector<Rational>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::int64_t r = 0; r < m; ++r) table[i][r] = coeffs_[i][r % modulus_];
  return QuasiPolynomial(m, std::move(table));
}

QuasiPolynomial QuasiPolynomial::trimmed() const {
  auto table = coeffs_;
  auto zero_row = [](const std::vector<Rational>& row) {
    for (const auto& v : row)
      if (v != 0) return false;
    return true;
  };
  while (table.size() > 1 && zero_row(table.back())) table.pop_back();
  return QuasiPolynomial(modulus_, std::move(table));
}

bool QuasiPolynomial::is_zero() const {
  for (const auto& row : coeffs_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

namespace {

// Both operands over a common modulus and degree (missing rows are zero).
std::pair<QuasiPolynomial, QuasiPolynomial> align(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  const std::int64_t m = std::lcm(f.modulus(), g.modulus());
  const int n = std::max(f.degree(), g.degree());
  auto pad = [&](const QuasiPolynomial& h) {
    auto table = h.with_modulus(m).coeffs();
    table.resize(n + 1, std::vector<Rational>(m, Rational(0)));
    return QuasiPolynomial(m, std::move(table));
  };
  return {pad(f), pad(g)};
}

}  // namespace

bool operator==(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  const auto [a, b] = align(f, g);
  return a.coeffs() == b.coeffs();
}

QuasiPolynomial fit_values(const std::function<Rational(std::int64_t)>& value, int degree,
                           std::int64_t modulus, bool include_zero) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::map<std::int64_t, Rational> cache;
  auto sample = [&](std::int64_t k) -> const Rational& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, value(k)).first;
    return it->second;
  };

  std::vector<std::vector<Rational>> table(degree + 1, std::vector<Rational>(modulus));
  for (std::int64_t r = 0; r < modulus; ++r) {
    const std::int64_t r0 = (r >= 1 || include_zero) ? r : modulus;
    std::vector<std::int64_t> xs;
    std::vector<Rational> ys;
    for (int j = 0; j <= degree; ++j) {
      xs.push_back(r0 + j * modulus);
      ys.push_back(sample(xs.back()));
    }
    const auto poly = interpolate(xs, ys);
    for (int i = 0; i <= degree; ++i) table[i][r] = poly[i];
  }
  QuasiPolynomial f(modulus, std::move(table));

  std::int64_t last = 0;
  for (const auto& [k, v] : cache) last = std::max(last, k);
  for (std::int64_t k = last + 1; k <= last + degree + 2; ++k) {
    const Rational expected = sample(k);
    const Rational got = f.evaluate(k);
    if (expected != got)
      throw VerificationFailed("degree " + std::to_string(degree) + ", modulus " +
                               std::to_string(modulus) + ": sample at k = " + std::to_string(k) +
                               " is " + to_string(expected) + " but the fit gives " + to_string(got));
  }
  return f;
}

QuasiPolynomial fit(const CountFunction& counter, int degree, std::int64_t modulus) {
  return fit_values([&](std::int64_t k) { return Rational(counter(k)); }, degree, modulus, false);
}

std::int64_t coefficient_period(const QuasiPolynomial& f, int i) {
  if (i < 0 || i > f.degree()) throw std::out_of_range("coefficient index");
  const std::int64_t D = f.modulus();
  const auto& row = f.coeffs()[i];
  for (std::int64_t d = 1; d <= D; ++d) {
    if (D % d != 0) continue;
    bool periodic = true;
    for (std::int64_t r = d; r < D && periodic; ++r) periodic = row[r] == row[r % d];
    if (periodic) return d;
  }
  return D;
}

std::vector<std::int64_t> period_sequence(const QuasiPolynomial& f) {
  std::vector<std::int64_t> out;
  for (int i = 0; i <= f.degree(); ++i) out.push_back(coefficient_period(f, i));
  return out;
}

bool equivalent(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  const auto [a, b] = align(f, g);
  for (int i = 0; i <= a.degree(); ++i) {
    const Rational base = a.coeffs()[i][0] - b.coeffs()[i][0];
    for (std::int64_t r = 1; r < a.modulus(); ++r)
      if (a.coeffs()[i][r] - b.coeffs()[i][r] != base) return false;
  }
  return true;
}

QuasiPolynomial add(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  const auto [a, b] = align(f, g);
  auto table = a.coeffs();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t r = 0; r < table[i].size(); ++r) table[i][r] += b.coeffs()[i][r];
  return QuasiPolynomial(a.modulus(), std::move(table));
}

QuasiPolynomial scale(const QuasiPolynomial& f, const Rational& c) {
  auto table = f.coeffs();
  for (auto& row : table)
    for (auto& v : row) v *= c;
  return QuasiPolynomial(f.modulus(), std::move(table));
}

QuasiPolynomial negate(const QuasiPolynomial& f) { return scale(f, Rational(-1)); }

QuasiPolynomial subtract(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  return add(f, negate(g));
}

QuasiPolynomial multiply_by_polynomial(const QuasiPolynomial& f, const std::vector<Rational>& poly) {
  if (poly.empty()) return QuasiPolynomial(f.modulus(), {std::vector<Rational>(f.modulus(), Rational(0))});
  const std::size_t n = f.coeffs().size() + poly.size() - 1;
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(f.modulus(), Rational(0)));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < poly.size(); ++j) {
      if (poly[j] == 0) continue;
      for (std::int64_t r = 0; r < f.modulus(); ++r) table[i + j][r] += poly[j] * f.coeffs()[i][r];
    }
  return QuasiPolynomial(f.modulus(), std::move(table));
}

QuasiPolynomial prefix_sum(const QuasiPolynomial& f) {
  const std::int64_t D = f.modulus();
  const int n = f.degree() + 1;
  // Running sums g(0..K) with g(0) = 1 cover every interpolation node.
  const std::int64_t K = (D - 1) + static_cast<std::int64_t>(n) * D + n + 2;
  std::vector<Rational> g(K + 1);
  g[0] = 1;
  for (std::int64_t k = 1; k <= K; ++k) g[k] = g[k - 1] + f.evaluate(k);
  return fit_values([&](std::int64_t k) { return g.at(k); }, n, D, true);
}

}  // namespace ehrhart
