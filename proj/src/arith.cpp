#include "ehrhart/arith.hpp"

#include <limits>
#include <stdexcept>

#include "ehrhart/error.hpp"

namespace ehrhart {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return make_rational(num, den);
}

namespace {
void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch(std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

RatVector add(const RatVector& x, const RatVector& y) {
  require_same_dim(x.size(), y.size());
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

RatVector sub(const RatVector& x, const RatVector& y) {
  require_same_dim(x.size(), y.size());
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

RatVector scale(const RatVector& x, const Rational& c) {
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * c;
  return out;
}

Rational dot(const RatVector& x, const RatVector& y) {
  require_same_dim(x.size(), y.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Rational dot(const IntVector& x, const RatVector& y) {
  require_same_dim(x.size(), y.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) acc += Rational(x[i]) * y[i];
  }
  return acc;
}

RatVector to_rational(const IntVector& x) {
  RatVector out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v);
  return out;
}

RatVector unit_vector(std::size_t dim, std::size_t axis) {
  RatVector e(dim, Rational(0));
  e.at(axis) = 1;
  return e;
}

Integer common_denominator(const RatVector& x) {
  Integer d = 1;
  for (const auto& v : x) d = lcm(d, v.get_den());
  return d;
}

IntVector primitive_integer(const RatVector& x) {
  const Integer d = common_denominator(x);
  IntVector out(x.size());
  Integer g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational scaled = x[i] * d;
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds int64: " + x.get_str());
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return x.get_si();
}

}  // namespace ehrhart
