#pragma once

// Exact scalars and points. Integer and Rational are GMP's C++ classes;
// mpq_class keeps every result in canonical form (positive denominator,
// coprime numerator), so no value ever carries a stale common factor.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ehrhart {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den = 1);

Integer gcd(const Integer& a, const Integer& b);
/// Nonnegative lcm; lcm(0, x) = 0.
Integer lcm(const Integer& a, const Integer& b);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
/// Accepts "a", "-a", "a/b".  Throws ParseError.
Rational parse_rational(std::string_view text);

RatVector add(const RatVector& x, const RatVector& y);
RatVector sub(const RatVector& x, const RatVector& y);
RatVector scale(const RatVector& x, const Rational& c);
Rational dot(const RatVector& x, const RatVector& y);
Rational dot(const IntVector& x, const RatVector& y);

RatVector to_rational(const IntVector& x);
RatVector unit_vector(std::size_t dim, std::size_t axis);

/// Smallest multiplier making every entry integral (lcm of denominators).
Integer common_denominator(const RatVector& x);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (positive multiple).  The zero vector maps to zeros.
IntVector primitive_integer(const RatVector& x);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& x);

}  // namespace ehrhart
