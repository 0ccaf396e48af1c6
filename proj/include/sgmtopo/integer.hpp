#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace sgmtopo {

/// Arbitrary-precision integer used for every entry, order and factor.
using Integer = mpz_class;

std::string to_string(const Integer& value);

/// Parses an optionally signed decimal integer. Throws InvalidInput on
/// anything else (no whitespace, no exponent, no fractional part).
Integer parse_integer(std::string_view text);

/// Floor division and the matching non-negative remainder (divisor != 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

bool is_prime(const Integer& n);

/// Prime factorization of |n| for n != 0: prime -> exponent.
std::map<Integer, unsigned> factorize(const Integer& n);

/// Returns true and writes the value when it fits in a signed 64-bit int.
bool fits_int64(const Integer& value, std::int64_t& out);

}  // namespace sgmtopo
