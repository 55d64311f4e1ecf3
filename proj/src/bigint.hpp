#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tricolor {

// Exact arithmetic for the bound formulas. Bound values leave 64 bits quickly
// (C(200,66) has 54 digits), so every counting result is carried as Int and
// serialized as a decimal string.
using Int = mpz_class;
using Rat = mpq_class;

// Binomial coefficient, exact. Out-of-range k (k < 0 or k > n) yields 0.
Int binomial(long n, long k);

std::string to_decimal(const Int& v);
// Canonical "p/q" with gcd(p, q) = 1 and q > 0.
std::string to_fraction(const Rat& v);
// Returns true and sets out when v fits an unsigned 64-bit value.
bool fits_u64(const Int& v, std::uint64_t& out);

} // namespace tricolor
