#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sos {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent of the prime p in n; n must be nonzero.
long valuation_p(const Integer& n, const Integer& p);
/// Exponent of p in a nonzero rational (numerator minus denominator).
long valuation_p(const Rational& r, const Integer& p);

/// Least nonnegative residue.
Integer mod(const Integer& a, const Integer& m);
/// Residue in (-m/2, m/2].
Integer mod_symmetric(const Integer& a, const Integer& m);
/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
Integer inv_mod(const Integer& a, const Integer& m);
/// Image of a p-integral rational in Z/m (m a prime power with that prime not
/// dividing the denominator).
Integer rational_mod(const Rational& r, const Integer& m);

Integer pow(const Integer& base, unsigned long exp);
Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m);

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

/// Rational r/s with |r|, s <= floor(sqrt(m/2)) and r = s*u mod m, if any.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m);

/// Stable 64-bit FNV-1a hash used to seed deterministic randomness.
std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes);
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

}  // namespace sos
