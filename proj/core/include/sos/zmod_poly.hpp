#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "sos/poly.hpp"

// Polynomials over Z/m, stored as ZPoly with coefficients in [0, m).
namespace sos::zmod {

ZPoly reduce(const ZPoly& a, const Integer& m);
ZPoly reduce(const QPoly& a, const Integer& m);  // coefficients must be m-integral
ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly scale(const ZPoly& a, const Integer& s, const Integer& m);

/// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divrem(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly rem(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly make_monic(const ZPoly& a, const Integer& m);

/// Over F_p (p prime): monic gcd and Bezout cofactors.
ZPoly gcd(const ZPoly& a, const ZPoly& b, const Integer& p);
std::tuple<ZPoly, ZPoly, ZPoly> xgcd(const ZPoly& a, const ZPoly& b, const Integer& p);

/// base^e mod (m, modulus).
ZPoly powmod(const ZPoly& base, const Integer& e, const ZPoly& modulus, const Integer& m);
ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& modulus, const Integer& m);

/// Inverse of a in (Z/p^k)[x]/(F), F monic: inverse mod p by xgcd, then Newton.
/// Throws DivisionByZero when a is not a unit.
ZPoly inverse(const ZPoly& a, const ZPoly& F, const Integer& p, unsigned k);

/// Lifts f = lc * prod(factors) mod p to mod p^k. The factors must be monic and
/// pairwise coprime mod p, lc(f) a unit mod p. Returned factors are monic mod p^k
/// with product = lc(f)^{-1} * f mod p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZPoly>& factors, const Integer& p,
                               unsigned k);

}  // namespace sos::zmod
