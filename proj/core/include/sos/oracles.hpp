#pragma once

#include <string>

#include "sos/dyadic.hpp"
#include "sos/function_field.hpp"
#include "sos/number_field.hpp"

// Reference implementations for differential testing. They rely on exact
// arithmetic only and share no decision logic with the production algorithms.
namespace sos {

enum class OracleMethod { Enumeration, ClassicalTheorem, ProductFormula };
std::string to_string(OracleMethod m);

struct OracleReport {
  std::string input;
  std::string value;
  OracleMethod method;
};

/// Length over Q by the two-, three- and four-square theorems; below
/// kEnumerationLimit the answer is also checked against direct enumeration.
int length_q_oracle(const Rational& a);
OracleReport length_q_report(const Rational& a);
constexpr long kEnumerationLimit = 10000;

/// Classification of an integer m > 0 by the classical theorems.
int length_q_theorem(const Integer& m);
/// Smallest n with m a sum of n integer squares, by search; m <= kEnumerationLimit.
int length_q_enumerate(long m);

enum class FFOracleLength { One, Two, MoreThanTwo };
std::string to_string(FFOracleLength l);

/// Searches f, g with deg <= degree_bound and f^2 + g^2 = num * den.
/// MoreThanTwo refutes length <= 2 only when the bound is large enough
/// (deg(num * den) / 2 suffices when -1 is a nonsquare in F_q).
FFOracleLength length_ff_oracle(const FFElem& a, int degree_bound);

/// Product of (-1, a) over the real places, the odd primes dividing a and the
/// unique dyadic prime of K is +1. Throws MultipleDyadicPrimes otherwise.
bool hilbert_product_check(const Rational& a, const NumberField& K);

/// (a, b)_d by searching for a primitive zero of <a, b, -1> modulo p^k, with
/// k = 2(e + max(v(a), v(b), 1)) + 1 large enough for Hensel lifting. Throws
/// InstanceTooLarge when 3 f k > 24.
int hilbert_dyadic_bruteforce(const NFElem& a, const NFElem& b, const DyadicCompletion& D);

}  // namespace sos
