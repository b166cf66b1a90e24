#pragma once

#include <utility>
#include <vector>

#include "sos/integer.hpp"

namespace sos {

/// Miller-Rabin with the first thirteen prime bases. Deterministic for
/// n < 3.3e24; beyond that it is a strong probable-prime test.
bool is_prime(const Integer& n);

/// Smallest prime >= n.
Integer next_prime(const Integer& n);

using IntegerFactorization = std::vector<std::pair<Integer, int>>;

/// Prime factorization of |n| (n != 0), primes ascending. Trial division
/// below 2^16, then Pollard rho (Brent variant) with fixed parameters.
IntegerFactorization factor_integer(const Integer& n);

/// Increasing stream of primes starting at the first prime >= start.
class PrimeStream {
 public:
  explicit PrimeStream(const Integer& start = 2);
  const Integer& current() const { return current_; }
  /// Returns the current prime and advances.
  Integer next();

 private:
  Integer current_;
};

}  // namespace sos
