#include "sos/arith.hpp"

#include <algorithm>
#include <map>

#include "sos/error.hpp"

namespace sos {

namespace {

constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const Integer& n, const Integer& d, unsigned s, unsigned base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long c) {
  // x -> x^2 + c with batched gcds
  Integer y = 2, x, ys, q = 1, g = 1;
  const unsigned long m = 64;
  unsigned long r = 1;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    Integer r = isqrt(n);
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = pollard_brent(n, c);
    if (d != n) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned b : kBases) {
    if (!strong_probable_prime(n, d, s, b)) return false;
  }
  return true;
}

Integer next_prime(const Integer& n) {
  if (n <= 2) return 2;
  Integer c = n;
  if (mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

IntegerFactorization factor_integer(const Integer& n) {
  if (n == 0) throw ZeroElement();
  Integer m = abs(n);
  std::map<Integer, int> found;
  for (unsigned long p = 2; p < (1UL << 16) && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Integer(p)];
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

PrimeStream::PrimeStream(const Integer& start) : current_(next_prime(start)) {}

Integer PrimeStream::next() {
  Integer p = current_;
  current_ = next_prime(current_ + 1);
  return p;
}

}  // namespace sos
