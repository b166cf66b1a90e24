#include "sos/integer.hpp"

#include "sos/error.hpp"

namespace sos {

long valuation_p(const Integer& n, const Integer& p) {
  if (n == 0) throw ZeroElement();
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation_p(const Rational& r, const Integer& p) {
  if (r == 0) throw ZeroElement();
  return valuation_p(r.get_num(), p) - valuation_p(r.get_den(), p);
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Integer inv_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DivisionByZero();
  return r;
}

Integer rational_mod(const Rational& r, const Integer& m) {
  if (m == 1) return 0;
  return mod(r.get_num() * inv_mod(r.get_den(), m), m);
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer bound = isqrt(m / 2);
  Integer r0 = m, r1 = mod(u, m);
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace sos
