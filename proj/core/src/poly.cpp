#include "sos/poly.hpp"

#include <sstream>

#include "sos/error.hpp"

namespace sos {

QPoly to_q(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

std::pair<ZPoly, Integer> clear_denominators(const QPoly& p) {
  Integer d = 1;
  for (const auto& v : p.coeffs()) d = lcm(d, v.get_den());
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (d / v.get_den()));
  return {ZPoly(std::move(c)), d};
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    Rational coef = r[static_cast<size_t>(i)] * inv_lead;
    if (coef == 0) continue;
    q[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b) {
  const int db = b.degree();
  if (a.degree() < db) return {ZPoly(), a};
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    Integer coef = r[static_cast<size_t>(i)];
    if (coef == 0) continue;
    q[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<size_t>(j)];
  }
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

namespace {

// Division over Z that stops (returns false) as soon as a quotient
// coefficient is not integral or the remainder is nonzero.
bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly* out) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) {
    *out = ZPoly();
    return true;
  }
  const int db = b.degree();
  if (a.degree() < db) return false;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    const Integer& num = r[static_cast<size_t>(i)];
    if (num == 0) continue;
    if (!mpz_divisible_p(num.get_mpz_t(), b.lead().get_mpz_t())) return false;
    Integer coef = num / b.lead();
    q[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<size_t>(j)];
  }
  for (const auto& v : r)
    if (v != 0) return false;
  *out = ZPoly(std::move(q));
  return true;
}

}  // namespace

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_exact_div(a, b, &q)) throw Error("exact_div: divisor does not divide");
  return q;
}

bool divides(const ZPoly& b, const ZPoly& a) {
  ZPoly q;
  return try_exact_div(a, b, &q);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    QPoly r2 = divrem(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (r0.is_zero()) return r0;
  return (1 / r0.lead()) * r0;
}

std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) g = gcd(g, v);
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.lead() < 0) c = -c;
  std::vector<Integer> r;
  for (const auto& v : p.coeffs()) r.push_back(v / c);
  return ZPoly(std::move(r));
}

ZPoly primitive_part(const QPoly& p) { return primitive_part(clear_denominators(p).first); }

Rational resultant(const QPoly& a_in, const QPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  QPoly a = a_in, b = b_in;
  Rational acc = 1;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (da == 0) {
      Rational r = 1;
      for (int i = 0; i < db; ++i) r *= a.lead();
      return acc * r;
    }
    if (db == 0) {
      Rational r = 1;
      for (int i = 0; i < da; ++i) r *= b.lead();
      return acc * r;
    }
    if (da < db) {
      // Res(a, b) = (-1)^{da*db} Res(b, a)
      if ((da * db) % 2 == 1) acc = -acc;
      std::swap(a, b);
      continue;
    }
    // Res(a, b) with deg a >= deg b: Res(a,b) = (-1)^{da db} Res(b, a)
    // and Res(b, a) = lc(b)^{da - deg r} Res(b, r), r = a mod b.
    QPoly r = divrem(a, b).second;
    if ((da * db) % 2 == 1) acc = -acc;
    if (r.is_zero()) return 0;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

Integer discriminant(const ZPoly& f) {
  const int n = f.degree();
  QPoly fq = to_q(f);
  Rational res = resultant(fq, fq.derivative());
  Rational d = res / fq.lead();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d.get_num();
}

namespace {

template <class T>
std::string poly_string(const Poly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const ZPoly& p, const std::string& var) { return poly_string(p, var); }
std::string to_string(const QPoly& p, const std::string& var) { return poly_string(p, var); }

}  // namespace sos
