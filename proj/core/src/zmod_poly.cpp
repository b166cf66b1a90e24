#include "sos/zmod_poly.hpp"

#include "sos/error.hpp"

namespace sos::zmod {

ZPoly reduce(const ZPoly& a, const Integer& m) {
  std::vector<Integer> c;
  c.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) c.push_back(mod(v, m));
  return ZPoly(std::move(c));
}

ZPoly reduce(const QPoly& a, const Integer& m) {
  std::vector<Integer> c;
  c.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) c.push_back(rational_mod(v, m));
  return ZPoly(std::move(c));
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(a + b, m); }
ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(a - b, m); }
ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(a * b, m); }
ZPoly scale(const ZPoly& a, const Integer& s, const Integer& m) { return reduce(s * a, m); }

std::pair<ZPoly, ZPoly> divrem(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (b.is_zero()) throw DivisionByZero();
  const int db = b.degree();
  std::vector<Integer> r = reduce(a, m).coeffs();
  if (static_cast<int>(r.size()) - 1 < db) return {ZPoly(), ZPoly(std::move(r))};
  const Integer inv = inv_mod(b.lead(), m);
  std::vector<Integer> q(r.size() - static_cast<size_t>(db), Integer(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Integer coef = mod(r[static_cast<size_t>(i)] * inv, m);
    if (coef == 0) continue;
    q[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      Integer& t = r[static_cast<size_t>(i - db + j)];
      t = mod(t - coef * b.coeffs()[static_cast<size_t>(j)], m);
    }
  }
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

ZPoly rem(const ZPoly& a, const ZPoly& b, const Integer& m) { return divrem(a, b, m).second; }

ZPoly make_monic(const ZPoly& a, const Integer& m) {
  if (a.is_zero()) return a;
  return scale(a, inv_mod(a.lead(), m), m);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b, const Integer& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  while (!r1.is_zero()) {
    ZPoly r2 = rem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return make_monic(r0, p);
}

std::tuple<ZPoly, ZPoly, ZPoly> xgcd(const ZPoly& a, const ZPoly& b, const Integer& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0 = ZPoly::constant(1), s1;
  ZPoly t0, t1 = ZPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1, p);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Integer inv = inv_mod(r0.lead(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& modulus, const Integer& m) {
  return rem(a * b, modulus, m);
}

ZPoly powmod(const ZPoly& base, const Integer& e, const ZPoly& modulus, const Integer& m) {
  ZPoly result = rem(ZPoly::constant(1), modulus, m);
  ZPoly b = rem(base, modulus, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, modulus, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, modulus, m);
  }
  return result;
}

ZPoly inverse(const ZPoly& a, const ZPoly& F, const Integer& p, unsigned k) {
  auto [g, s, t] = xgcd(a, F, p);
  if (g.degree() != 0) throw DivisionByZero();
  ZPoly v = s;  // inverse mod p
  Integer m = p;
  unsigned prec = 1;
  const Integer target = pow(p, k);
  while (prec < k) {
    prec = std::min(2 * prec, k);
    m = pow(p, prec);
    // v <- v * (2 - a v)
    ZPoly av = mulmod(a, v, F, m);
    ZPoly two_minus = sub(ZPoly::constant(2), av, m);
    v = mulmod(v, two_minus, F, m);
  }
  return rem(v, F, target);
}

namespace {

// Lifts f = g*h mod p (g monic) to mod p^k one digit at a time.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& f, const ZPoly& g0, const ZPoly& h0, const Integer& p,
                                  unsigned k) {
  auto [one, s, t] = xgcd(g0, h0, p);
  if (one.degree() != 0) throw Error("hensel_lift: factors not coprime mod p");
  ZPoly g = g0, h = h0;
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * p;
    ZPoly diff = reduce(f - g * h, next);
    std::vector<Integer> ec;
    for (const auto& c : diff.coeffs()) ec.push_back(c / pj);
    ZPoly e = reduce(ZPoly(std::move(ec)), p);
    auto [q, dg] = divrem(mul(e, t, p), g, p);
    ZPoly dh = add(mul(e, s, p), mul(q, h, p), p);
    g = reduce(g + pj * dg, next);
    h = reduce(h + pj * dh, next);
    pj = next;
  }
  return {g, h};
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZPoly>& factors, const Integer& p,
                               unsigned k) {
  const Integer pk = pow(p, k);
  ZPoly cur = make_monic(reduce(f, pk), pk);
  std::vector<ZPoly> out;
  if (factors.size() == 1) {
    out.push_back(cur);
    return out;
  }
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly rest = ZPoly::constant(1);
    for (size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], p);
    auto [g, h] = lift_pair(cur, factors[i], rest, p, k);
    out.push_back(g);
    cur = h;
  }
  out.push_back(make_monic(cur, pk));
  return out;
}

}  // namespace sos::zmod
