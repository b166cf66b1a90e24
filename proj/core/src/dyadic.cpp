#include "sos/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

namespace {

constexpr int kMaxLocalDegree = 10;
constexpr unsigned kMinUnitPrecision = 3;

struct PrecisionLow {};

Integer two_pow(unsigned k) { return pow(Integer(2), k); }

ZPoly shift_down(const ZPoly& a, unsigned k) {
  std::vector<Integer> r;
  for (const auto& c : a.coeffs()) r.push_back(c >> k);
  return ZPoly(std::move(r));
}

long min_two_adic(const ZPoly& a) {
  long v = -1;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    long vc = static_cast<long>(mpz_scan1(c.get_mpz_t(), 0));
    if (v < 0 || vc < v) v = vc;
  }
  return v;
}

// Unit squares modulo (8, F), enumerated over units w of O/4O (w^2 mod 8
// only depends on w mod 4).
std::vector<std::uint64_t> unit_squares_mod8(const ZPoly& F, const ZPoly& gbar) {
  const int d = F.degree();
  std::vector<int> f8(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) f8[static_cast<size_t>(i)] = static_cast<int>(mod(F.coeff(i), 8).get_si());
  std::uint32_t gmask = 0;
  for (int i = 0; i <= gbar.degree(); ++i)
    if (mod(gbar.coeff(i), 2) == 1) gmask |= 1u << i;
  const int gdeg = gbar.degree();

  auto rem2 = [&](std::uint32_t a) {
    for (int i = 31; i >= gdeg; --i)
      if (a & (1u << i)) a ^= gmask << (i - gdeg);
    return a;
  };

  std::vector<std::uint64_t> keys;
  const std::uint64_t count = 1ULL << (2 * d);
  std::vector<int> w(static_cast<size_t>(d)), sq(static_cast<size_t>(2 * d));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint32_t low = 0;
    for (int i = 0; i < d; ++i) {
      w[static_cast<size_t>(i)] = static_cast<int>((idx >> (2 * i)) & 3);
      if (w[static_cast<size_t>(i)] & 1) low |= 1u << i;
    }
    if (rem2(low) == 0) continue;
    std::fill(sq.begin(), sq.end(), 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sq[static_cast<size_t>(i + j)] += w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)];
    for (int i = 2 * d - 1; i >= d; --i) {
      int c = sq[static_cast<size_t>(i)] & 7;
      if (!c) continue;
      for (int j = 0; j <= d; ++j) sq[static_cast<size_t>(i - d + j)] -= c * f8[static_cast<size_t>(j)];
    }
    std::uint64_t key = 0;
    for (int i = d - 1; i >= 0; --i) key = key * 8 + static_cast<std::uint64_t>(sq[static_cast<size_t>(i)] & 7);
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// Local image of an integral element c of Z[theta] (coordinates mod 2^N).
LocalElem local_of_integral(const ZPoly& c_in, const DyadicCompletion& D) {
  const unsigned N = D.precision();
  const int e = D.e();
  const ZPoly& F = D.F();
  ZPoly c = zmod::rem(c_in, F, two_pow(N));
  if (c.is_zero()) throw PrecisionLow{};
  const long q = min_two_adic(c);
  c = shift_down(c, static_cast<unsigned>(q));
  if (static_cast<long>(N) - q < static_cast<long>(kMinUnitPrecision)) throw PrecisionLow{};
  unsigned prec = N - static_cast<unsigned>(q);

  ZPoly cbar = zmod::reduce(c, 2);
  int r = 0;
  while (true) {
    auto [quot, rem] = zmod::divrem(cbar, D.prime().gbar(), 2);
    if (!rem.is_zero()) break;
    cbar = quot;
    ++r;
  }
  for (int i = 0; i < r; ++i) {
    ZPoly t = zmod::mulmod(c, D.h(), F, two_pow(prec));
    if (min_two_adic(t) == 0) throw std::logic_error("dyadic unit extraction: odd coefficient");
    c = shift_down(t, 1);
    --prec;
  }
  if (q > 0 && e > 1) prec = std::min(prec, N - static_cast<unsigned>(e - 1));
  if (prec < kMinUnitPrecision) throw PrecisionLow{};
  const Integer m = two_pow(prec);
  if (q > 0) c = zmod::mulmod(c, zmod::powmod(D.two_unit(), Integer(q), F, m), F, m);
  return {e * q + r, zmod::rem(c, F, m), prec};
}

LocalElem local_mul(const LocalElem& x, const LocalElem& y, const DyadicCompletion& D) {
  const unsigned prec = std::min(x.prec, y.prec);
  return {x.val + y.val, zmod::mulmod(x.unit, y.unit, D.F(), two_pow(prec)), prec};
}

bool local_is_square(const LocalElem& x, const DyadicCompletion& D) {
  if (x.prec < kMinUnitPrecision) throw PrecisionLow{};
  return x.val % 2 == 0 && D.is_unit_square_mod8(x.unit);
}

LocalElem embed_at(const NFElem& a, const DyadicCompletion& D) {
  if (a.is_zero()) throw ZeroElement();
  auto [b, c] = a.denominator_clear();
  LocalElem L = local_of_integral(ZPoly(b), D);
  const long s = valuation_p(c, Integer(2));
  const Integer c_odd = c >> static_cast<unsigned long>(s);
  L.val -= D.e() * s;
  if (s > 0 && D.e() > 1) L.prec = std::min(L.prec, D.precision() - static_cast<unsigned>(D.e() - 1));
  const Integer m = two_pow(L.prec);
  L.unit = zmod::scale(L.unit, inv_mod(c_odd, m), m);
  if (s > 0) L.unit = zmod::mulmod(L.unit, zmod::powmod(D.two_unit_inv(), Integer(s), D.F(), m), D.F(), m);
  L.unit = zmod::rem(L.unit, D.F(), m);
  return L;
}

template <class Fn>
auto with_escalation(const DyadicCompletion& D, Fn&& fn) {
  DyadicCompletion cur = D;
  while (true) {
    try {
      return fn(cur);
    } catch (const PrecisionLow&) {
      cur = cur.with_precision(2 * cur.precision());
    }
  }
}

}  // namespace

unsigned default_dyadic_precision(const PrimeIdealNF& P) {
  return std::max(16u, static_cast<unsigned>(4 * P.e() + 6));
}

DyadicCompletion dyadic_completion(const PrimeIdealNF& P, unsigned N) {
  if (P.p() != 2) throw std::invalid_argument("dyadic_completion: prime does not lie above 2");
  if (P.degree() > kMaxLocalDegree)
    throw InstanceTooLarge("dyadic completion of degree " + std::to_string(P.degree()) + " exceeds " +
                           std::to_string(kMaxLocalDegree));
  N = std::max(N == 0 ? default_dyadic_precision(P) : N, static_cast<unsigned>(4 * P.e() + 6));

  const ZPoly& f = P.field().polynomial();
  FqField F2 = FqField::prime(2);
  auto fac = poly_factor_fq(F2, FqPoly::from_zpoly(F2, f));
  std::vector<ZPoly> grouped;
  for (const auto& [g, mult] : fac.factors) grouped.push_back(fq::pow(F2, g, static_cast<unsigned>(mult)).to_zpoly());
  std::vector<ZPoly> lifted = zmod::hensel_lift(f, grouped, 2, N);

  const ZPoly& F = lifted[static_cast<size_t>(P.index())];
  const int e = P.e();
  ZPoly h = ZPoly::constant(1);
  for (int i = 1; i < e; ++i) h = zmod::mul(h, P.gbar(), 2);

  const Integer mN = two_pow(N);
  ZPoly he = zmod::powmod(h, Integer(e), F, mN);
  if (he.is_zero() || min_two_adic(he) < e - 1) throw std::logic_error("dyadic: h^e not divisible by 2^(e-1)");
  const unsigned wprec = N - static_cast<unsigned>(e - 1);
  ZPoly w = zmod::reduce(shift_down(he, static_cast<unsigned>(e - 1)), two_pow(wprec));
  ZPoly w_inv = zmod::inverse(w, F, 2, wprec);

  auto squares = std::make_shared<const std::vector<std::uint64_t>>(unit_squares_mod8(F, P.gbar()));
  return DyadicCompletion(std::make_shared<const DyadicCompletion::Data>(
      DyadicCompletion::Data{P, N, std::move(lifted), std::move(h), std::move(w), std::move(w_inv), std::move(squares)}));
}

DyadicCompletion DyadicCompletion::with_precision(unsigned N) const { return dyadic_completion(d_->P, N); }

bool DyadicCompletion::is_unit_square_mod8(const ZPoly& u) const {
  ZPoly r = zmod::rem(zmod::reduce(u, 8), zmod::reduce(F(), 8), 8);
  std::uint64_t key = 0;
  for (int i = d() - 1; i >= 0; --i) key = key * 8 + r.coeff(i).get_ui();
  return std::binary_search(d_->squares8->begin(), d_->squares8->end(), key);
}

LocalElem embed_dyadic(const NFElem& a, const DyadicCompletion& D) {
  return with_escalation(D, [&](const DyadicCompletion& cur) { return embed_at(a, cur); });
}

bool is_local_square_dyadic(const NFElem& a, const DyadicCompletion& D) {
  return with_escalation(D, [&](const DyadicCompletion& cur) { return local_is_square(embed_at(a, cur), cur); });
}

bool sum_of_two_squares_dyadic(const NFElem& a, const DyadicCompletion& D) {
  return with_escalation(D, [&](const DyadicCompletion& cur) {
    // (-1, a) = 1 iff a (1 + t^2) is a square for some integral t: when -1 is
    // not a square, x^2 + y^2 = a forces y != 0 (or a square), and t = x/y may
    // be replaced by 1/t. Classes t mod p^k are refined until 1 + t^2 has
    // small enough valuation that every lift has the same square class.
    const LocalElem A = embed_at(a, cur);
    if (local_is_square(A, cur)) return true;
    if (local_is_square(local_of_integral(ZPoly::constant(-1), cur), cur)) return true;

    const int e = cur.e();
    const Integer mN = cur.modulus();
    const ZPoly& F = cur.F();
    const ZPoly pi = zmod::rem(ZPoly(cur.prime().pi().denominator_clear().first), F, mN);
    std::vector<ZPoly> reps;
    for (unsigned long r = 0; r < (1UL << cur.f_deg()); ++r) {
      std::vector<Integer> c;
      for (int i = 0; i < cur.f_deg(); ++i) c.emplace_back((r >> i) & 1);
      reps.emplace_back(std::move(c));
    }

    struct Cls {
      ZPoly t;
      int k;
      ZPoly pik;
    };
    std::vector<Cls> stack{{ZPoly(), 0, ZPoly::constant(1)}};
    const int depth_limit = 64 * e + 64;
    while (!stack.empty()) {
      Cls c = std::move(stack.back());
      stack.pop_back();
      ZPoly s = zmod::add(ZPoly::constant(1), zmod::mulmod(c.t, c.t, F, mN), mN);
      LocalElem S = local_of_integral(s, cur);
      if (S.val <= std::min(e + c.k, 2 * c.k) - 2 * e - 1) {
        if (local_is_square(local_mul(A, S, cur), cur)) return true;
        continue;
      }
      if (c.k >= depth_limit) throw std::logic_error("sum_of_two_squares_dyadic: refinement did not settle");
      ZPoly next_pik = zmod::mulmod(c.pik, pi, F, mN);
      for (const auto& r : reps)
        stack.push_back({zmod::add(c.t, zmod::mulmod(r, c.pik, F, mN), mN), c.k + 1, next_pik});
    }
    return false;
  });
}

int minus_one_minus_one_dyadic(const DyadicCompletion& D) { return D.d() % 2 == 0 ? 1 : -1; }

}  // namespace sos
