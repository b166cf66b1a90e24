#include "sos/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/lengths.hpp"
#include "sos/prime_ideal.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

std::string to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::Enumeration: return "enumeration";
    case OracleMethod::ClassicalTheorem: return "classical-theorem";
    case OracleMethod::ProductFormula: return "product-formula";
  }
  return "?";
}

std::string to_string(FFOracleLength l) {
  switch (l) {
    case FFOracleLength::One: return "1";
    case FFOracleLength::Two: return "2";
    case FFOracleLength::MoreThanTwo: return ">2";
  }
  return "?";
}

int length_q_theorem(const Integer& m) {
  if (m <= 0) throw std::invalid_argument("length_q_theorem: m must be positive");
  if (is_perfect_square(m)) return 1;
  const auto fac = factor_integer(m);
  if (std::all_of(fac.begin(), fac.end(), [](const auto& pe) { return mod(pe.first, 4) != 3 || pe.second % 2 == 0; }))
    return 2;
  Integer r = m;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 4)) r /= 4;
  return mod(r, 8) == 7 ? 4 : 3;
}

int length_q_enumerate(long m) {
  if (m <= 0 || m > kEnumerationLimit) throw InstanceTooLarge("enumeration oracle needs 1 <= m <= 10000");
  auto is_sq = [](long v) {
    if (v < 0) return false;
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
  };
  if (is_sq(m)) return 1;
  for (long x = 1; x * x < m; ++x)
    if (is_sq(m - x * x)) return 2;
  for (long x = 1; x * x < m; ++x)
    for (long y = x; x * x + y * y < m; ++y)
      if (is_sq(m - x * x - y * y)) return 3;
  for (long x = 1; x * x < m; ++x)
    for (long y = x; x * x + y * y < m; ++y)
      for (long z = y; x * x + y * y + z * z < m; ++z)
        if (is_sq(m - x * x - y * y - z * z)) return 4;
  throw std::logic_error("no four-square representation found for " + std::to_string(m));
}

int length_q_oracle(const Rational& a) {
  if (a == 0) throw ZeroElement();
  if (a < 0) return kInfiniteLength;
  // a = num/den lies in the square class of num * den
  const Integer m = a.get_num() * a.get_den();
  const int l = length_q_theorem(m);
  if (m <= kEnumerationLimit && l != length_q_enumerate(m.get_si()))
    throw std::logic_error("oracle branches disagree at " + m.get_str());
  return l;
}

OracleReport length_q_report(const Rational& a) {
  return {to_string(a), length_to_string(length_q_oracle(a)), OracleMethod::ClassicalTheorem};
}

FFOracleLength length_ff_oracle(const FFElem& a, int degree_bound) {
  if (a.is_zero()) throw ZeroElement();
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const FqField& F = a.field().base();
  const FqPoly A = fq::mul(F, a.num(), a.den());
  const unsigned long q = F.order().get_ui();
  // keys are base-q digits of coefficient indices
  const double key_space = std::pow(static_cast<double>(q), std::max(A.degree(), 2 * degree_bound) + 1);
  const double count = std::pow(static_cast<double>(q), degree_bound + 1);
  if (!F.order().fits_ulong_p() || key_space > 9.0e18 || count > 4.0e6)
    throw InstanceTooLarge("function-field oracle search space too large");

  auto key = [&](const FqPoly& p) {
    std::uint64_t k = 0;
    for (int i = p.degree(); i >= 0; --i) k = k * q + F.index(p.coeff(i)).get_ui();
    return k;
  };
  std::vector<FqPoly> squares_list;
  std::unordered_set<std::uint64_t> squares;
  const auto total = static_cast<std::uint64_t>(count);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FqField::Rep> c;
    std::uint64_t t = idx;
    for (int i = 0; i <= degree_bound; ++i) {
      c.push_back(F.element(Integer(static_cast<unsigned long>(t % q))));
      t /= q;
    }
    FqPoly f(std::move(c));
    FqPoly f2 = fq::mul(F, f, f);
    squares.insert(key(f2));
    squares_list.push_back(std::move(f2));
  }
  if (squares.count(key(A))) return FFOracleLength::One;
  for (const auto& f2 : squares_list)
    if (squares.count(key(fq::sub(F, A, f2)))) return FFOracleLength::Two;
  return FFOracleLength::MoreThanTwo;
}

bool hilbert_product_check(const Rational& a, const NumberField& K) {
  if (a == 0) throw ZeroElement();
  auto dyadic = split_prime(K, 2);
  if (dyadic.size() != 1) throw MultipleDyadicPrimes();
  const NFElem A = K.from_rational(a), minus_one = -K.one();
  int product = 1;
  for (const auto& rho : K.real_embeddings()) product *= hilbert_real(minus_one, A, rho);
  for (const Integer& n : {Integer(a.get_num()), Integer(a.get_den())}) {
    if (abs(n) <= 1) continue;
    for (const auto& [p, e] : factor_integer(n)) {
      if (p == 2) continue;
      for (const auto& P : split_prime(K, p)) product *= hilbert_nondyadic(minus_one, A, P);
    }
  }
  product *= sum_of_two_squares_dyadic(A, dyadic_completion(dyadic[0])) ? 1 : -1;
  return product == 1;
}

namespace {

// v_d(c) from the local norm: v_2(Res(F, c)) = f * v_d(c). Capped at `cap`
// once the norm vanishes modulo the working precision.
long norm_valuation(const ZPoly& F, const ZPoly& c, int f, const Integer& mod2N, long cap) {
  if (zmod::reduce(c, mod2N).is_zero()) return cap;
  Integer n;
  if (F.degree() == 1) {
    const Integer r = mod(-F.coeff(0), mod2N);
    Integer acc = 0;
    for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) acc = mod(acc * r + *it, mod2N);
    n = acc;
  } else {
    n = mod(resultant(to_q(F), to_q(c)).get_num(), mod2N);
  }
  if (n == 0) return cap;
  return std::min(cap, static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)) / f);
}

}  // namespace

int hilbert_dyadic_bruteforce(const NFElem& a, const NFElem& b, const DyadicCompletion& D0) {
  if (a.is_zero() || b.is_zero()) throw ZeroElement();
  const int e = D0.e(), f = D0.f_deg();

  // integral representatives in the same square classes
  auto integral = [&](const NFElem& x) {
    auto [num, den] = x.denominator_clear();
    return ZPoly(num) * ZPoly::constant(den);
  };
  const ZPoly ai = integral(a), bi = integral(b);

  // first pass at a precision that resolves small valuations
  const long probe_cap = 64;
  DyadicCompletion D = D0.with_precision(static_cast<unsigned>(f * probe_cap + 8));
  Integer mod2N = D.modulus();
  const long va = norm_valuation(D.F(), ai, f, mod2N, probe_cap);
  const long vb = norm_valuation(D.F(), bi, f, mod2N, probe_cap);
  if (va >= probe_cap || vb >= probe_cap) throw InstanceTooLarge("valuations too large for the brute-force symbol");
  const long k = 2 * (e + std::max({va, vb, 1L})) + 1;
  if (3 * f * k > 24) throw InstanceTooLarge("brute-force Hilbert symbol: 3 f k = " + std::to_string(3 * f * k) + " > 24");

  D = D0.with_precision(static_cast<unsigned>(f * k + 8));
  mod2N = D.modulus();
  const ZPoly& F = D.F();
  auto vloc = [&](const ZPoly& c) { return norm_valuation(F, c, f, mod2N, k); };

  // an independent uniformizer: first of gbar, 2, gbar + 2 with valuation 1
  std::optional<ZPoly> pi;
  for (const ZPoly& cand : {D.prime().gbar(), ZPoly::constant(2), D.prime().gbar() + ZPoly::constant(2)}) {
    ZPoly r = zmod::rem(cand, F, mod2N);
    if (!r.is_zero() && vloc(r) == 1) {
      pi = r;
      break;
    }
  }
  if (!pi) throw std::logic_error("brute-force oracle: no uniformizer");

  // residues sum_{j<k} r_j pi^j, r_j over 0/1 polynomials of degree < f
  std::vector<ZPoly> digits;
  for (unsigned long r = 0; r < (1UL << f); ++r) {
    std::vector<Integer> c;
    for (int i = 0; i < f; ++i) c.emplace_back((r >> i) & 1);
    digits.emplace_back(std::move(c));
  }
  std::vector<ZPoly> all{ZPoly()};
  ZPoly pij = ZPoly::constant(1);
  for (long j = 0; j < k; ++j) {
    std::vector<ZPoly> next;
    for (const auto& base : all)
      for (const auto& dgt : digits) next.push_back(zmod::add(base, zmod::mulmod(dgt, pij, F, mod2N), mod2N));
    all = std::move(next);
    pij = zmod::mulmod(pij, *pi, F, mod2N);
  }
  // classes inside p: gbar divides the reduction mod 2
  std::vector<ZPoly> in_p;
  for (const auto& x : all)
    if (zmod::rem(zmod::reduce(x, 2), D.prime().gbar(), 2).is_zero()) in_p.push_back(x);

  const ZPoly A = zmod::rem(ai, F, mod2N), B = zmod::rem(bi, F, mod2N);
  std::vector<ZPoly> sq_all;
  for (const auto& x : all) sq_all.push_back(zmod::mulmod(x, x, F, mod2N));
  std::vector<ZPoly> sq_in_p;
  for (const auto& x : in_p) sq_in_p.push_back(zmod::mulmod(x, x, F, mod2N));

  auto Q = [&](const ZPoly& x2, const ZPoly& y2, const ZPoly& z2) {
    return zmod::sub(zmod::add(zmod::mulmod(A, x2, F, mod2N), zmod::mulmod(B, y2, F, mod2N), mod2N), z2, mod2N);
  };
  const ZPoly one = ZPoly::constant(1);
  // x = 1
  for (const auto& y2 : sq_all)
    for (const auto& z2 : sq_all)
      if (vloc(Q(one, y2, z2)) >= k) return 1;
  // x in p, y = 1
  for (const auto& x2 : sq_in_p)
    for (const auto& z2 : sq_all)
      if (vloc(Q(x2, one, z2)) >= k) return 1;
  // x, y in p, z = 1
  for (const auto& x2 : sq_in_p)
    for (const auto& y2 : sq_in_p)
      if (vloc(Q(x2, y2, one)) >= k) return 1;
  return -1;
}

}  // namespace sos
