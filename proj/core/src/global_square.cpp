#include "sos/global_square.hpp"

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

namespace {

constexpr int kPrimesPerRound = 4;

struct LiftPrime {
  Integer p;
  std::vector<ZPoly> idempotents;  // CRT basis of F_p[x]/(f) over the factors of f
  std::vector<ZPoly> roots;        // a square root of B modulo each factor
};

std::optional<NFElem> try_lift(const NumberField& K, const ZPoly& B, const LiftPrime& L, unsigned m) {
  const ZPoly& f = K.polynomial();
  const Integer& p = L.p;
  const size_t t = L.roots.size();
  const Integer pm = pow(p, m);
  const NFElem target = K.from_poly(to_q(B));
  for (unsigned long signs = 0; signs < (1UL << (t - 1)); ++signs) {
    ZPoly s;
    for (size_t i = 0; i < t; ++i) {
      ZPoly part = zmod::mulmod(L.roots[i], L.idempotents[i], f, p);
      s = ((i > 0) && ((signs >> (i - 1)) & 1)) ? zmod::sub(s, part, p) : zmod::add(s, part, p);
    }
    // Newton on the inverse square root: r <- r (3 - B r^2) / 2
    ZPoly r = zmod::inverse(s, f, p, 1);
    unsigned k = 1;
    while (k < m) {
      k = std::min(2 * k, m);
      const Integer pk = pow(p, k);
      ZPoly br2 = zmod::mulmod(zmod::reduce(B, pk), zmod::mulmod(r, r, f, pk), f, pk);
      ZPoly corr = zmod::sub(ZPoly::constant(3), br2, pk);
      r = zmod::scale(zmod::mulmod(r, corr, f, pk), inv_mod(2, pk), pk);
    }
    ZPoly root = zmod::mulmod(zmod::reduce(B, pm), r, f, pm);
    std::vector<Rational> coords;
    bool ok = true;
    for (int i = 0; i < K.degree() && ok; ++i) {
      auto q = rational_reconstruct(root.coeff(i), pm);
      if (!q) ok = false;
      else coords.push_back(*q);
    }
    if (!ok) continue;
    NFElem w = K.from_coords(std::move(coords));
    if (w * w == target) return w;
  }
  return std::nullopt;
}

}  // namespace

SquareTest is_square_global(const NFElem& a) {
  if (a.is_zero()) throw ZeroElement();
  const NumberField& K = a.field();
  const ZPoly& f = K.polynomial();
  auto [b, c] = a.denominator_clear();
  // a = B / c^2 with B integral
  ZPoly B = c * ZPoly(b);
  const NFElem c_elem = K.from_rational(Rational(c));

  if (K.degree() == 1 && B.coeff(0) > 0 && is_perfect_square(B.coeff(0)))
    return {true, K.from_rational(Rational(isqrt(B.coeff(0)), c)), std::nullopt};

  const Integer normB = K.from_poly(to_q(B)).norm().get_num();
  const bool liftable = normB > 0 && is_perfect_square(normB);
  const Integer bad = K.discriminant() * normB;

  std::optional<LiftPrime> lift;
  unsigned precision = 0;
  PrimeStream primes(3);
  while (true) {
    for (int n = 0; n < kPrimesPerRound; ++n) {
      const Integer p = primes.next();
      if (mpz_divisible_p(bad.get_mpz_t(), p.get_mpz_t())) continue;
      FqField Fp = FqField::prime(p);
      auto fac = poly_factor_fq(Fp, FqPoly::from_zpoly(Fp, f));
      LiftPrime cand{p, {}, {}};
      for (const auto& [g, e] : fac.factors) {
        ZPoly gz = g.to_zpoly();
        FqField R = FqField::with_modulus(p, gz);
        auto res = R.reduce(B);
        auto root = R.sqrt(res);
        if (!root) {
          for (const auto& P : split_prime(K, p))
            if (P.gbar() == gz) return {false, std::nullopt, P};
          throw std::logic_error("witness prime not found among primes above " + p.get_str());
        }
        cand.roots.push_back(*root);
      }
      if (!lift && liftable) {
        const ZPoly fbar = zmod::reduce(f, p);
        for (const auto& [g, e] : fac.factors) {
          ZPoly gz = g.to_zpoly();
          ZPoly M = zmod::divrem(fbar, gz, p).first;
          auto [d, s, t] = zmod::xgcd(zmod::rem(M, gz, p), gz, p);
          cand.idempotents.push_back(zmod::mulmod(M, s, f, p));
        }
        lift = std::move(cand);
        precision = 1;
        while (pow(p, precision) < Integer(1) << 64) precision *= 2;
      }
    }
    if (lift) {
      if (auto w = try_lift(K, B, *lift, precision)) return {true, *w / c_elem, std::nullopt};
      precision *= 2;
    }
  }
}

bool is_minus_one_square(const NumberField& K) {
  if (!K.real_embeddings().empty()) return false;
  return is_square_global(-K.one()).is_square;
}

}  // namespace sos
