#include "sos/prime_ideal.hpp"

#include <optional>
#include <stdexcept>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

namespace {

ZPoly integral_coords(const std::vector<Integer>& b) { return ZPoly(b); }

ZPoly mul_mod_f(const ZPoly& a, const ZPoly& b, const ZPoly& f) {
  return divrem_monic(a * b, f).second;
}

bool all_divisible(const ZPoly& a, const Integer& p) {
  for (const auto& c : a.coeffs())
    if (mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()) == 0) return false;
  return true;
}

ZPoly div_exact(const ZPoly& a, const Integer& d) {
  std::vector<Integer> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    r.push_back(q);
  }
  return ZPoly(std::move(r));
}

struct IntegralValuation {
  long v = 0;
  long stripped = 0;  // s with b = p^s * b'
  ZPoly unit;         // b' * h^k / p^k, a P-unit with integral coordinates
};

// v_P(b) for b in Z[theta] nonzero: strip the p-content, then step b -> b h / p
// while it stays integral. Each step lowers v_P by one and keeps every other
// prime above p integral, so the step count is v_P(b').
IntegralValuation integral_valuation(const ZPoly& b, const Integer& p, const ZPoly& f, const ZPoly& h,
                                     int e) {
  if (b.is_zero()) throw ZeroElement();
  Integer c = content(b);
  long s = valuation_p(c, p);
  ZPoly y = s ? div_exact(b, pow(p, static_cast<unsigned long>(s))) : b;
  long k = 0;
  if (!h.is_zero()) {
    while (true) {
      ZPoly t = mul_mod_f(y, h, f);
      if (!all_divisible(t, p)) break;
      y = div_exact(t, p);
      ++k;
    }
  }
  return {s * e + k, s, std::move(y)};
}

std::vector<std::pair<ZPoly, int>> factor_mod_p(const ZPoly& f, const Integer& p) {
  FqField Fp = FqField::prime(p);
  auto fac = poly_factor_fq(Fp, FqPoly::from_zpoly(Fp, f));
  std::vector<std::pair<ZPoly, int>> out;
  for (const auto& [g, e] : fac.factors) out.emplace_back(g.to_zpoly(), e);
  return out;
}

}  // namespace

bool dedekind_is_pmaximal(const NumberField& K, const Integer& p) {
  const ZPoly& f = K.polynomial();
  auto fac = factor_mod_p(f, p);
  ZPoly g = ZPoly::constant(1), h = ZPoly::constant(1);
  bool squarefree = true;
  for (const auto& [gi, ei] : fac) {
    g = zmod::mul(g, gi, p);
    for (int j = 1; j < ei; ++j) h = zmod::mul(h, gi, p);
    if (ei > 1) squarefree = false;
  }
  if (squarefree) return true;
  // F = (g h - f) / p must share no factor with gcd(g, h) mod p
  ZPoly F = div_exact(g * h - f, p);
  ZPoly common = zmod::gcd(zmod::gcd(g, h, p), zmod::reduce(F, p), p);
  return common.degree() == 0;
}

std::vector<PrimeIdealNF> split_prime(const NumberField& K, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("split_prime: " + p.get_str() + " is not prime");
  if (!dedekind_is_pmaximal(K, p)) throw NotPMaximal(p);
  const ZPoly& f = K.polynomial();
  const ZPoly fbar = zmod::reduce(f, p);
  auto fac = factor_mod_p(f, p);

  std::vector<PrimeIdealNF> out;
  int idx = 0;
  for (const auto& [g, e] : fac) {
    ZPoly h = zmod::divrem(fbar, g, p).first;
    if (h.is_zero()) h = ZPoly::constant(1);

    auto val = [&](const ZPoly& b) { return integral_valuation(divrem_monic(b, f).second, p, f, h, e).v; };

    if (val(h) != e - 1) throw std::logic_error("anti-uniformizer check failed at " + p.get_str());

    std::optional<ZPoly> pi;
    for (const ZPoly& cand : {g, ZPoly::constant(p), g + ZPoly::constant(p)}) {
      ZPoly r = divrem_monic(cand, f).second;
      if (!r.is_zero() && val(r) == 1) {
        pi = r;
        break;
      }
    }
    if (!pi) throw std::logic_error("no uniformizer found at " + p.get_str());

    FqField residue = FqField::with_modulus(p, g);
    ZPoly w = ZPoly::constant(1);
    for (int j = 0; j < e; ++j) w = mul_mod_f(w, h, f);
    FqField::Rep p_unit = residue.reduce(div_exact(w, pow(p, static_cast<unsigned long>(e - 1))));
    if (p_unit.is_zero()) throw std::logic_error("unit part of p vanished at " + p.get_str());

    std::vector<Rational> tau_coords;
    const ZPoly h_red = divrem_monic(h, f).second;
    for (const auto& c : h_red.coeffs()) tau_coords.emplace_back(c, p);
    auto data = std::make_shared<PrimeIdealNF::Data>(PrimeIdealNF::Data{
        K, p, g, e, g.degree(), idx++, h, K.from_poly(to_q(*pi)),
        K.from_coords(std::move(tau_coords)), residue, p_unit});
    out.push_back(PrimeIdealNF(std::move(data)));
  }

  for (const auto& P : out)
    for (const auto& Q : out)
      if (!(P == Q) && valuation(P.tau(), Q) < 0)
        throw std::logic_error("anti-uniformizer not integral at a conjugate prime above " + p.get_str());
  return out;
}

long valuation(const NFElem& a, const PrimeIdealNF& P) {
  if (a.is_zero()) throw ZeroElement();
  auto [b, c] = a.denominator_clear();
  const auto& d = *P.d_;
  long vb = integral_valuation(integral_coords(b), d.p, d.K.polynomial(), d.h, d.e).v;
  return vb - d.e * valuation_p(c, d.p);
}

FqElem residue_of_unit_part(const NFElem& a, const PrimeIdealNF& P) {
  if (a.is_zero()) throw ZeroElement();
  auto [b, c] = a.denominator_clear();
  const auto& d = *P.d_;
  const FqField& F = d.residue;
  auto iv = integral_valuation(integral_coords(b), d.p, d.K.polynomial(), d.h, d.e);
  long sc = valuation_p(c, d.p);
  Integer c_unit = c / pow(d.p, static_cast<unsigned long>(sc));
  // b tau^v(b) = b' h^k p^-k (p tau^e)^s and c tau^v(c) = c' (p tau^e)^sc
  FqField::Rep r = F.reduce(iv.unit);
  r = F.mul(r, F.inv(F.from_integer(c_unit)));
  long shift = iv.stripped - sc;
  if (shift != 0) {
    FqField::Rep pu = shift > 0 ? d.p_unit : F.inv(d.p_unit);
    r = F.mul(r, F.pow(pu, Integer(std::labs(shift))));
  }
  return {F, r};
}

bool is_local_square_nondyadic(const NFElem& a, const PrimeIdealNF& P) {
  if (P.is_dyadic()) throw std::invalid_argument("is_local_square_nondyadic: dyadic prime");
  if (valuation(a, P) % 2 != 0) return false;
  return is_square_fq(residue_of_unit_part(a, P));
}

int hilbert_nondyadic(const NFElem& a, const NFElem& b, const PrimeIdealNF& P) {
  if (P.is_dyadic()) throw std::invalid_argument("hilbert_nondyadic: dyadic prime");
  const long alpha = valuation(a, P), beta = valuation(b, P);
  auto chi = [](const FqElem& u) { return is_square_fq(u) ? 1 : -1; };
  int s = 1;
  const Integer half = (P.residue_order() - 1) / 2;
  if ((alpha & 1) && (beta & 1) && mpz_odd_p(half.get_mpz_t())) s = -s;
  if (beta & 1) s *= chi(residue_of_unit_part(a, P));
  if (alpha & 1) s *= chi(residue_of_unit_part(b, P));
  return s;
}

int hilbert_real(const NFElem& a, const NFElem& b, const RealEmbedding& rho) {
  return (sign_at(a, rho) < 0 && sign_at(b, rho) < 0) ? -1 : 1;
}

std::string PrimeIdealNF::to_string(const std::string& var) const {
  if (d_->K.degree() == 1) return "(" + d_->p.get_str() + ")";
  return "(" + d_->p.get_str() + ", " + sos::to_string(d_->gbar, var) + ")";
}

}  // namespace sos
