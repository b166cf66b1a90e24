#include "sos/function_field.hpp"

#include <algorithm>

#include "sos/arith.hpp"
#include "sos/error.hpp"

namespace sos {

FunctionField FunctionField::rational(const Integer& q) {
  if (q < 3) throw UnsupportedField("F_q(x) needs q >= 3, got " + q.get_str());
  auto fac = factor_integer(q);
  if (fac.size() != 1) throw UnsupportedField(q.get_str() + " is not a prime power");
  if (fac[0].first == 2) throw UnsupportedField("characteristic 2 is not supported");
  return FunctionField(FqField::extension(fac[0].first, fac[0].second));
}

FunctionField::FunctionField(FqField base) : F_(std::move(base)) {
  if (F_.characteristic() == 2) throw UnsupportedField("characteristic 2 is not supported");
}

FFElem FunctionField::zero() const { return FFElem(*this, FqPoly(), FqPoly::constant(F_.one())); }
FFElem FunctionField::one() const { return constant(F_.one()); }
FFElem FunctionField::x() const { return from_poly(FqPoly::x()); }
FFElem FunctionField::constant(const FqField::Rep& c) const { return from_poly(FqPoly::constant(c)); }
FFElem FunctionField::from_poly(const FqPoly& p) const { return FFElem(*this, p, FqPoly::constant(F_.one())); }
FFElem FunctionField::g() const { return constant(F_.generator()); }

FFElem::FFElem(FunctionField K, FqPoly num, FqPoly den) : K_(std::move(K)) {
  const FqField& F = K_.base();
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = FqPoly();
    den_ = FqPoly::constant(F.one());
    return;
  }
  FqPoly g = fq::gcd(F, num, den);
  num = fq::divrem(F, num, g).first;
  den = fq::divrem(F, den, g).first;
  const auto lc_inv = F.inv(den.lead());
  num_ = fq::scale(F, num, lc_inv);
  den_ = fq::scale(F, den, lc_inv);
}

FFElem FFElem::operator-() const { return FFElem(K_, fq::scale(K_.base(), num_, K_.base().neg(K_.base().one())), den_); }

FFElem operator+(const FFElem& a, const FFElem& b) {
  const FqField& F = a.K_.base();
  return FFElem(a.K_, fq::add(F, fq::mul(F, a.num_, b.den_), fq::mul(F, b.num_, a.den_)), fq::mul(F, a.den_, b.den_));
}

FFElem operator-(const FFElem& a, const FFElem& b) { return a + (-b); }

FFElem operator*(const FFElem& a, const FFElem& b) {
  const FqField& F = a.K_.base();
  return FFElem(a.K_, fq::mul(F, a.num_, b.num_), fq::mul(F, a.den_, b.den_));
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return FFElem(K_, den_, num_);
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

FFElem FFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const FqField& F = K_.base();
  return FFElem(K_, fq::pow(F, num_, static_cast<unsigned>(e)), fq::pow(F, den_, static_cast<unsigned>(e)));
}

std::string FFElem::to_string(const std::string& var) const {
  const FqField& F = K_.base();
  std::string n = fq::to_string(F, num_, var);
  if (den_.degree() == 0) return n;
  return "(" + n + ")/(" + fq::to_string(F, den_, var) + ")";
}

Integer PlaceFF::residue_order(const FunctionField& K) const {
  return pow(K.q(), static_cast<unsigned long>(degree()));
}

std::string PlaceFF::to_string(const FunctionField& K) const {
  if (is_infinite()) return "infinity";
  return "(" + fq::to_string(K.base(), *P_) + ")";
}

Integer FFResidue::order() const { return pow(base.order(), static_cast<unsigned long>(modulus.degree())); }

bool FFResidue::is_square() const {
  if (base.characteristic() == 2) throw UnsupportedField("characteristic 2 is not supported");
  if (rep.is_zero()) throw ZeroElement();
  return fq::powmod(base, rep, (order() - 1) / 2, modulus).is_one();
}

long valuation_ff(const FFElem& a, const PlaceFF& pl) {
  if (a.is_zero()) throw ZeroElement();
  if (pl.is_infinite()) return a.den().degree() - a.num().degree();
  const FqField& F = a.field().base();
  return fq::multiplicity(F, a.num(), pl.poly()) - fq::multiplicity(F, a.den(), pl.poly());
}

std::vector<PlaceFF> places_dividing(const FFElem& a) {
  if (a.is_zero()) throw ZeroElement();
  const FqField& F = a.field().base();
  std::vector<FqPoly> support;
  for (const FqPoly* part : {&a.num(), &a.den()})
    if (part->degree() > 0)
      for (const auto& [g, e] : poly_factor_fq(F, *part).factors) support.push_back(g);
  std::sort(support.begin(), support.end());
  std::vector<PlaceFF> out;
  for (auto& g : support) out.push_back(PlaceFF::finite(std::move(g)));
  if (valuation_ff(a, PlaceFF::infinity()) != 0) out.push_back(PlaceFF::infinity());
  return out;
}

FFResidue residue_unit_ff(const FFElem& a, const PlaceFF& pl) {
  if (a.is_zero()) throw ZeroElement();
  const FqField& F = a.field().base();
  if (pl.is_infinite()) {
    // a x^v = lc(num)/lc(den) + O(1/x)
    return {F, FqPoly::x(), FqPoly::constant(F.div(a.num().lead(), a.den().lead()))};
  }
  const FqPoly& P = pl.poly();
  auto strip = [&](FqPoly f) {
    while (true) {
      auto [q, r] = fq::divrem(F, f, P);
      if (!r.is_zero()) return f;
      f = std::move(q);
    }
  };
  FqPoly n = fq::rem(F, strip(a.num()), P);
  FqPoly d = fq::rem(F, strip(a.den()), P);
  // d^-1 = d^(q^deg - 2) in F_q[x]/(P)
  const Integer order = pow(F.order(), static_cast<unsigned long>(P.degree()));
  FqPoly dinv = fq::powmod(F, d, order - 2, P);
  return {F, P, fq::rem(F, fq::mul(F, n, dinv), P)};
}

bool is_local_square_ff(const FFElem& a, const PlaceFF& pl) {
  if (valuation_ff(a, pl) % 2 != 0) return false;
  return residue_unit_ff(a, pl).is_square();
}

bool is_square_global_ff(const FFElem& a) {
  if (a.is_zero()) throw ZeroElement();
  const FqField& F = a.field().base();
  if (!F.is_square(a.num().lead())) return false;
  for (const FqPoly* part : {&a.num(), &a.den()})
    if (part->degree() > 0)
      for (const auto& [g, e] : poly_factor_fq(F, *part).factors)
        if (e % 2 != 0) return false;
  return true;
}

}  // namespace sos
