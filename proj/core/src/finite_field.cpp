#include "sos/finite_field.hpp"

#include <sstream>

#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/zmod_poly.hpp"

namespace sos {

FqField FqField::prime(const Integer& p) {
  return FqField(std::make_shared<const Data>(Data{p, 1, p, ZPoly::x()}));
}

FqField FqField::with_modulus(const Integer& p, const ZPoly& modulus) {
  ZPoly m = zmod::reduce(modulus, p);
  if (m.degree() < 1 || m.lead() != 1) throw Error("finite field modulus must be monic of degree >= 1");
  if (m.degree() == 1) return FqField(std::make_shared<const Data>(Data{p, 1, p, m}));
  return FqField(std::make_shared<const Data>(Data{p, m.degree(), sos::pow(p, static_cast<unsigned long>(m.degree())), m}));
}

FqField FqField::extension(const Integer& p, int k) {
  if (k < 1) throw Error("extension degree must be positive");
  if (k == 1) return prime(p);
  FqField base = prime(p);
  const Integer count = sos::pow(p, static_cast<unsigned long>(k));
  // Index i encodes (c_{k-1}, ..., c_0) with c_{k-1} most significant, so
  // increasing i walks the tuples in lexicographic order.
  for (Integer i = 0; i < count; ++i) {
    std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
    Integer t = i;
    for (int j = 0; j < k; ++j) {
      c[static_cast<size_t>(j)] = t % p;
      t /= p;
    }
    c[static_cast<size_t>(k)] = 1;
    ZPoly m(std::move(c));
    if (m.coeff(0) == 0) continue;
    FqPoly fm = FqPoly::from_zpoly(base, m);
    if (is_irreducible_fq(base, fm)) return with_modulus(p, m);
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

FqField::Rep FqField::from_integer(const Integer& n) const { return Rep::constant(mod(n, d_->p)); }

FqField::Rep FqField::generator() const {
  if (d_->k == 1) return Rep::constant(mod(-d_->modulus.coeff(0), d_->p));
  return Rep::x();
}

FqField::Rep FqField::reduce(const ZPoly& a) const {
  // linear modulus x - r: evaluate at r
  if (d_->k == 1) {
    const Integer r = mod(-d_->modulus.coeff(0), d_->p);
    Integer acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = mod(acc * r + *it, d_->p);
    return Rep::constant(acc);
  }
  return zmod::rem(a, d_->modulus, d_->p);
}

FqField::Rep FqField::add(const Rep& a, const Rep& b) const { return zmod::add(a, b, d_->p); }
FqField::Rep FqField::sub(const Rep& a, const Rep& b) const { return zmod::sub(a, b, d_->p); }
FqField::Rep FqField::neg(const Rep& a) const { return zmod::reduce(-a, d_->p); }

FqField::Rep FqField::mul(const Rep& a, const Rep& b) const {
  if (d_->k == 1) {
    if (a.is_zero() || b.is_zero()) return Rep();
    return Rep::constant(mod(a.coeff(0) * b.coeff(0), d_->p));
  }
  return zmod::mulmod(a, b, d_->modulus, d_->p);
}

FqField::Rep FqField::inv(const Rep& a) const {
  if (a.is_zero()) throw DivisionByZero();
  if (d_->k == 1) return Rep::constant(inv_mod(a.coeff(0), d_->p));
  auto [g, s, t] = zmod::xgcd(a, d_->modulus, d_->p);
  (void)t;
  return zmod::rem(s, d_->modulus, d_->p);
}

FqField::Rep FqField::pow(const Rep& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), -e);
  if (d_->k == 1) {
    if (a.is_zero()) return e == 0 ? one() : Rep();
    return Rep::constant(pow_mod(a.coeff(0), e, d_->p));
  }
  return zmod::powmod(a, e, d_->modulus, d_->p);
}

bool FqField::is_square(const Rep& a) const {
  if (d_->p == 2) throw Error("square test requires odd characteristic");
  if (a.is_zero()) throw ZeroElement();
  return pow(a, (d_->q - 1) / 2) == one();
}

std::optional<FqField::Rep> FqField::sqrt(const Rep& a) const {
  if (a.is_zero()) return Rep();
  if (!is_square(a)) return std::nullopt;
  // Roots of y^2 - a by equal-degree splitting.
  FqPoly f({neg(a), zero(), one()});
  auto roots = roots_fq(*this, f);
  return roots.front();
}

FqField::Rep FqField::element(const Integer& index) const {
  std::vector<Integer> c;
  Integer t = index;
  for (int j = 0; j < d_->k; ++j) {
    c.push_back(t % d_->p);
    t /= d_->p;
  }
  return Rep(std::move(c));
}

Integer FqField::index(const Rep& a) const {
  Integer idx = 0;
  for (int j = a.degree(); j >= 0; --j) idx = idx * d_->p + a.coeff(j);
  return idx;
}

std::string FqField::to_string(const Rep& a, const std::string& var) const {
  if (d_->k == 1) return a.coeff(0).get_str();
  return sos::to_string(a, var);
}

bool is_square_fq(const FqElem& u) { return u.field.is_square(u.rep); }

}  // namespace sos
