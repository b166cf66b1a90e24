#include "sos/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "sos/error.hpp"
#include "sos/zfactor.hpp"

namespace sos {

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    QPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_of(const Rational& r) { return sgn(r); }

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sign_of(p.eval(x)));
  return variations(s);
}

int variations_at_infinity(const std::vector<QPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int sg = sign_of(p.lead());
    if (!positive && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

void isolate(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<std::pair<Rational, Rational>>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = variations_at(chain, mid);
  isolate(chain, lo, mid, vlo, vmid, out);
  isolate(chain, mid, hi, vmid, vhi, out);
}

struct Interval {
  Rational lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

// --- NumberField ----------------------------------------------------------

NumberField NumberField::from_polynomial(const QPoly& input) {
  if (input.degree() < 1) throw Error("defining polynomial must have positive degree");
  ZPoly g = primitive_part(input);
  if (!is_irreducible_z(g)) throw ReduciblePolynomial(to_string(input));
  const int n = g.degree();
  const Integer l = g.lead();
  std::vector<Integer> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Integer s = g.coeff(i);
    for (int j = 0; j < n - 1 - i; ++j) s *= l;
    c[static_cast<size_t>(i)] = (i == n) ? Integer(1) : s;
  }
  auto d = std::make_shared<Data>();
  d->f = ZPoly(std::move(c));
  d->input = input;
  d->scale = l;
  d->normalized = !(input.is_monic() && to_q(d->f) == input);
  d->disc = sos::discriminant(d->f);
  NumberField K(d);
  d->embeddings = sos::real_embeddings(K);
  return K;
}

NFElem NumberField::zero() const { return from_coords({}); }
NFElem NumberField::one() const { return from_rational(1); }
NFElem NumberField::theta() const { return from_poly(QPoly::x()); }
NFElem NumberField::from_rational(const Rational& r) const { return from_coords({r}); }
NFElem NumberField::from_coords(std::vector<Rational> coords) const { return NFElem(*this, std::move(coords)); }

NFElem NumberField::from_poly(const QPoly& p) const {
  QPoly r = divrem(p, to_q(d_->f)).second;
  return NFElem(*this, r.coeffs());
}

NFElem NumberField::input_generator() const {
  return from_poly(QPoly::monomial(Rational(1, 1) / Rational(d_->scale), 1));
}

// --- NFElem ---------------------------------------------------------------

NFElem::NFElem(NumberField K, std::vector<Rational> coords) : K_(std::move(K)), c_(std::move(coords)) {
  const size_t n = static_cast<size_t>(K_.degree());
  if (c_.size() > n) c_ = K_.from_poly(QPoly(c_)).c_;
  c_.resize(n, Rational(0));
}

bool NFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool NFElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
}

NFElem NFElem::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v = -v;
  return NFElem(K_, std::move(r));
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  std::vector<Rational> r = a.c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
  return NFElem(a.K_, std::move(r));
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem operator*(const NFElem& a, const NFElem& b) {
  const ZPoly& f = a.K_.polynomial();
  const int n = f.degree();
  std::vector<Rational> prod(static_cast<size_t>(2 * n - 1), Rational(0));
  for (int i = 0; i < n; ++i) {
    if (a.c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    const Rational t = prod[static_cast<size_t>(i)];
    if (t == 0) continue;
    for (int j = 0; j < n; ++j) prod[static_cast<size_t>(i - n + j)] -= t * f.coeffs()[static_cast<size_t>(j)];
  }
  prod.resize(static_cast<size_t>(n));
  return NFElem(a.K_, std::move(prod));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  auto [g, s, t] = xgcd(to_poly(), to_q(K_.polynomial()));
  (void)t;
  if (g.degree() != 0) throw Error("element not invertible (reducible modulus?)");
  return K_.from_poly(s);
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem result = K_.one();
  NFElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rational NFElem::norm() const { return resultant(to_q(K_.polynomial()), to_poly()); }

std::pair<std::vector<Integer>, Integer> NFElem::denominator_clear() const {
  Integer d = 1;
  for (const auto& v : c_) d = lcm(d, v.get_den());
  std::vector<Integer> b;
  for (const auto& v : c_) b.push_back(v.get_num() * (d / v.get_den()));
  return {b, d};
}

std::string NFElem::to_string(const std::string& var) const { return sos::to_string(to_poly(), var); }

std::string NFElem::to_input_string(const std::string& var) const {
  // sum c_i theta^i = sum c_i scale^i alpha^i
  std::vector<Rational> r;
  Integer s = 1;
  for (const auto& v : c_) {
    r.push_back(v * s);
    s *= K_.scale();
  }
  return sos::to_string(QPoly(std::move(r)), var);
}

NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
NFElem nf_inv(const NFElem& a) { return a.inverse(); }
Rational nf_norm(const NFElem& a) { return a.norm(); }
std::pair<std::vector<Integer>, Integer> nf_denominator_clear(const NFElem& a) { return a.denominator_clear(); }

// --- real places ----------------------------------------------------------

int sturm_root_count(const QPoly& f) {
  auto chain = sturm_chain(f);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<RealEmbedding> real_embeddings(const NumberField& K) {
  const QPoly f = to_q(K.polynomial());
  std::vector<RealEmbedding> out;
  if (f.degree() == 1) {
    Rational r = -f.coeff(0);
    out.push_back({0, r, r});
    return out;
  }
  Integer bound = 1;
  for (const auto& c : K.polynomial().coeffs()) bound = std::max(bound, Integer(abs(c)));
  Rational R(bound + 1);
  auto chain = sturm_chain(f);
  std::vector<std::pair<Rational, Rational>> iv;
  isolate(chain, -R, R, variations_at(chain, -R), variations_at(chain, R), iv);
  for (size_t i = 0; i < iv.size(); ++i) out.push_back({static_cast<int>(i), iv[i].first, iv[i].second});
  return out;
}

int sign_at(const NFElem& a, const RealEmbedding& rho) {
  if (a.is_zero()) throw ZeroElement();
  const QPoly p = a.to_poly();
  if (p.degree() == 0) return sign_of(p.coeff(0));
  if (rho.lo == rho.hi) return sign_of(p.eval(rho.lo));
  const QPoly f = to_q(a.field().polynomial());
  Rational lo = rho.lo, hi = rho.hi;
  const int sign_lo = sign_of(f.eval(lo));
  while (true) {
    Interval acc{p.lead(), p.lead()};
    const Interval x{lo, hi};
    for (int i = p.degree() - 1; i >= 0; --i) {
      acc = imul(acc, x);
      acc.lo += p.coeff(i);
      acc.hi += p.coeff(i);
    }
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
    Rational mid = (lo + hi) / 2;
    if (sign_of(f.eval(mid)) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

bool is_totally_positive(const NFElem& a) {
  if (a.is_zero()) throw ZeroElement();
  for (const auto& rho : a.field().real_embeddings()) {
    if (sign_at(a, rho) < 0) return false;
  }
  return true;
}

}  // namespace sos
