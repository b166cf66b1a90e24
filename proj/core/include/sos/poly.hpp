#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sos/integer.hpp"

namespace sos {

/// Dense univariate polynomial over Z or Q, coefficients low to high.
/// The coefficient vector never ends in a zero.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, int deg) {
    std::vector<T> c(static_cast<size_t>(deg) + 1, T(0));
    c[static_cast<size_t>(deg)] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : T(0);
  }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T eval(const T& at) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<T> r = c_;
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r = a.c_;
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

QPoly to_q(const ZPoly& p);
/// Returns (P, d) with P integral, d > 0 and p = P / d.
std::pair<ZPoly, Integer> clear_denominators(const QPoly& p);

/// Quotient and remainder over Q.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
/// Quotient and remainder over Z by a monic divisor.
std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b);
/// Exact division over Z; the caller guarantees b | a.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
/// True when b divides a in Z[x].
bool divides(const ZPoly& b, const ZPoly& a);

/// Monic gcd over Q (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// (g, s, t) with g = s*a + t*b, g monic.
std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b);

Integer content(const ZPoly& p);
/// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
ZPoly primitive_part(const QPoly& p);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
Rational resultant(const QPoly& a, const QPoly& b);
Integer discriminant(const ZPoly& f);

std::string to_string(const ZPoly& p, const std::string& var = "x");
std::string to_string(const QPoly& p, const std::string& var = "x");

}  // namespace sos
