#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sos/poly.hpp"

namespace sos {

class NFElem;

/// A real root of the defining polynomial, isolated in (lo, hi]; for a
/// degree-one field lo == hi is the root itself.
struct RealEmbedding {
  int index = 0;
  Rational lo;
  Rational hi;
};

/// K = Q[x]/(f) with f monic, integral and irreducible. An arbitrary
/// irreducible input polynomial h over Q is normalized by theta = scale * alpha,
/// alpha a root of h.
class NumberField {
 public:
  static NumberField from_polynomial(const QPoly& input);
  static NumberField from_polynomial(const ZPoly& input) { return from_polynomial(to_q(input)); }

  const ZPoly& polynomial() const { return d_->f; }
  int degree() const { return d_->f.degree(); }
  const Integer& discriminant() const { return d_->disc; }
  const QPoly& input_polynomial() const { return d_->input; }
  const Integer& scale() const { return d_->scale; }
  bool was_normalized() const { return d_->normalized; }
  const std::vector<RealEmbedding>& real_embeddings() const { return d_->embeddings; }

  NFElem zero() const;
  NFElem one() const;
  NFElem theta() const;
  NFElem from_rational(const Rational& r) const;
  NFElem from_coords(std::vector<Rational> coords) const;
  /// p(theta) reduced modulo f.
  NFElem from_poly(const QPoly& p) const;
  /// The root alpha of the input polynomial, i.e. theta / scale.
  NFElem input_generator() const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->f == b.d_->f;
  }

 private:
  struct Data {
    ZPoly f;
    QPoly input;
    Integer scale;
    bool normalized = false;
    Integer disc;
    std::vector<RealEmbedding> embeddings;
  };
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Element of K in power-basis coordinates.
class NFElem {
 public:
  NFElem(NumberField K, std::vector<Rational> coords);

  const NumberField& field() const { return K_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  QPoly to_poly() const { return QPoly(c_); }

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const Rational& s, const NFElem& a) {
    std::vector<Rational> r = a.c_;
    for (auto& v : r) v *= s;
    return NFElem(a.K_, std::move(r));
  }
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.c_ == b.c_; }
  NFElem inverse() const;
  NFElem pow(long e) const;

  /// N_{K/Q}(a) = Res(f, a(x)).
  Rational norm() const;
  /// (b, c) with b integral coordinates, c > 0 and a = b / c.
  std::pair<std::vector<Integer>, Integer> denominator_clear() const;

  /// Coordinates printed as a polynomial in `var` (theta basis).
  std::string to_string(const std::string& var = "theta") const;
  /// Printed as a polynomial in the input generator alpha = theta / scale.
  std::string to_input_string(const std::string& var = "a") const;

 private:
  NumberField K_;
  std::vector<Rational> c_;
};

NFElem nf_add(const NFElem& a, const NFElem& b);
NFElem nf_mul(const NFElem& a, const NFElem& b);
NFElem nf_inv(const NFElem& a);
Rational nf_norm(const NFElem& a);
std::pair<std::vector<Integer>, Integer> nf_denominator_clear(const NFElem& a);

// --- real places ----------------------------------------------------------

/// Number of distinct real roots of a squarefree f, by Sturm's theorem.
int sturm_root_count(const QPoly& f);
/// Real roots of f isolated with Sturm sequences and dyadic bisection.
std::vector<RealEmbedding> real_embeddings(const NumberField& K);
/// Sign of rho(a), a != 0.
int sign_at(const NFElem& a, const RealEmbedding& rho);
/// True iff a is positive under every real embedding (vacuous when none).
bool is_totally_positive(const NFElem& a);

}  // namespace sos
