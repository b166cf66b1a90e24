#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sos/poly.hpp"

namespace sos {

/// F_q = F_p[g]/(modulus). Elements are reduced residues stored as ZPoly
/// with coefficients in [0, p). Copies share the same immutable data.
class FqField {
 public:
  using Rep = ZPoly;

  static FqField prime(const Integer& p);
  /// F_{p^k} with the lexicographically smallest monic irreducible modulus of
  /// degree k (coefficient tuples compared from the top coefficient down).
  static FqField extension(const Integer& p, int k);
  /// F_p[g]/(modulus); modulus must be monic and irreducible mod p.
  static FqField with_modulus(const Integer& p, const ZPoly& modulus);

  const Integer& characteristic() const { return d_->p; }
  int degree() const { return d_->k; }
  const Integer& order() const { return d_->q; }
  const ZPoly& modulus() const { return d_->modulus; }

  Rep zero() const { return Rep(); }
  Rep one() const { return Rep::constant(1); }
  Rep from_integer(const Integer& n) const;
  /// Class of the generator g (for k = 1 the residue of 0).
  Rep generator() const;

  Rep add(const Rep& a, const Rep& b) const;
  Rep sub(const Rep& a, const Rep& b) const;
  Rep neg(const Rep& a) const;
  Rep mul(const Rep& a, const Rep& b) const;
  Rep inv(const Rep& a) const;
  Rep div(const Rep& a, const Rep& b) const { return mul(a, inv(b)); }
  Rep pow(const Rep& a, const Integer& e) const;
  Rep reduce(const ZPoly& a) const;

  /// Euler criterion a^((q-1)/2) = 1; a nonzero, odd characteristic.
  bool is_square(const Rep& a) const;
  /// Some square root of a, or nothing when a is a nonsquare (odd characteristic).
  std::optional<Rep> sqrt(const Rep& a) const;

  /// Bijection {0..q-1} <-> F_q via base-p digits of the coefficient vector.
  Rep element(const Integer& index) const;
  Integer index(const Rep& a) const;

  std::string to_string(const Rep& a, const std::string& var = "g") const;

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

 private:
  struct Data {
    Integer p;
    int k;
    Integer q;
    ZPoly modulus;
  };
  explicit FqField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// An element together with its field.
struct FqElem {
  FqField field;
  FqField::Rep rep;

  bool is_zero() const { return rep.is_zero(); }
  friend FqElem operator+(const FqElem& a, const FqElem& b) { return {a.field, a.field.add(a.rep, b.rep)}; }
  friend FqElem operator-(const FqElem& a, const FqElem& b) { return {a.field, a.field.sub(a.rep, b.rep)}; }
  friend FqElem operator*(const FqElem& a, const FqElem& b) { return {a.field, a.field.mul(a.rep, b.rep)}; }
  friend bool operator==(const FqElem& a, const FqElem& b) { return a.rep == b.rep; }
  std::string to_string() const { return field.to_string(rep); }
};

/// Euler-criterion square test; rejects zero and characteristic 2.
bool is_square_fq(const FqElem& u);

}  // namespace sos
