#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sos/fq_poly.hpp"

namespace sos {

class FFElem;

/// K = F_q(x), q odd.
class FunctionField {
 public:
  /// Throws UnsupportedField for even q or when q is not a prime power.
  static FunctionField rational(const Integer& q);
  explicit FunctionField(FqField base);

  const FqField& base() const { return F_; }
  const Integer& q() const { return F_.order(); }

  FFElem zero() const;
  FFElem one() const;
  FFElem x() const;
  FFElem constant(const FqField::Rep& c) const;
  FFElem from_poly(const FqPoly& p) const;
  /// Constant-field generator g (the class of g in F_p[g]/(modulus)).
  FFElem g() const;

  friend bool operator==(const FunctionField& a, const FunctionField& b) { return a.F_ == b.F_; }

 private:
  FqField F_;
};

/// num / den with gcd 1 and den monic.
class FFElem {
 public:
  FFElem(FunctionField K, FqPoly num, FqPoly den);

  const FunctionField& field() const { return K_; }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  FFElem operator-() const;
  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  FFElem inverse() const;
  FFElem pow(long e) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  FunctionField K_;
  FqPoly num_, den_;
};

/// A finite place (monic irreducible P) or the infinite place.
class PlaceFF {
 public:
  static PlaceFF finite(FqPoly P) { return PlaceFF(std::move(P)); }
  static PlaceFF infinity() { return PlaceFF(std::nullopt); }

  bool is_infinite() const { return !P_; }
  const FqPoly& poly() const { return *P_; }
  int degree() const { return P_ ? P_->degree() : 1; }
  /// q^degree.
  Integer residue_order(const FunctionField& K) const;
  std::string to_string(const FunctionField& K) const;

  friend bool operator==(const PlaceFF& a, const PlaceFF& b) { return a.P_ == b.P_; }

 private:
  explicit PlaceFF(std::optional<FqPoly> P) : P_(std::move(P)) {}
  std::optional<FqPoly> P_;
};

/// Residue class in F_q[t]/(modulus); modulus is P, or t for the infinite place.
struct FFResidue {
  FqField base;
  FqPoly modulus;
  FqPoly rep;

  Integer order() const;
  /// Euler criterion rep^((order - 1)/2) = 1.
  bool is_square() const;
};

long valuation_ff(const FFElem& a, const PlaceFF& pl);

/// Finite places in the support of a, then the infinite place if v_inf(a) != 0.
std::vector<PlaceFF> places_dividing(const FFElem& a);

/// Class of a * pi^(-v(a)) with pi = P or 1/x.
FFResidue residue_unit_ff(const FFElem& a, const PlaceFF& pl);

bool is_local_square_ff(const FFElem& a, const PlaceFF& pl);

/// Leading unit a square in F_q and every multiplicity even.
bool is_square_global_ff(const FFElem& a);

}  // namespace sos
