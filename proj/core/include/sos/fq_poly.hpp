#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sos/finite_field.hpp"

namespace sos {

/// Dense polynomial over a finite field; coefficients are FqField::Rep values
/// interpreted in a field supplied to each operation.
class FqPoly {
 public:
  using Rep = FqField::Rep;

  FqPoly() = default;
  explicit FqPoly(std::vector<Rep> c) : c_(std::move(c)) { trim(); }
  FqPoly(std::initializer_list<Rep> c) : c_(c) { trim(); }

  /// Integer coefficients reduced into the prime subfield of F.
  static FqPoly from_zpoly(const FqField& F, const ZPoly& p);
  static FqPoly constant(const Rep& c) { return FqPoly({c}); }
  static FqPoly x() { return FqPoly({Rep(), Rep::constant(1)}); }
  static FqPoly monomial(const Rep& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rep>& coeffs() const { return c_; }
  Rep coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rep();
  }
  const Rep& lead() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Rep::constant(1); }

  /// Prime-subfield coefficients as integers (only meaningful when every coefficient lies in F_p).
  ZPoly to_zpoly() const;

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const FqPoly& a, const FqPoly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rep> c_;
};

namespace fq {

FqPoly add(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FqField& F, const FqPoly& a, const FqField::Rep& s);
std::pair<FqPoly, FqPoly> divrem(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly rem(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FqField& F, const FqPoly& a);
FqPoly gcd(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly powmod(const FqField& F, const FqPoly& base, const Integer& e, const FqPoly& modulus);
FqPoly pow(const FqField& F, const FqPoly& base, unsigned e);
FqPoly derivative(const FqField& F, const FqPoly& a);
FqField::Rep eval(const FqField& F, const FqPoly& a, const FqField::Rep& at);
/// Multiplicity of the irreducible P in a (a nonzero).
int multiplicity(const FqField& F, const FqPoly& a, const FqPoly& P);
std::string to_string(const FqField& F, const FqPoly& a, const std::string& var = "x");

}  // namespace fq

struct FqFactorization {
  FqField::Rep unit;  // leading coefficient
  std::vector<std::pair<FqPoly, int>> factors;  // monic irreducible, ascending
};

/// Squarefree decomposition, distinct-degree and Cantor-Zassenhaus equal-degree
/// splitting. Randomness is seeded from a hash of f, so results are reproducible.
FqFactorization poly_factor_fq(const FqField& F, const FqPoly& f);

/// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for primes r | n.
bool is_irreducible_fq(const FqField& F, const FqPoly& f);

/// Distinct roots of f in F, ascending by FqField::index.
std::vector<FqField::Rep> roots_fq(const FqField& F, const FqPoly& f);

}  // namespace sos
