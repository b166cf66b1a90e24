#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sos/prime_ideal.hpp"

namespace sos {

/// K_d = Z_2[x]/(F) ⊗ Q for a prime d above 2, with F the Hensel lift of the
/// factor gbar^e of f, known modulo 2^N. Valid because Z[theta] is 2-maximal,
/// so the power basis is a local integral basis.
///
/// Unit parts are taken relative to the local uniformizer 2/h, h the lift of
/// gbar^(e-1).
class DyadicCompletion {
 public:
  const PrimeIdealNF& prime() const { return d_->P; }
  unsigned precision() const { return d_->N; }
  Integer modulus() const { return pow(Integer(2), d_->N); }
  /// Monic, coefficients in [0, 2^N), F = gbar^e mod 2.
  const ZPoly& F() const { return d_->lifted[static_cast<size_t>(d_->P.index())]; }
  /// Lifts of every grouped factor gbar_i^e_i of f, in prime index order.
  const std::vector<ZPoly>& lifted_factors() const { return d_->lifted; }
  int e() const { return d_->P.e(); }
  int f_deg() const { return d_->P.f_deg(); }
  int d() const { return d_->P.degree(); }

  /// Same prime at a different precision.
  DyadicCompletion with_precision(unsigned N) const;

  const ZPoly& h() const { return d_->h; }
  /// Unit part of 2, h^e / 2^(e-1), and its inverse.
  const ZPoly& two_unit() const { return d_->w; }
  const ZPoly& two_unit_inv() const { return d_->w_inv; }
  /// Whether the unit u is congruent to a square mod 8O, which decides
  /// squareness since 8O lies inside 4p.
  bool is_unit_square_mod8(const ZPoly& u) const;

 private:
  friend DyadicCompletion dyadic_completion(const PrimeIdealNF& P, unsigned N);
  struct Data {
    PrimeIdealNF P;
    unsigned N;
    std::vector<ZPoly> lifted;
    ZPoly h;
    ZPoly w;
    ZPoly w_inv;
    // unit squares mod 8, coefficients read as base-8 digits; sorted
    std::shared_ptr<const std::vector<std::uint64_t>> squares8;
  };
  explicit DyadicCompletion(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Default starting precision max(16, 4e + 6).
unsigned default_dyadic_precision(const PrimeIdealNF& P);

/// Completion at a dyadic prime; N = 0 selects the default, smaller values are
/// raised to 4e + 6. Throws InstanceTooLarge when [K_d : Q_2] > 10.
DyadicCompletion dyadic_completion(const PrimeIdealNF& P, unsigned N = 0);

/// Image of a in K_d: a = (2/h)^val * unit, unit known modulo 2^prec.
struct LocalElem {
  long val = 0;
  ZPoly unit;
  unsigned prec = 0;
};

/// Exact valuation and unit part; precision is raised internally as needed.
LocalElem embed_dyadic(const NFElem& a, const DyadicCompletion& D);

bool is_local_square_dyadic(const NFElem& a, const DyadicCompletion& D);

/// a in D(<1,1>), i.e. (-1, a)_d = 1.
bool sum_of_two_squares_dyadic(const NFElem& a, const DyadicCompletion& D);

/// (-1, -1)_d = (-1)^[K_d : Q_2].
int minus_one_minus_one_dyadic(const DyadicCompletion& D);

}  // namespace sos
