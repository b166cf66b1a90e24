#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sos/finite_field.hpp"
#include "sos/number_field.hpp"

namespace sos {

/// A prime of O_K above p, given by a Kummer factor gbar of f mod p. Only
/// constructed where Z[theta] is p-maximal, so Z[theta]_(p) = (O_K)_(p).
class PrimeIdealNF {
 public:
  const NumberField& field() const { return d_->K; }
  const Integer& p() const { return d_->p; }
  /// Monic irreducible factor of f mod p, coefficients in [0, p).
  const ZPoly& gbar() const { return d_->gbar; }
  int e() const { return d_->e; }
  int f_deg() const { return d_->f_deg; }
  int degree() const { return d_->e * d_->f_deg; }
  /// Position among the primes above p (factors sorted ascending).
  int index() const { return d_->index; }
  bool is_dyadic() const { return d_->p == 2; }

  const NFElem& pi() const { return d_->pi; }
  const NFElem& tau() const { return d_->tau; }
  /// Lift of (f mod p) / gbar; tau = h(theta) / p.
  const ZPoly& h() const { return d_->h; }
  /// Residue field F_p[x]/(gbar), theta mapping to the class of x.
  const FqField& residue_field() const { return d_->residue; }
  Integer residue_order() const { return d_->residue.order(); }

  /// "(p, gbar(var))", or "(p)" when gbar = x and p generates the prime alone.
  std::string to_string(const std::string& var = "theta") const;

  friend bool operator==(const PrimeIdealNF& a, const PrimeIdealNF& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->gbar == b.d_->gbar && a.d_->K == b.d_->K);
  }

 private:
  friend std::vector<PrimeIdealNF> split_prime(const NumberField& K, const Integer& p);
  struct Data {
    NumberField K;
    Integer p;
    ZPoly gbar;
    int e = 0;
    int f_deg = 0;
    int index = 0;
    ZPoly h;
    NFElem pi;
    NFElem tau;
    FqField residue;
    // residue of h^e / p^(e-1), the unit part of p relative to 1/tau
    FqField::Rep p_unit;
  };
  explicit PrimeIdealNF(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend long valuation(const NFElem& a, const PrimeIdealNF& P);
  friend FqElem residue_of_unit_part(const NFElem& a, const PrimeIdealNF& P);
};

/// Dedekind criterion for p-maximality of Z[theta].
bool dedekind_is_pmaximal(const NumberField& K, const Integer& p);

/// Primes above p via Kummer-Dedekind; throws NotPMaximal when Z[theta] is
/// not p-maximal.
std::vector<PrimeIdealNF> split_prime(const NumberField& K, const Integer& p);

/// Exact v_P(a), a != 0.
long valuation(const NFElem& a, const PrimeIdealNF& P);

/// Class of a * tau^v(a) in the residue field.
FqElem residue_of_unit_part(const NFElem& a, const PrimeIdealNF& P);

/// v(a) even and the unit residue a square; P non-dyadic.
bool is_local_square_nondyadic(const NFElem& a, const PrimeIdealNF& P);

/// Tame symbol (a, b)_P for non-dyadic P.
int hilbert_nondyadic(const NFElem& a, const NFElem& b, const PrimeIdealNF& P);

/// -1 iff both a and b are negative under rho.
int hilbert_real(const NFElem& a, const NFElem& b, const RealEmbedding& rho);

}  // namespace sos
