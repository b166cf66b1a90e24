#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sos/dyadic.hpp"
#include "sos/function_field.hpp"
#include "sos/prime_ideal.hpp"

namespace sos {

/// Lengths are 1..4 or kInfiniteLength (not a sum of squares).
constexpr int kInfiniteLength = std::numeric_limits<int>::max();
std::string length_to_string(int length);

struct LocalLength {
  std::string place;
  int e = 1;
  int f = 1;
  int local_length = 0;
};

struct LengthCertificate {
  std::vector<LocalLength> entries;
  /// Nonsquare sum of squares, so the length is at least 2.
  bool baseline_two = false;
  /// Real embedding at which a is negative.
  std::optional<int> real_witness;
  /// a = root^2 (number fields).
  std::optional<NFElem> root;
};

struct LengthResult {
  int length = 0;
  LengthCertificate certificate;
};

struct LengthOptions {
  /// Starting dyadic precision; 0 selects max(16, 4e + 6).
  unsigned dyadic_precision = 0;
};

int local_length_nondyadic(const NFElem& a, const PrimeIdealNF& P);
int local_length_nondyadic(const FFElem& a, const PlaceFF& pl);
int local_length_dyadic(const NFElem& a, const DyadicCompletion& D);
int local_length_real(const NFElem& a, const RealEmbedding& rho);

LengthResult length_nf(const NFElem& a, const LengthOptions& opts = {});
LengthResult length_ff(const FFElem& a);

/// Names used in certificates.
std::string place_name(const PrimeIdealNF& P);
std::string place_name(const RealEmbedding& rho);

int pythagoras_number_nf(const NumberField& K);
int pythagoras_number_ff(const FunctionField& K);

struct PythagorasOptions {
  /// Largest rational prime tried by the p = 3 mod 4 scan and by the fallback.
  Integer prime_scan_bound = 100000;
  /// Multipliers k tried in the fallback pi + k p^2.
  long fallback_bound = 100000;
  unsigned dyadic_precision = 0;
};

struct PythagorasResultNF {
  int number = 0;
  NFElem element;
  LengthResult verification;
  std::vector<std::string> notes;
};

struct PythagorasResultFF {
  int number = 0;
  FFElem element;
  LengthResult verification;
};

PythagorasResultNF pythagoras_element_nf(const NumberField& K, const PythagorasOptions& opts = {});
PythagorasResultFF pythagoras_element_ff(const FunctionField& K);

/// Monic irreducibles of degree m over F in index order of their lower coefficients.
std::vector<FqPoly> monic_irreducibles(const FqField& F, int m, std::size_t limit = 0);

}  // namespace sos
