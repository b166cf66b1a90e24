#pragma once

#include <optional>

#include "sos/number_field.hpp"
#include "sos/prime_ideal.hpp"

namespace sos {

struct SquareTest {
  bool is_square = false;
  std::optional<NFElem> root;            // root * root == a, checked exactly
  std::optional<PrimeIdealNF> witness;   // a is not a square in the completion at witness
};

/// Decides a in K*^2. Nonsquares are certified by an odd prime at which a is a
/// unit with nonsquare residue; squares by a root found through p-adic lifting
/// and rational reconstruction, verified by multiplication.
SquareTest is_square_global(const NFElem& a);

/// s(K) = 1.
bool is_minus_one_square(const NumberField& K);

}  // namespace sos
