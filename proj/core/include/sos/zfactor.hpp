#pragma once

#include <utility>
#include <vector>

#include "sos/poly.hpp"

namespace sos {

struct ZFactorization {
  Integer content;  // carries the sign of the leading coefficient
  std::vector<std::pair<ZPoly, int>> factors;  // primitive, irreducible, positive leading coefficient
};

/// Factorization over Z: squarefree decomposition, factorization modulo a good
/// prime, Hensel lifting past a Mignotte bound and subset recombination.
ZFactorization poly_factor_z(const ZPoly& f);

bool is_irreducible_z(const ZPoly& f);

}  // namespace sos
