#pragma once

#include <utility>
#include <vector>

#include "vdw/polyarith/int_poly.hpp"

namespace vdw::galois {

using poly::IntPoly;
using poly::MonicIntPoly;

struct IntFactor {
  MonicIntPoly factor;
  unsigned multiplicity;
};

// Monic irreducible factors over Z with multiplicity; product reproduces f.
// Sorted by degree, then coefficients.
std::vector<IntFactor> factor_over_Z(const MonicIntPoly& f);

// Irreducible factors of a monic squarefree polynomial (degree >= 1).
std::vector<IntPoly> factor_squarefree_monic(const IntPoly& g);

bool is_irreducible_over_Z(const MonicIntPoly& f);

}  // namespace vdw::galois
