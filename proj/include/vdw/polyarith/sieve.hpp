#pragma once

#include <cstdint>
#include <vector>

#include "vdw/polyarith/poly_mod_p.hpp"

namespace vdw::poly {

// Index of a monic degree-n polynomial over F_p: sum a_i p^(n-i), a_1 most significant.
std::uint64_t monic_index(const PolyModP& f);
PolyModP monic_from_index(std::uint64_t p, unsigned n, std::uint64_t index);

// All monic irreducibles of degree d over F_p, ascending by monic_index; requires p^d <= 10^7.
std::vector<PolyModP> enumerate_irreducibles(std::uint64_t p, unsigned d);

// (1/d) sum_{e | d} mu(e) p^(d/e)
std::uint64_t necklace_count(std::uint64_t p, unsigned d);

}  // namespace vdw::poly
