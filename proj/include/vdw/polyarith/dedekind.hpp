#pragma once

#include <cstdint>
#include <optional>

#include "vdw/polyarith/int_poly.hpp"

namespace vdw::poly {

// Dedekind's criterion for Z[x]/(f) at p; f is assumed irreducible over Q.
bool dedekind_p_maximal(const MonicIntPoly& f, std::uint64_t p);

// v_p of the field discriminant when Z[x]/(f) is p-maximal, otherwise nullopt.
std::optional<int> field_disc_valuation(const MonicIntPoly& f, std::uint64_t p);
std::optional<int> field_disc_valuation(const MonicIntPoly& f, std::uint64_t p, const BigInt& disc_f);

}  // namespace vdw::poly
