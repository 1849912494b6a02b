#include "vdw/polyarith/dedekind.hpp"

#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"
#include "vdw/polyarith/resultant.hpp"

namespace vdw::poly {

namespace {

IntPoly lift(const PolyModP& f) {
  std::vector<BigInt> c;
  for (std::uint64_t x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

}  // namespace

bool dedekind_p_maximal(const MonicIntPoly& f, std::uint64_t p) {
  require_prime(p);
  const auto factors = factor_mod_p(PolyModP::from_monic(f, p));
  // f = g h mod p with g the radical and h the cofactor; maximal iff gcd(F, g, h) = 1, F = (f - g h)/p
  PolyModP gbar = PolyModP::constant(p, 1), hbar = PolyModP::constant(p, 1);
  bool ramified = false;
  for (const auto& fp : factors) {
    gbar = gbar * fp.factor;
    for (unsigned e = 1; e < fp.multiplicity; ++e) hbar = hbar * fp.factor;
    ramified = ramified || fp.multiplicity > 1;
  }
  if (!ramified) return true;
  const IntPoly diff = f.to_poly() - lift(gbar) * lift(hbar);
  const IntPoly big_f = diff.divexact(BigInt(static_cast<unsigned long>(p)));
  const PolyModP fbar = PolyModP::from_int(big_f, p);
  const PolyModP common = gcd(gcd(fbar, gbar), hbar);
  return common.degree() == 0;
}

std::optional<int> field_disc_valuation(const MonicIntPoly& f, std::uint64_t p, const BigInt& disc_f) {
  require_prime(p);
  require(disc_f != 0, ErrorCode::kInvalidArgument, "field discriminant of an inseparable polynomial");
  if (!dedekind_p_maximal(f, p)) return std::nullopt;
  return valuation(disc_f, BigInt(static_cast<unsigned long>(p)));
}

std::optional<int> field_disc_valuation(const MonicIntPoly& f, std::uint64_t p) {
  return field_disc_valuation(f, p, disc(f));
}

}  // namespace vdw::poly
