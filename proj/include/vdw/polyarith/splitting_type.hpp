#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/polyarith/int_poly.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"

namespace vdw::poly {

struct SplitPart {
  unsigned degree;        // f_i
  unsigned multiplicity;  // e_i
  friend auto operator<=>(const SplitPart&, const SplitPart&) = default;
};

// Multiset of (f_i, e_i); parts kept sorted by degree then multiplicity, both descending.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<SplitPart> parts);
  // Grammar: part ("\s+" part)*, part := f ["^" e], f, e >= 1. Throws InvalidArgument.
  static SplittingType parse(std::string_view text);

  const std::vector<SplitPart>& parts() const { return parts_; }
  unsigned deg() const;
  unsigned ind() const;
  unsigned len() const;
  // (prod f_i) * prod over groups of identical parts of (group size)!
  BigInt aut_count() const;
  bool is_unramified() const;  // every e_i = 1
  // Cycle type (f_i with multiplicity), descending; valid only when unramified.
  std::vector<unsigned> cycle_type() const;
  std::string to_string() const;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType& a, const SplittingType& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<SplitPart> parts_;
};

SplittingType splitting_type(const std::vector<FactorPower>& factors);
SplittingType splitting_type(const MonicIntPoly& f, std::uint64_t p);
// Equals splitting_type(f, p).ind(); uses deg gcd(f, f') when p > n.
unsigned index_mod_p(const MonicIntPoly& f, std::uint64_t p);
unsigned index_mod_p(const PolyModP& f);

}  // namespace vdw::poly
