#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdw/galois/factor_z.hpp"
#include "vdw/polyarith/splitting_type.hpp"

namespace vdw::galois {

enum class VerdictStatus { kReducible, kExactGroup, kCertifiedSn, kCertifiedSubsetAn, kUnresolved };

std::string_view to_string(VerdictStatus status);

struct Evidence {
  std::uint64_t prime;
  std::vector<unsigned> cycle_type;
};

struct GaloisVerdict {
  VerdictStatus status = VerdictStatus::kUnresolved;
  std::string group;                   // exact or certified group name, empty otherwise
  std::uint64_t order = 0;             // group order when known
  std::vector<unsigned> factor_degrees;  // reducible verdicts
  std::vector<Evidence> evidence;
  std::string to_json() const;
};

// Transitive groups of degree <= 5 by name; S2 is accepted for C2.
struct GroupInfo {
  std::string name;
  unsigned degree;
  std::uint64_t order;
};
const std::vector<GroupInfo>& transitive_groups_upto5();
// Canonical name (C2 for S2); throws UnknownGroup.
std::string canonical_group_name(const std::string& name);
std::string sn_name(unsigned n);

// Exact Galois group of an irreducible f with 2 <= n <= 5.
GaloisVerdict galois_group_exact(const MonicIntPoly& f);
GaloisVerdict galois_group_exact(const MonicIntPoly& f, const BigInt& disc_f);

// Cycle types at ascending unramified primes; certifies S_n or the square-discriminant case.
GaloisVerdict sn_certificate(const MonicIntPoly& f, unsigned prime_budget = 100);

// Witness bits carried by one Frobenius cycle type (or ramified splitting type) for degree n.
namespace witness {
inline constexpr std::uint32_t kOdd = 1;           // odd permutation
inline constexpr std::uint32_t kTransposition = 2;  // a power is a transposition
inline constexpr std::uint32_t kBigPrimeCycle = 4;  // a power is a q-cycle, q prime > n/2
inline constexpr std::uint32_t kJordanCycle = 8;    // as above with q <= n - 3
inline constexpr std::uint32_t kThreeDivides = 16;  // element order divisible by 3
}  // namespace witness

std::uint32_t cycle_type_witness(const std::vector<unsigned>& cycle_type, unsigned n);
// Bit s set iff some sub-multiset of the factor degrees (with multiplicity) sums to s.
std::uint64_t degree_sum_mask(const poly::SplittingType& type);
// Whether transitive G with the accumulated witnesses must be S_n.
bool witnesses_force_sn(std::uint32_t bits, unsigned n);

// Quartic cubic resolvent y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
IntPoly quartic_resolvent(const MonicIntPoly& f);
// Sextic resolvent of a depressed quintic y^5 + p y^3 + q y^2 + r y + s.
IntPoly quintic_resolvent(const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& s);
// Depressed monic integer quintic 5^5 f((y - a_1) / 5) with the same splitting field.
MonicIntPoly depress_quintic(const MonicIntPoly& f);
// Startup check: the resolvent of x^5 - 2 has a rational root. Throws InvariantViolation.
void self_check_quintic_resolvent();

}  // namespace vdw::galois
