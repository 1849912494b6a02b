#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/permgroup/group.hpp"

namespace vdw::perm {

struct CatalogueEntry {
  std::string name;
  PermGroup group;
  // Order forced by construction; checked against the closure where feasible.
  std::optional<BigInt> expected_order;
};

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned n);
// x -> a x + b over F_p.
PermGroup affine_group(unsigned p);
// Built from an 11-cycle and an element of order 4; self-checked on first use.
const PermGroup& mathieu11();

// Throws InvariantViolation unless |G| = 7920, G transitive and the ordered
// 4-tuple (1,2,3,4) has an orbit of size 11*10*9*8.
void self_check_mathieu11(const PermGroup& g);

// Constructed families of degree <= 30.
std::vector<CatalogueEntry> catalogue();

// Names: Sn, An, Cn, Dn, AGLp (also AGL(1,p)), M11, PA(m,k,r), Wr(m,r).
CatalogueEntry group_by_name(const std::string& name);

struct GroupSummary {
  std::string name;
  std::size_t degree = 0;
  std::size_t order = 0;
  bool transitive = false;
  bool primitive = false;
  std::size_t ind = 0;
  std::size_t min_moved = 0;
};

GroupSummary summarize(const std::string& name, const PermGroup& group, std::size_t cap = kDefaultClosureCap);
// {name, degree, order, transitive, primitive, ind, min_moved}
std::string to_json_line(const GroupSummary& summary);

}  // namespace vdw::perm
