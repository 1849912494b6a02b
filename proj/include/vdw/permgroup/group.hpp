#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "vdw/permgroup/permutation.hpp"

namespace vdw::perm {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

// Group given by generators. The element closure is built at most once per
// cap and shared by copies; it is immutable after construction.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // All elements, identity first. Throws GroupTooLarge beyond cap.
  const std::vector<Permutation>& elements(std::size_t cap = kDefaultClosureCap) const;
  std::size_t order(std::size_t cap = kDefaultClosureCap) const { return elements(cap).size(); }

  bool is_transitive() const;
  // Throws NotTransitive.
  bool is_primitive() const;
  // Throws TrivialGroup, GroupTooLarge.
  std::size_t ind(std::size_t cap = kDefaultClosureCap) const;
  std::size_t min_moved_points(std::size_t cap = kDefaultClosureCap) const;
  std::set<std::vector<std::size_t>> cycle_types(std::size_t cap = kDefaultClosureCap) const;
  bool contains(const Permutation& g, std::size_t cap = kDefaultClosureCap) const;

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Orbit of letter 0 under the generators.
std::vector<Letter> orbit_of(const PermGroup& group, Letter start);

}  // namespace vdw::perm
