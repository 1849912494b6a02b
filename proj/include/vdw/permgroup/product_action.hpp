#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "vdw/permgroup/group.hpp"

namespace vdw::perm {

inline constexpr std::size_t kDefaultDegreeCap = 100'000;

// S_m wr S_r acting on r-tuples of k-subsets of {1..m}.
struct ProductActionSpec {
  unsigned m = 0;
  unsigned k = 0;
  unsigned r = 0;

  // C(m,k)^r; validates m >= 3, 1 <= k < m/2, r >= 1.
  std::size_t degree() const;
  bool non_elemental() const { return r > 1 || k > 1; }
};

// Element (g_1..g_r; h) of S_m wr S_r. It sends coordinate i to coordinate
// h(i), applying g_i on the way.
struct WreathElement {
  std::vector<Permutation> base;
  Permutation top;

  bool is_identity() const;
};

// k-subsets of {0..m-1} as bitmasks in lexicographic order of sorted elements.
std::vector<std::uint64_t> ksubsets_lex(unsigned m, unsigned k);

PermGroup wreath_product_action(const ProductActionSpec& spec, std::size_t degree_cap = kDefaultDegreeCap);
// S_m wr S_r on r blocks of m letters; letter (block b, point j) has index b*m + j.
PermGroup imprimitive_wreath_action(unsigned m, unsigned r);

Permutation product_action_image(const ProductActionSpec& spec, const WreathElement& element);
Permutation imprimitive_action_image(unsigned m, unsigned r, const WreathElement& element);

// (ind g in the product action, ind g' in the imprimitive action). Throws IdentityElement.
std::pair<std::size_t, std::size_t> blow_down_index_ratio(const ProductActionSpec& spec,
                                                          const WreathElement& element);

// Number of k-subsets S with sigma(S) != S; needs 1 <= k < m/2.
std::size_t count_moved_ksubsets(const Permutation& sigma, unsigned k);

}  // namespace vdw::perm
