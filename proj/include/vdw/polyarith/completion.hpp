#pragma once

#include <cstdint>
#include <vector>

#include "vdw/core/numtheory.hpp"

namespace vdw::poly {

// Monic polynomials over F_p with exactly index k whose leading n - k coefficients are `prefix`.
// Requires p > n and 1 <= k <= n - 1.
std::uint64_t count_index_completions(std::uint64_t p, unsigned n, unsigned k, const std::vector<std::uint64_t>& prefix);

// index_mod_p of every monic degree-n polynomial over F_p; entry sum_i a_i p^(n-i), a_1 most significant.
std::vector<std::uint8_t> index_table(std::uint64_t p, unsigned n);

// q(k, r) * r!, q(k, r) = partitions of k into at most r parts.
BigInt partition_bound(unsigned k, unsigned r);

// #{x in F_p^r : sum_i m_i x_i^j = c_j for j = 1..r}. No nonempty subset of the weights may sum to 0.
std::uint64_t power_sum_solution_count(std::uint64_t p, const std::vector<std::uint64_t>& weights,
                                       const std::vector<std::uint64_t>& targets);
bool has_zero_subset_sum(std::uint64_t p, const std::vector<std::uint64_t>& weights);

// True iff Disc(f + p t) == 0 mod p^2 for every t in [0, p), shifting only a_n; residues are mod p^2.
bool mod_p2_forced_test(std::uint64_t p, const std::vector<std::uint64_t>& residues);

}  // namespace vdw::poly
