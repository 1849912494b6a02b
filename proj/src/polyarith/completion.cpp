#include "vdw/polyarith/completion.hpp"

#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"
#include "vdw/polyarith/resultant.hpp"
#include "vdw/polyarith/splitting_type.hpp"

namespace vdw::poly {

namespace {

PolyModP monic_from_residues(std::uint64_t p, const std::vector<std::uint64_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> c(n + 1);
  c[n] = 1;
  for (std::size_t i = 0; i < n; ++i) c[n - 1 - i] = a[i] % p;
  return PolyModP(p, std::move(c));
}

void require_small_characteristic_ok(std::uint64_t p, unsigned n) {
  require_prime(p);
  require(p > n, ErrorCode::kCharacteristicTooSmall, "characteristic must exceed the degree");
}

}  // namespace

std::uint64_t count_index_completions(std::uint64_t p, unsigned n, unsigned k, const std::vector<std::uint64_t>& prefix) {
  require_small_characteristic_ok(p, n);
  require(k >= 1 && k + 1 <= n, ErrorCode::kInvalidArgument, "index target must satisfy 1 <= k <= n-1");
  require(prefix.size() == n - k, ErrorCode::kInvalidArgument, "prefix must have n - k entries");
  std::vector<std::uint64_t> a(prefix);
  a.resize(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (index_mod_p(monic_from_residues(p, a)) == k) ++count;
    std::size_t i = n;
    while (i > n - k && ++a[i - 1] == p) {
      a[i - 1] = 0;
      --i;
    }
    if (i == n - k) break;
  }
  return count;
}

std::vector<std::uint8_t> index_table(std::uint64_t p, unsigned n) {
  require_small_characteristic_ok(p, n);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= p;
    require(total <= 100'000'000, ErrorCode::kTooLarge, "index table too large");
  }
  std::vector<std::uint8_t> out(total);
  std::vector<std::uint64_t> a(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    out[idx] = static_cast<std::uint8_t>(index_mod_p(monic_from_residues(p, a)));
    for (std::size_t i = n; i-- > 0;) {
      if (++a[i] < p) break;
      a[i] = 0;
    }
  }
  return out;
}

BigInt partition_bound(unsigned k, unsigned r) {
  require(r >= 1, ErrorCode::kInvalidArgument, "partition bound needs r >= 1");
  // q[j][m]: partitions of m into parts of size <= j, equal to partitions into at most j parts
  std::vector<BigInt> q(k + 1, 0);
  q[0] = 1;
  for (unsigned part = 1; part <= r; ++part) {
    for (unsigned m = part; m <= k; ++m) q[m] += q[m - part];
  }
  return q[k] * factorial(r);
}

bool has_zero_subset_sum(std::uint64_t p, const std::vector<std::uint64_t>& weights) {
  const std::size_t r = weights.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) s = (s + weights[i] % p) % p;
    }
    if (s == 0) return true;
  }
  return false;
}

std::uint64_t power_sum_solution_count(std::uint64_t p, const std::vector<std::uint64_t>& weights,
                                       const std::vector<std::uint64_t>& targets) {
  require_prime(p);
  const std::size_t r = weights.size();
  require(r >= 1 && r <= 5 && targets.size() == r, ErrorCode::kInvalidArgument, "need 1 <= r <= 5 weights and targets");
  require(p <= 31, ErrorCode::kTooLarge, "power-sum scan limited to p <= 31");
  require(!has_zero_subset_sum(p, weights), ErrorCode::kSubsetSumZero, "a nonempty subset of the weights sums to 0");
  std::vector<std::uint64_t> x(r, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t j = 1; j <= r && ok; ++j) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s = (s + weights[i] % p * vdw::pow_mod(x[i], j, p)) % p;
      ok = s == targets[j - 1] % p;
    }
    if (ok) ++count;
    std::size_t i = r;
    while (i > 0 && ++x[i - 1] == p) {
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return count;
}

bool mod_p2_forced_test(std::uint64_t p, const std::vector<std::uint64_t>& residues) {
  require_prime(p);
  require(!residues.empty(), ErrorCode::kInvalidArgument, "need at least one coefficient");
  const std::uint64_t p2 = p * p;
  std::vector<BigInt> a;
  for (std::uint64_t r : residues) a.emplace_back(static_cast<unsigned long>(r % p2));
  const BigInt base = a.back();
  for (std::uint64_t t = 0; t < p; ++t) {
    a.back() = base + BigInt(static_cast<unsigned long>(p * t));
    if (mod_u64(disc(MonicIntPoly(a)), p2) != 0) return false;
  }
  return true;
}

}  // namespace vdw::poly
