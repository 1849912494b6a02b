#include "vdw/polyarith/sieve.hpp"

#include "vdw/core/error.hpp"

namespace vdw::poly {

std::uint64_t monic_index(const PolyModP& f) {
  const int n = f.degree();
  std::uint64_t idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * f.p() + f[i];
  return idx;
}

PolyModP monic_from_index(std::uint64_t p, unsigned n, std::uint64_t index) {
  std::vector<std::uint64_t> c(n + 1);
  c[n] = 1;
  for (unsigned i = 0; i < n; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return PolyModP(p, std::move(c));
}

namespace {

std::uint64_t checked_power(std::uint64_t p, unsigned d, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= p;
    require(total <= cap, ErrorCode::kTooLarge, "p^d exceeds the enumeration cap");
  }
  return total;
}

}  // namespace

std::vector<PolyModP> enumerate_irreducibles(std::uint64_t p, unsigned d) {
  require_prime(p);
  require(d >= 1, ErrorCode::kInvalidArgument, "irreducible degree must be >= 1");
  const std::uint64_t total = checked_power(p, d, 10'000'000);
  if (d == 1) {
    std::vector<PolyModP> out;
    for (std::uint64_t a = 0; a < p; ++a) out.push_back(PolyModP(p, {a, 1}));
    return out;
  }
  // mark every product P * Q with P irreducible of degree e <= d/2
  std::vector<bool> reducible(total, false);
  for (unsigned e = 1; 2 * e <= d; ++e) {
    const auto small = enumerate_irreducibles(p, e);
    const std::uint64_t cofactors = checked_power(p, d - e, 10'000'000);
    for (const auto& factor : small) {
      for (std::uint64_t q = 0; q < cofactors; ++q) reducible[monic_index(factor * monic_from_index(p, d - e, q))] = true;
    }
  }
  std::vector<PolyModP> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!reducible[idx]) out.push_back(monic_from_index(p, d, idx));
  }
  return out;
}

std::uint64_t necklace_count(std::uint64_t p, unsigned d) {
  auto mobius = [](unsigned m) {
    int result = 1;
    for (unsigned q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) return 0;
        result = -result;
      }
    }
    return m > 1 ? -result : result;
  };
  long long sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long term = 1;
    for (unsigned i = 0; i < d / e; ++i) term *= static_cast<long long>(p);
    sum += mobius(e) * term;
  }
  return static_cast<std::uint64_t>(sum / d);
}

}  // namespace vdw::poly
