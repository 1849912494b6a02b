#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace vdw::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  std::string to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1);

// Completions of every prefix with index exactly k stay within q(k, n-k) (n-k)!.
SuiteResult prop33();
// power_sum_solution_count <= r! on `samples` admissible tuples per (p, r), p <= 13, r <= 3.
SuiteResult prop34(std::uint64_t seed, unsigned samples = 200);
// Residue tuples forced to a square discriminant mod p^2 have dDisc/da_n = 0 mod p and p | DD.
SuiteResult prop51();
// count_moved_ksubsets against (8 / 5k) C(m-1, k-1) y for products of y transpositions, m <= 10.
SuiteResult fmky();
// ind(g) / ind(g') > n / (3 r m) on product actions with m <= 5, k <= 2, r <= 2.
SuiteResult thm25();
// Transposition and 3-cycle criteria and the sqrt(n) index bound over the catalogue.
SuiteResult jordan();
// Height bracket on random polynomials and multiplicativity on random pairs at tolerance tol.
SuiteResult mahler(std::uint64_t seed, unsigned samples = 100'000, unsigned pairs = 10'000, double tol = 1e-6);
// Decay, main term and Parseval over sigma with deg <= n, n in {3, 4}, p in {3, 5, 7, 11}.
SuiteResult fourier();
// Exact quintic groups against S_n certificates and Frobenius cycle types.
SuiteResult galois(std::uint64_t seed, unsigned samples = 10'000);
// Subresultant against modular discriminants and the product formula.
SuiteResult disc(std::uint64_t seed, unsigned samples = 10'000);

}  // namespace vdw::verify
