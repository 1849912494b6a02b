#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "vdw/counting/classifier.hpp"
#include "vdw/counting/ledger.hpp"
#include "vdw/polyarith/int_poly.hpp"

namespace vdw::counting {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

// delta in (0, 1/(2n-1)); Y > 0 is carried for reporting.
struct SieveParams {
  Rational delta;
  Rational Y = 1;
  static SieveParams defaults(unsigned n);  // delta = 1/(2n)
  void validate(unsigned n) const;
};

enum class SieveCase { kI, kII, kIII, kUnknownC };
std::string to_string(SieveCase c);

// Case of an irreducible f from the discriminant's Dedekind-certified valuations:
// C = prod of primes with known v_p > 0, D = prod p^v_p; unknownC if some p^2 | disc(f) is not p-maximal.
SieveCase sieve_case(const poly::MonicIntPoly& f, std::uint64_t H, const SieveParams& params);

// Primitive transitive groups of degree <= 5 other than S_n: C3, A4, C5, D5, F20, A5.
bool is_primitive_non_sn(const std::string& group);

struct EnumerateOptions {
  Mode mode = Mode::kExact;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  std::optional<SieveParams> sieve;             // fills caseHistogram when set (exact mode)
  std::optional<std::filesystem::path> checkpoint_dir;
};

struct EnumerateResult {
  CountLedger ledger;
  std::uint64_t computed = 0;  // sub-boxes classified in this call
  std::uint64_t loaded = 0;    // sub-boxes read from checkpoints
};

// Classifies every tuple of [-H, H]^n, one sub-box per value of a_1.
// Throws BudgetExceeded when (2H+1)^n > budget, checked before the degree.
EnumerateResult enumerate_box(unsigned n, std::uint64_t H, const EnumerateOptions& options = {});

// Exact E_n(H) for n <= 5, else the certified interval; value == lower == upper when exact.
struct EValue {
  bool exact = true;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};
EValue compute_E(unsigned n, std::uint64_t H, unsigned threads = 1, std::uint64_t budget = kDefaultBudget);

// N_n(G, H) for a transitive group of degree n <= 5.
std::uint64_t compute_N(unsigned n, std::uint64_t H, const std::string& group, unsigned threads = 1);

std::map<std::string, std::uint64_t> case_partition(unsigned n, std::uint64_t H, const SieveParams& params,
                                                    unsigned threads = 1);

// Checkpoint file for one sub-box: <dir>/n<n>_H<H>_a<a1>.json
std::filesystem::path checkpoint_path(const std::filesystem::path& dir, unsigned n, std::uint64_t H, long a1);

}  // namespace vdw::counting
