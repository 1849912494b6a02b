#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "vdw/counting/classifier.hpp"

namespace vdw::counting {

inline constexpr int kFormatVersion = 1;

// Counts over a union of sub-boxes {a_1 = c} of [-H, H]^n.
// reducible + sum(perGroup) + certifiedSn + squareDisc + unresolved = total - degenerate in interval mode;
// in exact mode perGroup covers every irreducible polynomial, and squareDisc/certifiedSn restate
// the groups inside A_n and the S_n count.
struct CountLedger {
  unsigned n = 0;
  std::uint64_t H = 0;
  Mode mode = Mode::kExact;
  std::uint64_t total = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t reducible = 0;
  std::map<std::string, std::uint64_t> per_group;
  std::uint64_t square_disc = 0;
  std::uint64_t certified_sn = 0;
  std::uint64_t unresolved = 0;
  std::map<std::string, std::uint64_t> case_histogram;
  std::uint64_t checksum = 0;  // sum of per-sub-box digests mod 2^64
  std::uint64_t sub_boxes = 0;

  void add(const CountLedger& other);
  // Exact E_n(H); exact mode only.
  std::uint64_t e_exact() const;
  // [degenerate + reducible + squareDisc, total - certifiedSn]
  std::uint64_t e_lower() const;
  std::uint64_t e_upper() const;
  // Throws InvariantViolation when the partition identity fails.
  void check_invariants() const;
};

bool operator==(const CountLedger& a, const CountLedger& b);

// Keys in fixed order; checksum as 16 hex digits.
std::string to_json(const CountLedger& ledger);
CountLedger ledger_from_json(const std::string& text);

}  // namespace vdw::counting
