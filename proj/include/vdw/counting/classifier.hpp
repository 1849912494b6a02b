#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/polyarith/int_poly.hpp"

namespace vdw::counting {

enum class Mode { kExact, kInterval };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Exact mode yields degenerate, reducible or a group; interval mode replaces the group
// by certifiedSn, squareDisc or unresolved.
enum class Kind : std::uint8_t { kDegenerate, kReducible, kGroup, kCertifiedSn, kSquareDisc, kUnresolved };

struct Classification {
  Kind kind = Kind::kUnresolved;
  std::uint8_t group = 0;  // index into Classifier::group_names() for kGroup
  std::uint8_t code() const { return static_cast<std::uint8_t>(static_cast<unsigned>(kind) * 16 + group); }
};

// Frobenius data of every monic degree-n polynomial over F_p, indexed by sum a_i p^(n-i).
struct PrimeTable {
  struct TypeInfo {
    std::uint32_t witness_bits;  // zero for ramified types
    std::uint64_t degree_mask;
  };
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::uint16_t> type_of;
  std::vector<TypeInfo> types;
};

// Built once per (p, n) and shared; safe to call concurrently.
const PrimeTable& prime_table(std::uint64_t p, unsigned n);
// Primes whose tables the classifier consults for degree n, ascending.
std::vector<std::uint64_t> table_primes(unsigned n);

class Classifier {
 public:
  // Requires 1 <= n <= 5 in exact mode and 1 <= n <= 7 in interval mode.
  Classifier(unsigned n, std::uint64_t H, Mode mode);

  unsigned degree() const { return n_; }
  Mode mode() const { return mode_; }
  const std::vector<std::string>& group_names() const { return group_names_; }
  std::uint8_t sn_group() const { return sn_group_; }

  // a[0..n-1] = (a_1..a_n), each in [-H, H].
  Classification classify(const long* a) const;
  // Full path without the table shortcut.
  Classification classify_exact(const poly::MonicIntPoly& f) const;

 private:
  struct PrimeSlot {
    const PrimeTable* table;
    std::vector<std::uint32_t> contrib;  // [i * width + (a + H)] = (a mod p) p^(n-1-i)
  };
  std::optional<Classification> fast_path(const long* a) const;

  unsigned n_;
  std::uint64_t H_;
  Mode mode_;
  std::vector<std::string> group_names_;
  std::uint8_t sn_group_ = 0;
  std::vector<PrimeSlot> slots_;
};

}  // namespace vdw::counting
