#include "vdw/counting/classifier.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "vdw/core/error.hpp"
#include "vdw/galois/factor_z.hpp"
#include "vdw/galois/galois.hpp"
#include "vdw/polyarith/resultant.hpp"
#include "vdw/polyarith/sieve.hpp"
#include "vdw/polyarith/splitting_type.hpp"

namespace vdw::counting {

std::string to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "interval"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::kExact;
  if (text == "interval") return Mode::kInterval;
  fail(ErrorCode::kInvalidArgument, "mode must be 'exact' or 'interval', got '" + text + "'");
}

namespace {

using poly::PolyModP;
using poly::SplitPart;
using poly::SplittingType;

std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Every monic degree-n polynomial is visited once as a product of distinct irreducibles
// taken in increasing (degree, position) order with multiplicities.
class TableBuilder {
 public:
  TableBuilder(PrimeTable& table) : t_(table) {
    for (unsigned d = 1; d <= t_.n; ++d) {
      auto& list = irreducibles_.emplace_back();
      for (const auto& f : poly::enumerate_irreducibles(t_.p, d)) list.push_back(f.coeffs());
    }
    std::uint64_t size = 1;
    for (unsigned i = 0; i < t_.n; ++i) size *= t_.p;
    t_.type_of.assign(size, 0);
  }

  void run() {
    std::vector<SplitPart> parts;
    recurse({1}, 0, 1, 0, parts);
  }

 private:
  void recurse(const std::vector<std::uint64_t>& product, unsigned deg, unsigned min_d, std::size_t min_i,
               std::vector<SplitPart>& parts) {
    if (deg == t_.n) {
      record(product, parts);
      return;
    }
    for (unsigned d = min_d; deg + d <= t_.n; ++d) {
      const auto& list = irreducibles_[d - 1];
      for (std::size_t i = d == min_d ? min_i : 0; i < list.size(); ++i) {
        std::vector<std::uint64_t> next = product;
        for (unsigned e = 1; deg + d * e <= t_.n; ++e) {
          next = multiply(next, list[i], t_.p);
          parts.push_back({d, e});
          recurse(next, deg + d * e, d, i + 1, parts);
          parts.pop_back();
        }
      }
    }
  }

  void record(const std::vector<std::uint64_t>& product, const std::vector<SplitPart>& parts) {
    std::uint64_t idx = 0;
    for (unsigned j = t_.n; j-- > 0;) idx = idx * t_.p + product[j];
    SplittingType type(parts);
    auto [it, inserted] = ids_.try_emplace(type, static_cast<std::uint16_t>(t_.types.size()));
    if (inserted) {
      PrimeTable::TypeInfo info{0, galois::degree_sum_mask(type)};
      if (type.is_unramified()) info.witness_bits = galois::cycle_type_witness(type.cycle_type(), t_.n);
      t_.types.push_back(info);
    }
    t_.type_of[idx] = it->second;
  }

  PrimeTable& t_;
  std::vector<std::vector<std::vector<std::uint64_t>>> irreducibles_;
  std::map<SplittingType, std::uint16_t> ids_;
};

std::uint64_t table_prime_cap(unsigned n) {
  switch (n) {
    case 2:
    case 3:
    case 4:
      return 37;
    case 5:
      return 19;
    case 6:
      return 11;
    case 7:
      return 7;
    default:
      return 0;
  }
}

}  // namespace

std::vector<std::uint64_t> table_primes(unsigned n) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(table_prime_cap(n)))) out.push_back(p);
  return out;
}

const PrimeTable& prime_table(std::uint64_t p, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<PrimeTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, n}];
  if (!slot) {
    poly::require_prime(p);
    require(n >= 1 && n <= 8, ErrorCode::kDegreeOutOfRange, "prime tables cover degrees 1..8");
    auto table = std::make_unique<PrimeTable>();
    table->p = p;
    table->n = n;
    TableBuilder(*table).run();
    slot = std::move(table);
  }
  return *slot;
}

Classifier::Classifier(unsigned n, std::uint64_t H, Mode mode) : n_(n), H_(H), mode_(mode) {
  require(n >= 1, ErrorCode::kDegreeOutOfRange, "degree must be >= 1");
  require(n <= (mode == Mode::kExact ? 5u : 7u), ErrorCode::kDegreeOutOfRange,
          mode == Mode::kExact ? "exact classification needs n <= 5" : "interval classification needs n <= 7");
  if (mode == Mode::kExact) {
    if (n == 1) {
      group_names_ = {"S1"};
    } else {
      for (const auto& info : galois::transitive_groups_upto5()) {
        if (info.degree == n) group_names_.push_back(info.name);
      }
    }
    const std::string sn = n == 1 ? "S1" : galois::sn_name(n);
    for (std::size_t i = 0; i < group_names_.size(); ++i) {
      if (group_names_[i] == sn) sn_group_ = static_cast<std::uint8_t>(i);
    }
  }
  if (n < 2) return;
  const std::uint64_t width = 2 * H + 1;
  for (auto p : table_primes(n)) {
    PrimeSlot slot{&prime_table(p, n), std::vector<std::uint32_t>(n * width)};
    std::uint64_t place = 1;
    for (unsigned i = n; i-- > 0;) {
      for (std::uint64_t t = 0; t < width; ++t) {
        const long a = static_cast<long>(t) - static_cast<long>(H);
        const long r = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
        slot.contrib[i * width + t] = static_cast<std::uint32_t>(r * place);
      }
      place *= p;
    }
    slots_.push_back(std::move(slot));
  }
}

std::optional<Classification> Classifier::fast_path(const long* a) const {
  const std::uint64_t width = 2 * H_ + 1;
  // bits 1..n-1 of the running mask: degrees a rational factor could still have
  const std::uint64_t proper = ((std::uint64_t{1} << n_) - 1) & ~std::uint64_t{1};
  std::uint64_t mask = proper;
  std::uint32_t bits = 0;
  for (const auto& slot : slots_) {
    std::uint32_t idx = 0;
    for (unsigned i = 0; i < n_; ++i) idx += slot.contrib[i * width + static_cast<std::uint64_t>(a[i] + static_cast<long>(H_))];
    const auto& info = slot.table->types[slot.table->type_of[idx]];
    mask &= info.degree_mask;
    bits |= info.witness_bits;
    if ((mask & proper) == 0 && galois::witnesses_force_sn(bits, n_)) {
      return mode_ == Mode::kExact ? Classification{Kind::kGroup, sn_group_} : Classification{Kind::kCertifiedSn, 0};
    }
  }
  return std::nullopt;
}

Classification Classifier::classify(const long* a) const {
  if (n_ == 1) return mode_ == Mode::kExact ? Classification{Kind::kGroup, 0} : Classification{Kind::kCertifiedSn, 0};
  if (auto fast = fast_path(a)) return *fast;
  return classify_exact(poly::MonicIntPoly(std::vector<BigInt>(a, a + n_)));
}

Classification Classifier::classify_exact(const poly::MonicIntPoly& f) const {
  require(f.degree() == n_, ErrorCode::kInvalidArgument, "polynomial degree differs from the classifier degree");
  if (n_ == 1) return mode_ == Mode::kExact ? Classification{Kind::kGroup, 0} : Classification{Kind::kCertifiedSn, 0};
  const BigInt d = poly::disc(f);
  if (d == 0) return {Kind::kDegenerate, 0};
  if (!galois::is_irreducible_over_Z(f)) return {Kind::kReducible, 0};
  if (mode_ == Mode::kExact) {
    const auto verdict = galois::galois_group_exact(f, d);
    for (std::size_t i = 0; i < group_names_.size(); ++i) {
      if (group_names_[i] == verdict.group) return {Kind::kGroup, static_cast<std::uint8_t>(i)};
    }
    fail(ErrorCode::kInvariantViolation, "exact path returned unlisted group " + verdict.group);
  }
  if (is_perfect_square(d)) return {Kind::kSquareDisc, 0};
  const auto verdict = galois::sn_certificate(f, 100);
  if (verdict.status == galois::VerdictStatus::kCertifiedSn) return {Kind::kCertifiedSn, 0};
  return {Kind::kUnresolved, 0};
}

}  // namespace vdw::counting
