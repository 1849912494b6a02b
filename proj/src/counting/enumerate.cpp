#include "vdw/counting/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "vdw/core/error.hpp"
#include "vdw/galois/galois.hpp"
#include "vdw/polyarith/dedekind.hpp"
#include "vdw/polyarith/resultant.hpp"

namespace vdw::counting {

SieveParams SieveParams::defaults(unsigned n) { return {Rational(1, 2 * n), 1}; }

void SieveParams::validate(unsigned n) const {
  require(delta > 0 && delta < Rational(1, 2 * n - 1), ErrorCode::kInvalidArgument,
          "delta must lie in (0, 1/(2n-1))");
  require(Y > 0, ErrorCode::kInvalidArgument, "Y must be positive");
}

std::string to_string(SieveCase c) {
  switch (c) {
    case SieveCase::kI: return "I";
    case SieveCase::kII: return "II";
    case SieveCase::kIII: return "III";
    case SieveCase::kUnknownC: return "unknownC";
  }
  return "?";
}

bool is_primitive_non_sn(const std::string& group) {
  static const std::set<std::string> names = {"C3", "A4", "C5", "D5", "F20", "A5"};
  return names.count(group) > 0;
}

namespace {

bool is_even_group(const std::string& group) {
  static const std::set<std::string> names = {"C3", "V4", "A4", "C5", "D5", "A5"};
  return names.count(group) > 0;
}

// x <= H^e with e = num/den > 0, as x^den <= H^num.
bool at_most_power(const BigInt& x, std::uint64_t H, const Rational& e) {
  const BigInt lhs = ipow(x, e.get_den().get_ui());
  const BigInt rhs = ipow(BigInt(static_cast<unsigned long>(H)), e.get_num().get_ui());
  return lhs <= rhs;
}

}  // namespace

SieveCase sieve_case(const poly::MonicIntPoly& f, std::uint64_t H, const SieveParams& params) {
  const BigInt d = poly::disc(f);
  require(d != 0, ErrorCode::kInvalidArgument, "sieve case needs a nonzero discriminant");
  BigInt C = 1, D = 1;
  for (const auto& [prime, e] : factor_integer(d)) {
    require(prime.fits_ulong_p(), ErrorCode::kTooLarge, "discriminant prime exceeds 64 bits");
    const auto v = poly::field_disc_valuation(f, prime.get_ui(), d);
    if (!v) {
      if (e >= 2) return SieveCase::kUnknownC;
      continue;
    }
    if (*v > 0) {
      C *= prime;
      D *= ipow(prime, static_cast<unsigned long>(*v));
    }
  }
  const Rational one_plus = 1 + params.delta;
  if (!at_most_power(C, H, one_plus)) return SieveCase::kIII;
  return at_most_power(D, H, 2 * one_plus) ? SieveCase::kII : SieveCase::kI;
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, unsigned n, std::uint64_t H, long a1) {
  return dir / ("n" + std::to_string(n) + "_H" + std::to_string(H) + "_a" + std::to_string(a1) + ".json");
}

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

struct RunConfig {
  unsigned n;
  std::uint64_t H;
  Mode mode;
  std::string sieve_delta;  // empty without case partition

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["H"] = H;
    j["mode"] = to_string(mode);
    j["sieveDelta"] = sieve_delta.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(sieve_delta);
    return j;
  }
};

CountLedger empty_ledger(const Classifier& classifier, std::uint64_t H, bool with_cases) {
  CountLedger ledger;
  ledger.n = classifier.degree();
  ledger.H = H;
  ledger.mode = classifier.mode();
  for (const auto& name : classifier.group_names()) ledger.per_group[name] = 0;
  if (with_cases) {
    for (auto c : {SieveCase::kI, SieveCase::kII, SieveCase::kIII, SieveCase::kUnknownC}) ledger.case_histogram[to_string(c)] = 0;
  }
  return ledger;
}

CountLedger run_sub_box(const Classifier& classifier, std::uint64_t H, long a1, const std::optional<SieveParams>& sieve) {
  const unsigned n = classifier.degree();
  CountLedger ledger = empty_ledger(classifier, H, sieve.has_value());
  ledger.sub_boxes = 1;
  std::uint64_t digest = kFnvOffset;
  for (std::uint64_t v : {std::uint64_t{n}, H, static_cast<std::uint64_t>(a1 + static_cast<long>(H))}) {
    digest = (digest ^ v) * kFnvPrime;
  }
  const long h = static_cast<long>(H);
  std::vector<long> a(n, -h);
  a[0] = a1;
  const auto& names = classifier.group_names();
  while (true) {
    const Classification c = classifier.classify(a.data());
    digest = (digest ^ c.code()) * kFnvPrime;
    ++ledger.total;
    switch (c.kind) {
      case Kind::kDegenerate: ++ledger.degenerate; break;
      case Kind::kReducible: ++ledger.reducible; break;
      case Kind::kGroup: {
        const auto& name = names[c.group];
        ++ledger.per_group[name];
        if (c.group == classifier.sn_group()) {
          ++ledger.certified_sn;
        } else if (is_even_group(name)) {
          ++ledger.square_disc;
        }
        if (sieve && is_primitive_non_sn(name)) {
          const poly::MonicIntPoly f(std::vector<BigInt>(a.begin(), a.end()));
          ++ledger.case_histogram[to_string(sieve_case(f, H, *sieve))];
        }
        break;
      }
      case Kind::kCertifiedSn: ++ledger.certified_sn; break;
      case Kind::kSquareDisc: ++ledger.square_disc; break;
      case Kind::kUnresolved: ++ledger.unresolved; break;
    }
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] < h) {
        ++a[i];
        break;
      }
      a[i] = -h;
    }
    if (i == 0 || i == static_cast<std::size_t>(-1)) break;
  }
  ledger.checksum = digest;
  return ledger;
}

std::optional<CountLedger> load_checkpoint(const std::filesystem::path& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::kInvalidArgument, "unreadable checkpoint " + path.string());
  }
  require(j.contains("config") && j["config"].dump() == nlohmann::json(config.json()).dump(),
          ErrorCode::kInvalidArgument, "checkpoint " + path.string() + " was written by a different configuration");
  return ledger_from_json(j.at("ledger").dump());
}

void write_checkpoint(const std::filesystem::path& path, const RunConfig& config, const CountLedger& ledger) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["config"] = config.json();
  j["ledger"] = nlohmann::ordered_json::parse(to_json(ledger));
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::kInvalidArgument, "cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

EnumerateResult enumerate_box(unsigned n, std::uint64_t H, const EnumerateOptions& options) {
  require(n >= 1, ErrorCode::kDegreeOutOfRange, "degree must be >= 1");
  const long double points = std::pow(static_cast<long double>(2 * H + 1), static_cast<long double>(n));
  require(points <= static_cast<long double>(options.budget), ErrorCode::kBudgetExceeded,
          "box of " + std::to_string(static_cast<double>(points)) + " polynomials exceeds the budget");
  if (options.sieve) {
    require(options.mode == Mode::kExact, ErrorCode::kInvalidArgument, "case partition needs exact mode");
    options.sieve->validate(n);
  }
  const Classifier classifier(n, H, options.mode);
  const RunConfig config{n, H, options.mode, options.sieve ? options.sieve->delta.get_str() : ""};
  if (options.checkpoint_dir) std::filesystem::create_directories(*options.checkpoint_dir);

  const std::uint64_t width = 2 * H + 1;
  std::vector<std::optional<CountLedger>> subs(width);
  EnumerateResult result;
  for (std::uint64_t i = 0; i < width; ++i) {
    if (!options.checkpoint_dir) break;
    const long a1 = static_cast<long>(i) - static_cast<long>(H);
    subs[i] = load_checkpoint(checkpoint_path(*options.checkpoint_dir, n, H, a1), config);
    if (subs[i]) ++result.loaded;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= width) return;
      if (subs[i]) continue;
      try {
        const long a1 = static_cast<long>(i) - static_cast<long>(H);
        CountLedger sub = run_sub_box(classifier, H, a1, options.sieve);
        if (options.checkpoint_dir) write_checkpoint(checkpoint_path(*options.checkpoint_dir, n, H, a1), config, sub);
        subs[i] = std::move(sub);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(width);
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(width)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  result.ledger = empty_ledger(classifier, H, options.sieve.has_value());
  for (const auto& sub : subs) result.ledger.add(*sub);
  result.computed = width - result.loaded;
  result.ledger.check_invariants();
  return result;
}

EValue compute_E(unsigned n, std::uint64_t H, unsigned threads, std::uint64_t budget) {
  EnumerateOptions options;
  options.threads = threads;
  options.budget = budget;
  options.mode = n <= 5 ? Mode::kExact : Mode::kInterval;
  const auto ledger = enumerate_box(n, H, options).ledger;
  if (options.mode == Mode::kExact) return {true, ledger.e_exact(), ledger.e_exact()};
  return {false, ledger.e_lower(), ledger.e_upper()};
}

std::uint64_t compute_N(unsigned n, std::uint64_t H, const std::string& group, unsigned threads) {
  require(n >= 2 && n <= 5, ErrorCode::kDegreeOutOfRange, "N_n(G, H) needs 2 <= n <= 5");
  const std::string name = galois::canonical_group_name(group);
  bool listed = false;
  for (const auto& info : galois::transitive_groups_upto5()) listed |= info.name == name && info.degree == n;
  require(listed, ErrorCode::kUnknownGroup, name + " is not a transitive group of degree " + std::to_string(n));
  EnumerateOptions options;
  options.threads = threads;
  return enumerate_box(n, H, options).ledger.per_group.at(name);
}

std::map<std::string, std::uint64_t> case_partition(unsigned n, std::uint64_t H, const SieveParams& params,
                                                    unsigned threads) {
  EnumerateOptions options;
  options.threads = threads;
  options.sieve = params;
  return enumerate_box(n, H, options).ledger.case_histogram;
}

}  // namespace vdw::counting
