#include "vdw/counting/ledger.hpp"

#include <cstdio>

#include "json.hpp"
#include "vdw/core/error.hpp"

namespace vdw::counting {

void CountLedger::add(const CountLedger& other) {
  require(n == other.n && H == other.H && mode == other.mode, ErrorCode::kInvalidArgument,
          "cannot merge ledgers of different (n, H, mode)");
  total += other.total;
  degenerate += other.degenerate;
  reducible += other.reducible;
  for (const auto& [name, count] : other.per_group) per_group[name] += count;
  square_disc += other.square_disc;
  certified_sn += other.certified_sn;
  unresolved += other.unresolved;
  for (const auto& [name, count] : other.case_histogram) case_histogram[name] += count;
  checksum += other.checksum;
  sub_boxes += other.sub_boxes;
}

std::uint64_t CountLedger::e_exact() const {
  require(mode == Mode::kExact, ErrorCode::kInvalidArgument, "exact E needs an exact-mode ledger");
  return total - certified_sn;
}

std::uint64_t CountLedger::e_lower() const { return degenerate + reducible + square_disc; }

std::uint64_t CountLedger::e_upper() const { return total - certified_sn; }

void CountLedger::check_invariants() const {
  std::uint64_t groups = 0;
  for (const auto& [name, count] : per_group) groups += count;
  const std::uint64_t classified = mode == Mode::kExact ? reducible + groups + unresolved
                                                        : reducible + certified_sn + square_disc + unresolved;
  require(classified + degenerate == total, ErrorCode::kInvariantViolation, "ledger partition identity fails");
}

bool operator==(const CountLedger& a, const CountLedger& b) { return to_json(a) == to_json(b); }

std::string to_json(const CountLedger& ledger) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["n"] = ledger.n;
  j["H"] = ledger.H;
  j["mode"] = to_string(ledger.mode);
  j["total"] = ledger.total;
  j["degenerate"] = ledger.degenerate;
  j["reducible"] = ledger.reducible;
  j["perGroup"] = nlohmann::ordered_json::object();
  for (const auto& [name, count] : ledger.per_group) j["perGroup"][name] = count;
  j["squareDisc"] = ledger.square_disc;
  j["certifiedSn"] = ledger.certified_sn;
  j["unresolved"] = ledger.unresolved;
  j["caseHistogram"] = nlohmann::ordered_json::object();
  for (const auto& [name, count] : ledger.case_histogram) j["caseHistogram"][name] = count;
  if (ledger.mode == Mode::kExact) {
    j["E"] = ledger.e_exact();
  } else {
    j["E"] = {ledger.e_lower(), ledger.e_upper()};
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(ledger.checksum));
  j["checksum"] = hex;
  j["subBoxes"] = ledger.sub_boxes;
  return j.dump();
}

CountLedger ledger_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    require(j.at("format_version").get<int>() == kFormatVersion, ErrorCode::kInvalidArgument,
            "unsupported ledger format_version");
    CountLedger ledger;
    ledger.n = j.at("n").get<unsigned>();
    ledger.H = j.at("H").get<std::uint64_t>();
    ledger.mode = parse_mode(j.at("mode").get<std::string>());
    ledger.total = j.at("total").get<std::uint64_t>();
    ledger.degenerate = j.at("degenerate").get<std::uint64_t>();
    ledger.reducible = j.at("reducible").get<std::uint64_t>();
    for (const auto& [name, count] : j.at("perGroup").items()) ledger.per_group[name] = count.get<std::uint64_t>();
    ledger.square_disc = j.at("squareDisc").get<std::uint64_t>();
    ledger.certified_sn = j.at("certifiedSn").get<std::uint64_t>();
    ledger.unresolved = j.at("unresolved").get<std::uint64_t>();
    for (const auto& [name, count] : j.at("caseHistogram").items()) {
      ledger.case_histogram[name] = count.get<std::uint64_t>();
    }
    ledger.checksum = std::stoull(j.at("checksum").get<std::string>(), nullptr, 16);
    ledger.sub_boxes = j.at("subBoxes").get<std::uint64_t>();
    return ledger;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("malformed ledger: ") + e.what());
  }
}

}  // namespace vdw::counting
