#include "vdw/polyarith/splitting_type.hpp"

#include <algorithm>
#include <charconv>

#include "vdw/core/error.hpp"

namespace vdw::poly {

SplittingType::SplittingType(std::vector<SplitPart> parts) : parts_(std::move(parts)) {
  for (const auto& part : parts_) {
    require(part.degree >= 1 && part.multiplicity >= 1, ErrorCode::kInvalidArgument,
            "splitting type parts need degree and multiplicity >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), [](const SplitPart& a, const SplitPart& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.multiplicity > b.multiplicity;
  });
}

namespace {

unsigned parse_positive(std::string_view token, std::string_view whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  require(ec == std::errc() && ptr == token.data() + token.size() && value >= 1 && value <= 1000,
          ErrorCode::kInvalidArgument, "invalid sigma '" + std::string(whole) + "'");
  return value;
}

}  // namespace

SplittingType SplittingType::parse(std::string_view text) {
  std::vector<SplitPart> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '_') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '_') ++j;
    std::string_view token = text.substr(i, j - i);
    auto caret = token.find('^');
    SplitPart part{};
    if (caret == std::string_view::npos) {
      part = {parse_positive(token, text), 1};
    } else {
      part = {parse_positive(token.substr(0, caret), text), parse_positive(token.substr(caret + 1), text)};
    }
    parts.push_back(part);
    i = j;
  }
  require(!parts.empty(), ErrorCode::kInvalidArgument, "empty sigma");
  return SplittingType(std::move(parts));
}

unsigned SplittingType::deg() const {
  unsigned s = 0;
  for (const auto& p : parts_) s += p.degree * p.multiplicity;
  return s;
}

unsigned SplittingType::ind() const {
  unsigned s = 0;
  for (const auto& p : parts_) s += p.degree * (p.multiplicity - 1);
  return s;
}

unsigned SplittingType::len() const {
  unsigned s = 0;
  for (const auto& p : parts_) s += p.degree;
  return s;
}

BigInt SplittingType::aut_count() const {
  BigInt result = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) {
      result *= parts_[j].degree;
      ++j;
    }
    result *= factorial(j - i);
    i = j;
  }
  return result;
}

bool SplittingType::is_unramified() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const SplitPart& p) { return p.multiplicity == 1; });
}

std::vector<unsigned> SplittingType::cycle_type() const {
  std::vector<unsigned> out;
  for (const auto& p : parts_) out.insert(out.end(), p.multiplicity, p.degree);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string SplittingType::to_string() const {
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.degree);
    if (p.multiplicity != 1) out += "^" + std::to_string(p.multiplicity);
  }
  return out;
}

SplittingType splitting_type(const std::vector<FactorPower>& factors) {
  std::vector<SplitPart> parts;
  parts.reserve(factors.size());
  for (const auto& fp : factors) parts.push_back({static_cast<unsigned>(fp.factor.degree()), fp.multiplicity});
  return SplittingType(std::move(parts));
}

SplittingType splitting_type(const MonicIntPoly& f, std::uint64_t p) {
  return splitting_type(factor_mod_p(PolyModP::from_monic(f, p)));
}

unsigned index_mod_p(const PolyModP& f) {
  require_prime(f.p());
  if (static_cast<std::uint64_t>(f.degree()) < f.p()) {
    // no p-th power parts: ind = n - deg(rad f) = deg gcd(f, f')
    return static_cast<unsigned>(std::max(0, gcd(f, f.derivative()).degree()));
  }
  return splitting_type(factor_mod_p(f)).ind();
}

unsigned index_mod_p(const MonicIntPoly& f, std::uint64_t p) { return index_mod_p(PolyModP::from_monic(f, p)); }

}  // namespace vdw::poly
