#include "vdw/permgroup/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vdw/core/error.hpp"

namespace vdw::perm {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Letter>(i);
}

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Letter x : images_) {
    require(x < images_.size() && !hit[x], ErrorCode::kInvalidArgument, "image array is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Letter>>& cycles) {
  Permutation g(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Letter a = cycle[i];
      require(a >= 1 && a <= degree, ErrorCode::kInvalidArgument, "cycle letter out of range");
      require(!used[a - 1], ErrorCode::kInvalidArgument, "cycles are not disjoint");
      used[a - 1] = true;
      g.images_[a - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return g;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Letter>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    require(c == '(', ErrorCode::kInvalidArgument, "expected '(' in permutation text");
    auto close = text.find(')', i);
    require(close != std::string_view::npos, ErrorCode::kInvalidArgument, "unbalanced parenthesis");
    std::string body(text.substr(i + 1, close - i - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<Letter> cycle;
    long long v;
    while (in >> v) {
      require(v >= 1, ErrorCode::kInvalidArgument, "letters are 1-indexed");
      cycle.push_back(static_cast<Letter>(v));
    }
    require(in.eof(), ErrorCode::kInvalidArgument, "malformed cycle '" + body + "'");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& rhs) const {
  require(rhs.degree() == degree(), ErrorCode::kInvalidArgument, "degree mismatch");
  std::vector<Letter> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation g;
  g.images_ = std::move(out);
  return g;
}

Permutation Permutation::inverse() const {
  Permutation g;
  g.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) g.images_[images_[i]] = static_cast<Letter>(i);
  return g;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1) result = result.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t Permutation::orbit_count() const { return cycle_type().size(); }

std::size_t Permutation::moved_points() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) moved += images_[i] != i;
  return moved;
}

std::size_t Permutation::ind() const { return degree() - orbit_count(); }

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t ind_from_cycle_type(const std::vector<std::size_t>& cycle_type) {
  std::size_t total = 0;
  for (std::size_t len : cycle_type) total += len - 1;
  return total;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Letter x : g.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace vdw::perm
