#include "vdw/fourier/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "json.hpp"

#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"
#include "vdw/polyarith/sieve.hpp"

namespace vdw::fourier {

using poly::PolyModP;
using poly::SplittingType;

std::string to_string(SpaceKind kind) { return kind == SpaceKind::kMonic ? "monic" : "binary"; }

SpaceKind parse_space_kind(const std::string& text) {
  if (text == "monic") return SpaceKind::kMonic;
  if (text == "binary") return SpaceKind::kBinary;
  fail(ErrorCode::kInvalidArgument, "space must be 'monic' or 'binary', got '" + text + "'");
}

std::uint64_t WeightSpace::size() const {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < dimension(); ++i) {
    require(total <= std::numeric_limits<std::uint64_t>::max() / p, ErrorCode::kTooLarge, "space too large");
    total *= p;
  }
  return total;
}

std::uint64_t WeightSpace::encode(const std::vector<std::uint64_t>& point) const {
  require(point.size() == dimension(), ErrorCode::kInvalidArgument, "point has wrong dimension");
  std::uint64_t idx = 0;
  for (auto v : point) idx = idx * p + v % p;
  return idx;
}

std::vector<std::uint64_t> WeightSpace::decode(std::uint64_t index) const {
  std::vector<std::uint64_t> point(dimension());
  for (std::size_t j = point.size(); j-- > 0;) {
    point[j] = index % p;
    index /= p;
  }
  return point;
}

std::uint64_t irreducible_count(const WeightSpace& space, unsigned d) {
  std::uint64_t count = poly::necklace_count(space.p, d);
  if (space.kind == SpaceKind::kBinary && d == 1) ++count;
  return count;
}

namespace {

void validate_space(const WeightSpace& space) {
  poly::require_prime(space.p);
  require(space.n >= 1, ErrorCode::kInvalidArgument, "weight space degree must be >= 1");
}

// Parts of sigma grouped by degree; each group lists the multiplicities e_i.
std::map<unsigned, std::vector<unsigned>> parts_by_degree(const SplittingType& sigma) {
  std::map<unsigned, std::vector<unsigned>> out;
  for (const auto& part : sigma.parts()) out[part.degree].push_back(part.multiplicity);
  return out;
}

// Divide by the number of permutations of identical multiplicities within one degree group.
std::uint64_t identical_symmetry(const std::vector<unsigned>& exps) {
  std::map<unsigned, unsigned> counts;
  for (auto e : exps) ++counts[e];
  std::uint64_t sym = 1;
  for (const auto& [e, c] : counts) {
    for (unsigned i = 2; i <= c; ++i) sym *= i;
  }
  return sym;
}

// Injective maps parts -> available factors with exps[i] <= mult[map(i)].
std::uint64_t count_injections(const std::vector<unsigned>& exps, const std::vector<unsigned>& mult, std::size_t i,
                               std::vector<bool>& used) {
  if (i == exps.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < mult.size(); ++j) {
    if (used[j] || mult[j] < exps[i]) continue;
    used[j] = true;
    total += count_injections(exps, mult, i + 1, used);
    used[j] = false;
  }
  return total;
}

std::uint64_t falling(std::uint64_t n, std::size_t s) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < s; ++i) out *= (n > i ? n - i : 0);
  return out;
}

}  // namespace

std::uint64_t weight(const WeightSpace& space, const std::vector<std::uint64_t>& point, const SplittingType& sigma) {
  validate_space(space);
  require(point.size() == space.dimension(), ErrorCode::kInvalidArgument, "point has wrong dimension");
  if (sigma.deg() > space.n) return 0;
  const auto groups = parts_by_degree(sigma);
  const std::uint64_t p = space.p;

  const bool zero_form = space.kind == SpaceKind::kBinary &&
                         std::all_of(point.begin(), point.end(), [p](std::uint64_t v) { return v % p == 0; });
  if (zero_form) {
    std::uint64_t total = 1;
    for (const auto& [deg, exps] : groups) total *= falling(irreducible_count(space, deg), exps.size()) / identical_symmetry(exps);
    return total;
  }

  // factor multiplicities by degree
  std::map<unsigned, std::vector<unsigned>> available;
  PolyModP g(p);
  if (space.kind == SpaceKind::kMonic) {
    std::vector<std::uint64_t> asc(space.n + 1);
    asc[space.n] = 1;
    for (unsigned i = 1; i <= space.n; ++i) asc[space.n - i] = point[i - 1] % p;
    g = PolyModP(p, asc);
  } else {
    unsigned y_mult = 0;
    while (point[y_mult] % p == 0) ++y_mult;
    if (y_mult > 0) available[1].push_back(y_mult);
    std::vector<std::uint64_t> asc(space.n + 1 - y_mult);
    for (unsigned i = y_mult; i <= space.n; ++i) asc[space.n - i] = point[i] % p;
    g = PolyModP(p, asc).monic();
  }
  if (g.degree() > 0) {
    for (const auto& fp : poly::factor_mod_p(g)) available[fp.factor.degree()].push_back(fp.multiplicity);
  }

  std::uint64_t total = 1;
  for (const auto& [deg, exps] : groups) {
    const auto it = available.find(deg);
    if (it == available.end()) return 0;
    std::vector<bool> used(it->second.size(), false);
    total *= count_injections(exps, it->second, 0, used) / identical_symmetry(exps);
    if (total == 0) return 0;
  }
  return total;
}

namespace {

// Candidate factor for a tuple: a monic irreducible, or y (empty coefficient list).
struct Candidate {
  std::vector<std::uint64_t> asc;  // ascending, monic; empty for y
  bool is_y() const { return asc.empty(); }
};

std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

class TupleMarker {
 public:
  TupleMarker(const WeightSpace& space, const SplittingType& sigma, std::vector<std::uint64_t>& weights)
      : space_(space), parts_(sigma.parts()), weights_(weights) {
    for (const auto& part : parts_) {
      if (candidates_.count(part.degree)) continue;
      auto& list = candidates_[part.degree];
      for (const auto& f : poly::enumerate_irreducibles(space.p, part.degree)) list.push_back({f.coeffs()});
      if (space.kind == SpaceKind::kBinary && part.degree == 1) list.push_back({});
    }
    chosen_.assign(parts_.size(), 0);
  }

  void run() { recurse(0, {1}); }

 private:
  void recurse(std::size_t i, const std::vector<std::uint64_t>& product) {
    if (i == parts_.size()) {
      mark_multiples(product);
      return;
    }
    const auto& list = candidates_.at(parts_[i].degree);
    const bool same_as_prev = i > 0 && parts_[i] == parts_[i - 1];
    const std::size_t start = same_as_prev ? chosen_[i - 1] + 1 : 0;
    for (std::size_t c = start; c < list.size(); ++c) {
      bool clash = false;
      for (std::size_t j = 0; j < i; ++j) clash |= parts_[j].degree == parts_[i].degree && chosen_[j] == c;
      if (clash) continue;
      chosen_[i] = c;
      std::vector<std::uint64_t> next = product;
      if (!list[c].is_y()) {
        for (unsigned e = 0; e < parts_[i].multiplicity; ++e) next = multiply(next, list[c].asc, space_.p);
      }
      recurse(i + 1, next);
    }
  }

  // product has x-degree deg sigma minus the y-exponent; its form degree is deg sigma.
  void mark_multiples(const std::vector<std::uint64_t>& product) {
    const std::uint64_t p = space_.p;
    const unsigned n = space_.n;
    unsigned form_deg = 0;
    for (const auto& part : parts_) form_deg += part.degree * part.multiplicity;
    const unsigned free_deg = n - form_deg;
    // cofactor Q: monic of degree free_deg, or any form of degree free_deg
    const unsigned q_coeffs = space_.kind == SpaceKind::kMonic ? free_deg : free_deg + 1;
    std::uint64_t q_total = 1;
    for (unsigned i = 0; i < q_coeffs; ++i) q_total *= p;
    std::vector<std::uint64_t> q(free_deg + 1, 0);
    for (std::uint64_t qi = 0; qi < q_total; ++qi) {
      std::uint64_t rest = qi;
      for (unsigned i = 0; i < q_coeffs; ++i) {
        q[i] = rest % p;
        rest /= p;
      }
      if (space_.kind == SpaceKind::kMonic) q[free_deg] = 1;
      const auto f = multiply(product, q, p);
      // coordinate j pairs with x^(n-j) in the binary space and with x^(n-j) for j >= 1 in the monic space
      std::uint64_t idx = 0;
      const unsigned first = space_.kind == SpaceKind::kMonic ? 1 : 0;
      for (unsigned j = first; j <= n; ++j) {
        const unsigned power = n - j;
        idx = idx * p + (power < f.size() ? f[power] : 0);
      }
      ++weights_[idx];
    }
  }

  const WeightSpace& space_;
  std::vector<poly::SplitPart> parts_;
  std::vector<std::uint64_t>& weights_;
  std::map<unsigned, std::vector<Candidate>> candidates_;
  std::vector<std::size_t> chosen_;
};

constexpr std::uint64_t kAxisTableCap = 20'000'000;

}  // namespace

std::vector<std::uint64_t> weight_table(const WeightSpace& space, const SplittingType& sigma) {
  validate_space(space);
  const std::uint64_t size = space.size();
  require(size <= kAxisTableCap, ErrorCode::kTooLarge, "weight table exceeds 2e7 points");
  std::vector<std::uint64_t> weights(size, 0);
  if (sigma.deg() > space.n) return weights;
  TupleMarker(space, sigma, weights).run();
  return weights;
}

double FourierTable::parseval_relative_error() const {
  double lhs = 0;
  for (const auto& v : values) lhs += std::norm(v);
  double rhs = 0;
  for (auto w : weights) rhs += static_cast<double>(w) * static_cast<double>(w);
  rhs /= static_cast<double>(space.size());
  if (rhs == 0) return lhs == 0 ? 0 : std::numeric_limits<double>::infinity();
  return std::abs(lhs - rhs) / rhs;
}

double FourierTable::error_budget() const {
  const std::uint64_t max_w = weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
  return space.dimension() * std::numeric_limits<double>::epsilon() * static_cast<double>(max_w);
}

namespace {

std::vector<std::complex<double>> roots_of_unity(std::uint64_t p) {
  std::vector<std::complex<double>> out(p);
  for (std::uint64_t j = 0; j < p; ++j) out[j] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / p);
  return out;
}

void axis_dft(std::vector<std::complex<double>>& data, std::uint64_t p, unsigned dims) {
  const auto omega = roots_of_unity(p);
  std::vector<std::complex<double>> line(p);
  std::uint64_t stride = 1;
  for (unsigned axis = 0; axis < dims; ++axis, stride *= p) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < data.size(); base += block) {
      for (std::uint64_t offset = 0; offset < stride; ++offset) {
        for (std::uint64_t g = 0; g < p; ++g) {
          std::complex<double> acc = 0;
          for (std::uint64_t f = 0; f < p; ++f) acc += data[base + offset + f * stride] * omega[(f * g) % p];
          line[g] = acc;
        }
        for (std::uint64_t g = 0; g < p; ++g) data[base + offset + g * stride] = line[g];
      }
    }
  }
}

std::vector<std::complex<double>> direct_dft(const WeightSpace& space, const std::vector<std::uint64_t>& weights) {
  const auto omega = roots_of_unity(space.p);
  const std::uint64_t size = weights.size();
  std::vector<std::vector<std::uint64_t>> points(size);
  for (std::uint64_t i = 0; i < size; ++i) points[i] = space.decode(i);
  std::vector<std::complex<double>> out(size);
  for (std::uint64_t g = 0; g < size; ++g) {
    std::complex<double> acc = 0;
    for (std::uint64_t f = 0; f < size; ++f) {
      if (weights[f] == 0) continue;
      std::uint64_t dot = 0;
      for (std::size_t j = 0; j < points[f].size(); ++j) dot += points[f][j] * points[g][j];
      acc += static_cast<double>(weights[f]) * omega[dot % space.p];
    }
    out[g] = acc;
  }
  return out;
}

}  // namespace

FourierTable fourier_table(const WeightSpace& space, const SplittingType& sigma, DftMethod method) {
  validate_space(space);
  if (method == DftMethod::kDirect) {
    require(space.p <= 5 && space.dimension() <= 6, ErrorCode::kTooLarge, "direct transform needs p <= 5, N <= 6");
  }
  FourierTable table;
  table.space = space;
  table.sigma = sigma;
  table.k = sigma.ind();
  table.d = sigma.deg();
  table.aut_count = sigma.aut_count();
  table.weights = weight_table(space, sigma);
  if (method == DftMethod::kDirect) {
    table.values = direct_dft(space, table.weights);
  } else {
    table.values.assign(table.weights.begin(), table.weights.end());
    axis_dft(table.values, space.p, space.dimension());
  }
  const double scale = 1.0 / static_cast<double>(space.size());
  for (auto& v : table.values) v *= scale;
  return table;
}

DecayReport verify_decay(const FourierTable& table) {
  DecayReport report;
  report.space = table.space;
  report.sigma = table.sigma.to_string();
  report.k = table.k;
  report.d = table.d;
  report.parseval_error = table.parseval_relative_error();
  const double p = static_cast<double>(table.space.p);
  if (table.d > table.space.n) {
    report.exponent_used = "empty";
    return report;
  }
  const double main = std::pow(p, -static_cast<double>(table.k)) / table.aut_count.get_d();
  report.main_term_error = std::abs(table.values[0] - main) * std::pow(p, table.k + 1.0);
  const bool weil = table.space.kind == SpaceKind::kMonic && table.d == table.space.n;
  report.exponent_used = weil ? "k+1/2" : "k+1";
  const double scale = std::pow(p, table.k + (weil ? 0.5 : 1.0));
  double best = 0;
  for (std::size_t g = 1; g < table.values.size(); ++g) best = std::max(best, std::abs(table.values[g]));
  report.max_nonzero_scaled = best * scale;
  return report;
}

std::string DecayReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = space.p;
  j["n"] = space.n;
  j["space"] = to_string(space.kind);
  j["sigma"] = sigma;
  j["k"] = k;
  j["d"] = d;
  j["mainTermError"] = main_term_error;
  j["maxNonzeroScaled"] = max_nonzero_scaled;
  j["regime"] = exponent_used;
  j["parsevalRelativeError"] = parseval_error;
  return j.dump();
}

namespace {

// Index of every monic residue tuple of degree m (any p); entry for m = 0 is {0}.
std::vector<std::uint8_t> monic_index_table(std::uint64_t p, unsigned m) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) {
    total *= p;
    require(total <= 100'000'000, ErrorCode::kTooLarge, "residue table too large");
  }
  std::vector<std::uint8_t> out(total, 0);
  if (m == 0) return out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> asc(m + 1);
    asc[m] = 1;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {  // a_m is least significant
      asc[i] = rest % p;
      rest /= p;
    }
    out[idx] = static_cast<std::uint8_t>(poly::index_mod_p(PolyModP(p, asc)));
  }
  return out;
}

constexpr std::uint8_t kInfiniteIndex = 255;

// Binary forms: y-multiplicity m contributes m - 1, the x-part its monic index; the zero form is 255.
std::vector<std::uint8_t> binary_index_table(std::uint64_t p, unsigned n) {
  std::vector<std::vector<std::uint8_t>> monic(n + 1);
  for (unsigned m = 0; m <= n; ++m) monic[m] = monic_index_table(p, m);
  const WeightSpace space{SpaceKind::kBinary, p, n};
  std::vector<std::uint8_t> out(space.size());
  for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
    const auto c = space.decode(idx);
    unsigned y = 0;
    while (y <= n && c[y] == 0) ++y;
    if (y > n) {
      out[idx] = kInfiniteIndex;
      continue;
    }
    const std::uint64_t inv = inv_mod(c[y], p);
    std::uint64_t sub = 0;
    for (unsigned i = y + 1; i <= n; ++i) sub = sub * p + mul_mod(c[i], inv, p);
    out[idx] = static_cast<std::uint8_t>((y > 0 ? y - 1 : 0) + monic[n - y][sub]);
  }
  return out;
}

// Box values per residue class mod m: count of a in [-H, H] with a = r mod m.
std::vector<std::uint64_t> class_sizes(std::uint64_t m, std::uint64_t H) {
  std::vector<std::uint64_t> out(m, 0);
  const std::uint64_t width = 2 * H + 1;
  for (std::uint64_t r = 0; r < m; ++r) {
    // a = -H + t, t in [0, width), a mod m = r  <=>  t = (r + H) mod m
    const std::uint64_t first = (r + H) % m;
    out[r] = first < width ? (width - 1 - first) / m + 1 : 0;
  }
  return out;
}

void require_scan_budget(std::uint64_t per_axis, unsigned dims) {
  long double total = 1;
  for (unsigned i = 0; i < dims; ++i) total *= per_axis;
  require(total <= 1e9L, ErrorCode::kTooLarge, "box scan exceeds 1e9 residue tuples");
}

}  // namespace

std::uint64_t box_count_index(SpaceKind kind, std::uint64_t p, unsigned n, unsigned k, std::uint64_t H) {
  poly::require_prime(p);
  require(n >= 1, ErrorCode::kInvalidArgument, "degree must be >= 1");
  const WeightSpace space{kind, p, n};
  require_scan_budget(p, space.dimension());
  const auto table = kind == SpaceKind::kMonic ? monic_index_table(p, n) : binary_index_table(p, n);
  const auto sizes = class_sizes(p, H);
  std::uint64_t total = 0;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] < k) continue;
    std::uint64_t weight = 1;
    std::uint64_t rest = idx;
    for (unsigned j = 0; j < space.dimension(); ++j) {
      weight *= sizes[rest % p];
      rest /= p;
    }
    total += weight;
  }
  return total;
}

std::uint64_t box_count_index_direct(std::uint64_t p, unsigned n, unsigned k, std::uint64_t H) {
  poly::require_prime(p);
  require(n >= 1, ErrorCode::kInvalidArgument, "degree must be >= 1");
  require_scan_budget(2 * H + 1, n);
  std::vector<long> a(n, -static_cast<long>(H));
  std::uint64_t total = 0;
  while (true) {
    std::vector<BigInt> coeffs(a.begin(), a.end());
    if (poly::index_mod_p(poly::MonicIntPoly(std::move(coeffs)), p) >= k) ++total;
    std::size_t i = n;
    while (i-- > 0) {
      if (a[i] < static_cast<long>(H)) {
        ++a[i];
        break;
      }
      a[i] = -static_cast<long>(H);
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return total;
}

std::uint64_t multi_prime_box_count(const std::vector<std::pair<std::uint64_t, unsigned>>& conditions, unsigned n,
                                    std::uint64_t H) {
  require(n >= 1, ErrorCode::kInvalidArgument, "degree must be >= 1");
  std::uint64_t modulus = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> active;
  for (const auto& [p, k] : conditions) {
    poly::require_prime(p);
    modulus *= p;
    require(modulus <= 100'000, ErrorCode::kTooLarge, "product of primes exceeds 1e5");
    if (k > 0) active.emplace_back(p, k);
  }
  const std::uint64_t width = 2 * H + 1;
  if (active.empty()) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= width;
    return total;
  }
  modulus = 1;
  for (const auto& [p, k] : active) modulus *= p;
  // residues mod the product that occur in [-H, H], with their box multiplicities
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
  const auto sizes = class_sizes(modulus, H);
  for (std::uint64_t r = 0; r < modulus; ++r) {
    if (sizes[r] > 0) classes.emplace_back(r, sizes[r]);
  }
  require_scan_budget(classes.size(), n);
  std::vector<std::vector<std::uint8_t>> tables;
  for (const auto& [p, k] : active) tables.push_back(monic_index_table(p, n));

  std::uint64_t total = 0;
  std::vector<std::uint64_t> partial(active.size(), 0);
  auto recurse = [&](auto&& self, unsigned depth, std::uint64_t weight) -> void {
    if (depth == n) {
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (tables[i][partial[i]] < active[i].second) return;
      }
      total += weight;
      return;
    }
    const auto saved = partial;
    for (const auto& [r, mult] : classes) {
      for (std::size_t i = 0; i < active.size(); ++i) partial[i] = saved[i] * active[i].first + r % active[i].first;
      self(self, depth + 1, weight * mult);
    }
    partial = saved;
  };
  recurse(recurse, 0, 1);
  return total;
}

}  // namespace vdw::fourier
