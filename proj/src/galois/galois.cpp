#include "vdw/galois/galois.hpp"

#include <algorithm>
#include <mutex>

#include "json.hpp"
#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"
#include "vdw/polyarith/resultant.hpp"

namespace vdw::galois {

using poly::PolyModP;

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kReducible: return "reducible";
    case VerdictStatus::kExactGroup: return "exactGroup";
    case VerdictStatus::kCertifiedSn: return "certifiedSn";
    case VerdictStatus::kCertifiedSubsetAn: return "certifiedSubsetAn";
    case VerdictStatus::kUnresolved: return "unresolved";
  }
  return "unknown";
}

std::string GaloisVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = std::string(galois::to_string(status));
  if (!group.empty()) j["group"] = group;
  if (order != 0) j["order"] = order;
  if (status == VerdictStatus::kReducible) j["factorDegrees"] = factor_degrees;
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : evidence) ev.push_back({{"prime", e.prime}, {"cycleType", e.cycle_type}});
  j["evidence"] = ev;
  return j.dump();
}

const std::vector<GroupInfo>& transitive_groups_upto5() {
  static const std::vector<GroupInfo> groups = {
      {"S1", 1, 1},  {"C2", 2, 2},  {"C3", 3, 3},   {"S3", 3, 6},  {"C4", 4, 4},
      {"V4", 4, 4},  {"D4", 4, 8},  {"A4", 4, 12},  {"S4", 4, 24}, {"C5", 5, 5},
      {"D5", 5, 10}, {"F20", 5, 20}, {"A5", 5, 60}, {"S5", 5, 120},
  };
  return groups;
}

std::string canonical_group_name(const std::string& name) {
  if (name == "S2") return "C2";
  if (name == "A3") return "C3";
  for (const auto& g : transitive_groups_upto5()) {
    if (g.name == name) return name;
  }
  fail(ErrorCode::kUnknownGroup, "unknown transitive group '" + name + "'");
}

std::string sn_name(unsigned n) { return n == 2 ? "C2" : "S" + std::to_string(n); }

namespace {

GaloisVerdict exact(const std::string& name) {
  for (const auto& g : transitive_groups_upto5()) {
    if (g.name == name) return GaloisVerdict{VerdictStatus::kExactGroup, name, g.order, {}, {}};
  }
  fail(ErrorCode::kInvariantViolation, "unlisted group " + name);
}

bool is_square(const BigInt& x) { return x >= 0 && is_perfect_square(x); }

// Number of linear factors over Z of a monic squarefree polynomial.
std::size_t rational_root_count(const IntPoly& r) {
  std::size_t count = 0;
  for (const auto& piece : factor_squarefree_monic(r)) count += piece.degree() == 1;
  return count;
}

bool squarefree(const IntPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

std::vector<BigInt> range_nodes(std::size_t count) {
  std::vector<BigInt> xs;
  for (std::size_t i = 0; i < count; ++i) xs.emplace_back(static_cast<unsigned long>(i));
  return xs;
}

// prod_i (z - alpha_i^2 - c alpha_i) over the roots of g.
IntPoly tschirnhaus(const IntPoly& g, long c) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const auto xs = range_nodes(n + 1);
  std::vector<BigInt> ys;
  for (const auto& z : xs) ys.push_back(poly::resultant(g, IntPoly{std::vector<BigInt>{z, BigInt(-c), BigInt(-1)}}));
  return poly::interpolate_integer(xs, ys);
}

// Res_y(g(y), g(x + c y)) = prod_{i,j} (x + c alpha_i - alpha_j).
IntPoly trager_norm(const IntPoly& g, long c) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const auto xs = range_nodes(n * n + 1);
  std::vector<BigInt> ys;
  for (const auto& x : xs) {
    // g(x + c y) as a polynomial in y
    IntPoly shifted;
    const IntPoly lin{std::vector<BigInt>{x, BigInt(c)}};
    for (int k = g.degree(); k >= 0; --k) shifted = shifted * lin + IntPoly{std::vector<BigInt>{g[k]}};
    ys.push_back(poly::resultant(g, shifted));
  }
  return poly::interpolate_integer(xs, ys);
}

GaloisVerdict classify_quartic(const MonicIntPoly& f, const BigInt& d) {
  const IntPoly r = quartic_resolvent(f);
  const bool square = is_square(d);
  std::vector<BigInt> roots;
  for (const auto& piece : factor_squarefree_monic(r)) {
    if (piece.degree() == 1) roots.push_back(-piece[0]);
  }
  if (roots.empty()) return exact(square ? "A4" : "S4");
  if (roots.size() == 3) return exact("V4");
  // Kappe-Warren: C4 iff x^2 - theta x + d4 and x^2 + a x + (b - theta) both split over Q(sqrt(disc))
  const BigInt& theta = roots.front();
  const BigInt a = f.a(1), b = f.a(2), d4 = f.a(4);
  auto splits = [&](const BigInt& quad_disc) {
    return quad_disc == 0 || is_square(quad_disc) || is_square(quad_disc * d);
  };
  const bool c4 = splits(theta * theta - 4 * d4) && splits(a * a - 4 * (b - theta));
  return exact(c4 ? "C4" : "D4");
}

GaloisVerdict classify_quintic(const MonicIntPoly& f, const BigInt& d) {
  const bool square = is_square(d);
  IntPoly g = depress_quintic(f).to_poly();
  IntPoly r = quintic_resolvent(g[3], g[2], g[1], g[0]);
  for (long c = 1; !squarefree(r); ++c) {
    require(c < 64, ErrorCode::kInvariantViolation, "no Tschirnhaus transform made the resolvent squarefree");
    const IntPoly h = tschirnhaus(f.to_poly(), c);
    if (!squarefree(h)) continue;
    g = depress_quintic(MonicIntPoly::from_poly(h)).to_poly();
    r = quintic_resolvent(g[3], g[2], g[1], g[0]);
  }
  if (rational_root_count(r) == 0) return exact(square ? "A5" : "S5");
  if (!square) return exact("F20");
  // C5 iff the splitting field has degree 5: the norm then splits into five quintics
  for (long c = 2;; ++c) {
    require(c < 64, ErrorCode::kInvariantViolation, "no separating multiplier for the norm");
    const IntPoly norm = trager_norm(f.to_poly(), c);
    if (!squarefree(norm)) continue;
    const auto pieces = factor_squarefree_monic(norm);
    const bool c5 = pieces.size() == 5 &&
                    std::all_of(pieces.begin(), pieces.end(), [](const IntPoly& p) { return p.degree() == 5; });
    return exact(c5 ? "C5" : "D5");
  }
}

}  // namespace

IntPoly quartic_resolvent(const MonicIntPoly& f) {
  require(f.degree() == 4, ErrorCode::kDegreeOutOfRange, "quartic resolvent needs degree 4");
  const BigInt &a = f.a(1), &b = f.a(2), &c = f.a(3), &d = f.a(4);
  return IntPoly(std::vector<BigInt>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, BigInt(1)});
}

namespace {

struct ResolventTerm {
  int j;
  long coeff;
  int ep, eq, er, es;
};

constexpr ResolventTerm kQuinticResolvent[] = {
#include "quintic_resolvent.inc"
};

}  // namespace

IntPoly quintic_resolvent(const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& s) {
  std::vector<BigInt> c(7, 0);
  c[6] = 1;
  for (const auto& t : kQuinticResolvent) {
    BigInt term = t.coeff;
    term *= ipow(p, t.ep) * ipow(q, t.eq) * ipow(r, t.er) * ipow(s, t.es);
    c[static_cast<std::size_t>(6 - t.j)] += term;
  }
  return IntPoly(std::move(c));
}

MonicIntPoly depress_quintic(const MonicIntPoly& f) {
  require(f.degree() == 5, ErrorCode::kDegreeOutOfRange, "depress_quintic needs degree 5");
  // 5^5 f((y - a1)/5) = sum_k a_k 5^k (y - a1)^(5-k), a_0 = 1
  IntPoly out;
  const IntPoly lin{std::vector<BigInt>{-f.a(1), BigInt(1)}};
  for (int k = 0; k <= 5; ++k) {
    const BigInt ak = k == 0 ? BigInt(1) : f.a(static_cast<std::size_t>(k));
    out += poly::pow(lin, static_cast<unsigned>(5 - k)) * (ak * ipow(5, static_cast<unsigned long>(k)));
  }
  return MonicIntPoly::from_poly(out);
}

void self_check_quintic_resolvent() {
  static std::once_flag once;
  std::call_once(once, [] {
    const MonicIntPoly g = depress_quintic(MonicIntPoly{0, 0, 0, 0, -2});
    const IntPoly r = quintic_resolvent(g.a(2), g.a(3), g.a(4), g.a(5));
    bool has_root = false;
    for (const auto& [piece, e] : poly::squarefree_factorization(r)) {
      for (const auto& irr : factor_squarefree_monic(piece.leading() < 0 ? -piece : piece)) has_root |= irr.degree() == 1;
    }
    require(has_root, ErrorCode::kInvariantViolation, "quintic resolvent self-check failed for x^5 - 2");
  });
}

GaloisVerdict galois_group_exact(const MonicIntPoly& f) { return galois_group_exact(f, poly::disc(f)); }

GaloisVerdict galois_group_exact(const MonicIntPoly& f, const BigInt& disc_f) {
  const auto n = f.degree();
  require(n >= 2 && n <= 5, ErrorCode::kDegreeOutOfRange, "exact Galois groups need 2 <= n <= 5");
  require(disc_f != 0 && is_irreducible_over_Z(f), ErrorCode::kReducible, "polynomial is reducible: " + f.to_json());
  switch (n) {
    case 2: return exact("C2");
    case 3: return exact(is_square(disc_f) ? "C3" : "S3");
    case 4: return classify_quartic(f, disc_f);
    default:
      self_check_quintic_resolvent();
      return classify_quintic(f, disc_f);
  }
}

std::uint32_t cycle_type_witness(const std::vector<unsigned>& cycle_type, unsigned n) {
  std::uint32_t bits = 0;
  unsigned index = 0, twos = 0;
  bool others_odd = true;
  for (unsigned len : cycle_type) {
    index += len - 1;
    if (len == 2) {
      ++twos;
    } else if (len % 2 == 0) {
      others_odd = false;
    }
    if (len % 3 == 0) bits |= witness::kThreeDivides;
    if (2 * len > n && is_prime(len)) {
      bits |= witness::kBigPrimeCycle;
      if (len + 3 <= n) bits |= witness::kJordanCycle;
    }
  }
  if (index % 2 == 1) bits |= witness::kOdd;
  if (twos == 1 && others_odd) bits |= witness::kTransposition;
  return bits;
}

std::uint64_t degree_sum_mask(const poly::SplittingType& type) {
  std::uint64_t mask = 1;
  for (const auto& part : type.parts()) {
    for (unsigned e = 0; e < part.multiplicity; ++e) mask |= mask << part.degree;
  }
  return mask;
}

bool witnesses_force_sn(std::uint32_t bits, unsigned n) {
  using namespace witness;
  switch (n) {
    case 0:
    case 1:
    case 2: return true;
    case 3: return (bits & kOdd) != 0;
    case 4:
    case 5: return (bits & kThreeDivides) && (bits & kOdd);
    default:
      return (bits & kBigPrimeCycle) && ((bits & kTransposition) || ((bits & kJordanCycle) && (bits & kOdd)));
  }
}

GaloisVerdict sn_certificate(const MonicIntPoly& f, unsigned prime_budget) {
  const unsigned n = static_cast<unsigned>(f.degree());
  require(n >= 2, ErrorCode::kDegreeTooSmall, "S_n certificate needs n >= 2");
  const BigInt d = poly::disc(f);
  require(d != 0, ErrorCode::kInvalidArgument, "S_n certificate needs a nonzero discriminant");
  GaloisVerdict verdict;
  if (is_square(d)) {
    verdict.status = VerdictStatus::kCertifiedSubsetAn;
    return verdict;
  }
  std::uint32_t bits = 0;
  unsigned sampled = 0, scanned = 0;
  for (std::uint64_t p = 2; sampled < prime_budget; p = next_prime(p)) {
    require(++scanned <= 10 * prime_budget + 100, ErrorCode::kRamifiedOnly, "no unramified primes within budget");
    if (mod_u64(d, p) == 0) continue;
    ++sampled;
    const auto type = poly::splitting_type(f, p);
    const auto ct = type.cycle_type();
    verdict.evidence.push_back({p, ct});
    bits |= cycle_type_witness(ct, n);
    if (witnesses_force_sn(bits, n)) {
      verdict.status = VerdictStatus::kCertifiedSn;
      verdict.group = sn_name(n);
      verdict.order = factorial(n).get_ui();
      return verdict;
    }
  }
  return verdict;
}

}  // namespace vdw::galois
