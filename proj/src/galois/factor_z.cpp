#include "vdw/galois/factor_z.hpp"

#include <algorithm>

#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"

namespace vdw::galois {

using poly::FactorPower;
using poly::PolyModP;

namespace {

// Coefficients reduced into [0, m).
IntPoly reduce(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> c = f.coeffs();
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly symmetric(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> c = reduce(f, m).coeffs();
  for (auto& x : c) {
    if (2 * x > m) x -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce(a * b, m); }

// a = q b + r modulo m, with b monic.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  std::vector<BigInt> r = reduce(a, m).coeffs();
  const int db = b.degree();
  if (static_cast<int>(r.size()) - 1 < db) return {IntPoly(), IntPoly(std::move(r))};
  std::vector<BigInt> q(r.size() - static_cast<std::size_t>(db), 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    BigInt t = r[static_cast<std::size_t>(i)];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    if (t == 0) continue;
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {reduce(IntPoly(std::move(q)), m), reduce(IntPoly(std::move(r)), m)};
}

IntPoly lift_mod_p(const PolyModP& f) {
  std::vector<BigInt> c;
  for (std::uint64_t x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m  ->  same relations mod m^2.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const BigInt& m) {
  const BigInt m2 = m * m;
  const IntPoly e = reduce(f - g * h, m2);
  auto [q, r] = divmod_monic(s * e, h, m2);
  const IntPoly g2 = reduce(g + t * e + q * g, m2);
  const IntPoly h2 = reduce(h + r, m2);
  const IntPoly b = reduce(s * g2 + t * h2 - IntPoly{1}, m2);
  auto [c, d] = divmod_monic(s * b, h2, m2);
  s = reduce(s - d, m2);
  t = reduce(t - t * b - c * g2, m2);
  g = g2;
  h = h2;
}

// Lifts the monic factorization f = prod factors mod p to modulus >= target.
void multifactor_lift(const IntPoly& f, const std::vector<PolyModP>& factors, std::uint64_t p,
                      const BigInt& target, std::vector<IntPoly>& out, BigInt& modulus) {
  if (factors.size() == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t half = factors.size() / 2;
  PolyModP gbar = PolyModP::constant(p, 1), hbar = PolyModP::constant(p, 1);
  for (std::size_t i = 0; i < factors.size(); ++i) (i < half ? gbar : hbar) = (i < half ? gbar : hbar) * factors[i];
  const auto eg = poly::ext_gcd(gbar, hbar);
  IntPoly g = lift_mod_p(gbar), h = lift_mod_p(hbar), s = lift_mod_p(eg.s), t = lift_mod_p(eg.t);
  BigInt m = static_cast<unsigned long>(p);
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  modulus = m;
  multifactor_lift(g, {factors.begin(), factors.begin() + static_cast<long>(half)}, p, target, out, modulus);
  multifactor_lift(h, {factors.begin() + static_cast<long>(half), factors.end()}, p, target, out, modulus);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

bool less_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<IntPoly> factor_squarefree_monic(const IntPoly& g) {
  require(g.is_monic(), ErrorCode::kInvalidArgument, "factor_squarefree_monic needs a monic polynomial");
  const int n = g.degree();
  if (n <= 1) return {g};
  // prime with g squarefree mod p and the fewest modular factors among the first few such primes
  std::vector<PolyModP> best;
  std::uint64_t best_p = 0;
  int good = 0;
  for (std::uint64_t p = 3; good < 6; p = next_prime(p)) {
    const PolyModP gp = PolyModP::from_int(g, p);
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    ++good;
    std::vector<PolyModP> facs;
    for (const FactorPower& fp : poly::factor_mod_p(gp)) facs.push_back(fp.factor);
    if (facs.size() == 1) return {g};
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
  }
  // factor coefficients are bounded by 2^n |g|_2 (Mignotte); need modulus > 2 B
  BigInt norm_sq = 0;
  for (const auto& c : g.coeffs()) norm_sq += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm_sq.get_mpz_t());
  const BigInt target = 2 * (ipow(2, static_cast<unsigned long>(n)) * (root + 1)) + 1;
  std::vector<IntPoly> lifted;
  BigInt modulus = static_cast<unsigned long>(best_p);
  multifactor_lift(g, best, best_p, target, lifted, modulus);
  for (auto& u : lifted) u = reduce(u, modulus);

  std::vector<IntPoly> result;
  IntPoly rest = g;
  for (std::size_t size = 1; 2 * size <= lifted.size(); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    bool restart = true;
    while (restart) {
      restart = false;
      if (2 * size > lifted.size()) break;
      do {
        IntPoly cand{1};
        for (std::size_t i : idx) cand = mulmod(cand, lifted[i], modulus);
        cand = symmetric(cand, modulus);
        if (rest[0] != 0 && (cand[0] == 0 || rest[0] % cand[0] != 0)) continue;
        auto q = poly::divide_exact(rest, cand);
        if (!q) continue;
        result.push_back(cand);
        rest = *q;
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        restart = true;
        break;
      } while (next_combination(idx, lifted.size()));
    }
  }
  if (rest.degree() >= 1) result.push_back(rest);
  std::sort(result.begin(), result.end(), less_poly);
  return result;
}

std::vector<IntFactor> factor_over_Z(const MonicIntPoly& f) {
  std::vector<IntFactor> out;
  for (auto& [g, e] : poly::squarefree_factorization(f.to_poly())) {
    const IntPoly monic_g = g.leading() < 0 ? -g : g;
    for (auto& piece : factor_squarefree_monic(monic_g)) out.push_back({MonicIntPoly::from_poly(piece), e});
  }
  std::sort(out.begin(), out.end(), [](const IntFactor& a, const IntFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return less_poly(a.factor.to_poly(), b.factor.to_poly());
  });
  return out;
}

bool is_irreducible_over_Z(const MonicIntPoly& f) {
  const auto factors = factor_over_Z(f);
  return factors.size() == 1 && factors[0].multiplicity == 1;
}

}  // namespace vdw::galois
