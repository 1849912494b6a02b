#include "vdw/polyarith/resultant.hpp"

#include <utility>

#include "vdw/core/error.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"

namespace vdw::poly {

namespace {

BigInt swap_sign(int da, int db) { return (da % 2 == 1 && db % 2 == 1) ? BigInt(-1) : BigInt(1); }

BigInt squared_norm(const IntPoly& f) {
  BigInt s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  return s;
}

BigInt upow(const BigInt& b, int e) { return ipow(b, static_cast<unsigned long>(e)); }

}  // namespace

// Subresultant PRS (Cohen, Algorithm 3.3.7).
BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  BigInt s = 1;
  if (a.degree() < b.degree()) {
    s = swap_sign(a.degree(), b.degree());
    std::swap(a, b);
  }
  if (b.degree() == 0) return s * upow(b.leading(), a.degree());
  const BigInt ca = a.content(), cb = b.content();
  const BigInt t = upow(ca, b.degree()) * upow(cb, a.degree());
  a = a.divexact(ca);
  b = b.divexact(cb);
  BigInt gg = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = r.divexact(gg * upow(h, delta));
    gg = a.leading();
    // h <- g^delta / h^(delta - 1), exact
    if (delta > 0) h = upow(gg, delta) / upow(h, delta - 1);
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  const BigInt last = upow(b.leading(), da) / upow(h, da - 1);
  return s * t * last;
}

BigInt resultant_modular(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree(), n = g.degree();
  if (m == 0) return upow(f.leading(), n);
  if (n == 0) return upow(g.leading(), m);
  // Hadamard: |Res| <= B with B^2 = |f|^(2n) |g|^(2m); need modulus M with M^2 > 4 B^2
  const BigInt bound_sq = upow(squared_norm(f), n) * upow(squared_norm(g), m);
  BigInt modulus = 1, value = 0;
  std::uint64_t p = (std::uint64_t{1} << 62);
  while (modulus * modulus <= 4 * bound_sq) {
    do {
      --p;
    } while (!is_prime(p));
    if (mod_u64(f.leading(), p) == 0 || mod_u64(g.leading(), p) == 0) continue;
    const std::uint64_t r = resultant_mod_p(PolyModP::from_int(f, p), PolyModP::from_int(g, p));
    // CRT: value + modulus * k == r (mod p)
    const std::uint64_t cur = mod_u64(value, p);
    const std::uint64_t diff = r >= cur ? r - cur : r + p - cur;
    const std::uint64_t k = mul_mod(diff, inv_mod(mod_u64(modulus, p), p), p);
    value += modulus * BigInt(static_cast<unsigned long>(k));
    modulus *= BigInt(static_cast<unsigned long>(p));
  }
  if (2 * value > modulus) value -= modulus;
  return value;
}

namespace {

BigInt disc_from_res(const IntPoly& f, const BigInt& res) {
  const int n = f.degree();
  BigInt d = res / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace

BigInt discriminant(const IntPoly& f) {
  require(f.degree() >= 1, ErrorCode::kInvalidArgument, "discriminant needs degree >= 1");
  return disc_from_res(f, resultant(f, f.derivative()));
}

BigInt discriminant_modular(const IntPoly& f) {
  require(f.degree() >= 1, ErrorCode::kInvalidArgument, "discriminant needs degree >= 1");
  return disc_from_res(f, resultant_modular(f, f.derivative()));
}

BigInt disc(const MonicIntPoly& f) { return discriminant(f.to_poly()); }

IntPoly interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  require(ys.size() == n && n >= 1, ErrorCode::kInvalidArgument, "interpolation needs matching nonempty samples");
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<BigInt> basis{BigInt(1)};
    BigInt denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<BigInt> next(basis.size() + 1, BigInt(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    require(denom != 0, ErrorCode::kInvalidArgument, "interpolation nodes must be distinct");
    Rational weight(ys[i], denom);
    weight.canonicalize();
    for (std::size_t k = 0; k < n; ++k) coeffs[k] += basis[k] * weight;
  }
  std::vector<BigInt> out;
  out.reserve(n);
  for (const auto& c : coeffs) {
    require(c.get_den() == 1, ErrorCode::kInvariantViolation, "interpolated polynomial is not integral");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

IntPoly disc_in_last_coefficient(const std::vector<BigInt>& prefix) {
  // degree n - 1 in the last coefficient: sample at t = 0..n-1
  const std::size_t n = prefix.size() + 1;
  std::vector<BigInt> a = prefix, xs, ys;
  a.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    a.back() = static_cast<unsigned long>(i);
    xs.push_back(a.back());
    ys.push_back(disc(MonicIntPoly(a)));
  }
  return interpolate_integer(xs, ys);
}

BigInt double_disc(const std::vector<BigInt>& prefix) {
  require(prefix.size() + 1 >= 3, ErrorCode::kDegreeTooSmall, "double discriminant needs n >= 3");
  const IntPoly d = disc_in_last_coefficient(prefix);
  return discriminant(d);
}

}  // namespace vdw::poly
