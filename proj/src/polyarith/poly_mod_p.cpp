#include "vdw/polyarith/poly_mod_p.hpp"

#include <algorithm>
#include <random>

#include "vdw/core/error.hpp"

namespace vdw::poly {

void require_prime(std::uint64_t p) {
  require(is_prime(p), ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
}

PolyModP::PolyModP(std::uint64_t p) : p_(p) {
  require(p >= 2 && p < (std::uint64_t{1} << 63), ErrorCode::kInvalidArgument, "modulus out of range");
}

PolyModP::PolyModP(std::uint64_t p, std::vector<std::uint64_t> ascending) : PolyModP(p) {
  c_ = std::move(ascending);
  for (auto& x : c_) x %= p_;
  trim();
}

PolyModP PolyModP::from_int(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_u64(f.coeffs()[i], p);
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::from_monic(const MonicIntPoly& f, std::uint64_t p) {
  const std::size_t n = f.degree();
  std::vector<std::uint64_t> c(n + 1);
  c[n] = 1 % p;
  for (std::size_t i = 1; i <= n; ++i) c[n - i] = mod_u64(f.a(i), p);
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::x(std::uint64_t p) { return PolyModP(p, {0, 1}); }

PolyModP PolyModP::constant(std::uint64_t p, std::uint64_t c) { return PolyModP(p, {c}); }

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::mul(std::uint64_t a, std::uint64_t b) const {
  if (p_ < (std::uint64_t{1} << 32)) return a * b % p_;
  return mul_mod(a, b, p_);
}

PolyModP PolyModP::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scale(inv_mod(leading(), p_));
}

PolyModP PolyModP::derivative() const {
  PolyModP d(p_);
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = mul(c_[i], i % p_);
  d.trim();
  return d;
}

std::uint64_t PolyModP::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul(acc, x) + *it;
    if (acc >= p_) acc -= p_;
  }
  return acc;
}

PolyModP PolyModP::operator+(const PolyModP& rhs) const {
  PolyModP r(p_);
  r.c_.resize(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t s = (*this)[static_cast<int>(i)] + rhs[static_cast<int>(i)];
    r.c_[i] = s >= p_ ? s - p_ : s;
  }
  r.trim();
  return r;
}

PolyModP PolyModP::operator-(const PolyModP& rhs) const {
  PolyModP r(p_);
  r.c_.resize(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t a = (*this)[static_cast<int>(i)], b = rhs[static_cast<int>(i)];
    r.c_[i] = a >= b ? a - b : a + p_ - b;
  }
  r.trim();
  return r;
}

PolyModP PolyModP::operator*(const PolyModP& rhs) const {
  PolyModP r(p_);
  if (is_zero() || rhs.is_zero()) return r;
  r.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      std::uint64_t s = r.c_[i + j] + mul(c_[i], rhs.c_[j]);
      r.c_[i + j] = s >= p_ ? s - p_ : s;
    }
  }
  r.trim();
  return r;
}

PolyModP PolyModP::scale(std::uint64_t c) const {
  PolyModP r = *this;
  c %= p_;
  for (auto& x : r.c_) x = mul(x, c);
  r.trim();
  return r;
}

std::pair<PolyModP, PolyModP> PolyModP::divmod(const PolyModP& d) const {
  require(!d.is_zero(), ErrorCode::kDivisionByZero, "division by zero polynomial mod p");
  PolyModP q(p_), r = *this;
  if (degree() < d.degree()) return {q, r};
  const int dd = d.degree();
  const std::uint64_t inv = inv_mod(d.leading(), p_);
  q.c_.assign(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t top = r.c_[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    std::uint64_t f = mul(top, inv);
    q.c_[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      std::uint64_t sub = mul(f, d.c_[static_cast<std::size_t>(j)]);
      std::uint64_t& slot = r.c_[static_cast<std::size_t>(i - dd + j)];
      slot = slot >= sub ? slot - sub : slot + p_ - sub;
    }
  }
  r.c_.resize(static_cast<std::size_t>(dd));
  r.trim();
  q.trim();
  return {q, r};
}

bool operator<(const PolyModP& a, const PolyModP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string PolyModP::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::uint64_t c = (*this)[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i > 0) out += (c != 1 ? "*x" : "x");
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
  PolyModP u = a, v = b;
  while (!v.is_zero()) {
    PolyModP r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b) {
  const std::uint64_t p = a.p();
  PolyModP r0 = a, r1 = b;
  PolyModP s0 = PolyModP::constant(p, 1), s1(p);
  PolyModP t0(p), t1 = PolyModP::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = inv_mod(r0.leading(), p);
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

PolyModP pow_mod(const PolyModP& base, const BigInt& exponent, const PolyModP& modulus) {
  PolyModP result = PolyModP::constant(base.p(), 1) % modulus;
  PolyModP b = base % modulus;
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

PolyModP pow_mod(const PolyModP& base, std::uint64_t exponent, const PolyModP& modulus) {
  PolyModP result = PolyModP::constant(base.p(), 1) % modulus;
  PolyModP b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent) b = (b * b) % modulus;
  }
  return result;
}

std::uint64_t resultant_mod_p(const PolyModP& f, const PolyModP& g) {
  const std::uint64_t p = f.p();
  if (f.is_zero() || g.is_zero()) return 0;
  std::uint64_t acc = 1;
  PolyModP a = f, b = g;
  // Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r), r = a mod b
  while (true) {
    if (b.degree() == 0) return mul_mod(acc, vdw::pow_mod(b.leading(), static_cast<std::uint64_t>(a.degree()), p), p);
    if (a.degree() == 0) return mul_mod(acc, vdw::pow_mod(a.leading(), static_cast<std::uint64_t>(b.degree()), p), p);
    PolyModP r = a % b;
    if (r.is_zero()) return 0;
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) acc = (p - acc) % p;
    acc = mul_mod(acc, vdw::pow_mod(b.leading(), static_cast<std::uint64_t>(a.degree() - r.degree()), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

PolyModP frobenius_power(const PolyModP& h, const PolyModP& f) {
  return pow_mod(h, f.p(), f);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^k) mod f by k Frobenius steps
PolyModP x_pow_p_power(const PolyModP& f, unsigned k) {
  PolyModP h = PolyModP::x(f.p()) % f;
  for (unsigned i = 0; i < k; ++i) h = frobenius_power(h, f);
  return h;
}

std::uint64_t seed_from(const PolyModP& f, std::uint64_t seed) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ seed ^ (f.p() * 0xbf58476d1ce4e5b9ULL);
  for (std::uint64_t c : f.coeffs()) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void equal_degree_split(const PolyModP& f, unsigned d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.p();
  const BigInt exponent = (ipow(BigInt(static_cast<unsigned long>(p)), d) - 1) / 2;
  while (true) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = rng() % p;
    PolyModP a(p, coeffs);
    if (a.degree() < 1) continue;
    PolyModP b(p);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      PolyModP t = a % f, acc = a % f;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = pow_mod(a, exponent, f) - PolyModP::constant(p, 1);
    }
    PolyModP g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const PolyModP& f) {
  require_prime(f.p());
  require(f.degree() >= 1, ErrorCode::kInvalidArgument, "irreducibility of a constant");
  const PolyModP g = f.monic();
  const unsigned n = static_cast<unsigned>(g.degree());
  const PolyModP x = PolyModP::x(g.p()) % g;
  if (!(x_pow_p_power(g, n) == x)) return false;
  for (std::uint64_t q : prime_divisors(n)) {
    PolyModP h = x_pow_p_power(g, n / static_cast<unsigned>(q));
    if (gcd(h - x, g).degree() != 0) return false;
  }
  return true;
}

std::vector<FactorPower> squarefree_decomposition(const PolyModP& f) {
  require(!f.is_zero(), ErrorCode::kInvalidArgument, "squarefree decomposition of zero");
  const std::uint64_t p = f.p();
  std::vector<FactorPower> out;
  PolyModP g = f.monic();
  if (g.degree() <= 0) return out;
  PolyModP c = gcd(g, g.derivative());
  PolyModP w = g / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP fac = w / y;
    if (fac.degree() > 0) out.push_back({fac, i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p; take the p-th root coefficientwise (a^p = a in F_p)
    std::vector<std::uint64_t> root(static_cast<std::size_t>(c.degree()) / p + 1);
    for (std::size_t j = 0; j < root.size(); ++j) root[j] = c[static_cast<int>(j * p)];
    for (auto& fp : squarefree_decomposition(PolyModP(p, root))) {
      fp.multiplicity *= static_cast<unsigned>(p);
      out.push_back(fp);
    }
  }
  return out;
}

std::vector<std::pair<PolyModP, unsigned>> distinct_degree_factorization(const PolyModP& f) {
  std::vector<std::pair<PolyModP, unsigned>> out;
  PolyModP rest = f.monic();
  const PolyModP x = PolyModP::x(f.p());
  PolyModP h = x % rest;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = frobenius_power(h, rest);
    PolyModP g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<FactorPower> factor_mod_p(const PolyModP& f, std::uint64_t seed) {
  require_prime(f.p());
  require(!f.is_zero(), ErrorCode::kInvalidArgument, "factorization of the zero polynomial");
  std::mt19937_64 rng(seed_from(f, seed));
  std::vector<FactorPower> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [prod, d] : distinct_degree_factorization(part)) {
      std::vector<PolyModP> pieces;
      equal_degree_split(prod, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

}  // namespace vdw::poly
