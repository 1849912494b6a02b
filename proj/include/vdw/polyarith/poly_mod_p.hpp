#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/polyarith/int_poly.hpp"

namespace vdw::poly {

// Polynomial over F_p (p < 2^63), coefficients ascending in [0, p), no trailing zeros.
class PolyModP {
 public:
  explicit PolyModP(std::uint64_t p);
  PolyModP(std::uint64_t p, std::vector<std::uint64_t> ascending);
  static PolyModP from_int(const IntPoly& f, std::uint64_t p);
  static PolyModP from_monic(const MonicIntPoly& f, std::uint64_t p);
  static PolyModP x(std::uint64_t p);
  static PolyModP constant(std::uint64_t p, std::uint64_t c);

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  PolyModP monic() const;
  PolyModP derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  PolyModP operator+(const PolyModP& rhs) const;
  PolyModP operator-(const PolyModP& rhs) const;
  PolyModP operator*(const PolyModP& rhs) const;
  PolyModP scale(std::uint64_t c) const;
  // Quotient and remainder; divisor nonzero.
  std::pair<PolyModP, PolyModP> divmod(const PolyModP& d) const;
  PolyModP operator%(const PolyModP& d) const { return divmod(d).second; }
  PolyModP operator/(const PolyModP& d) const { return divmod(d).first; }
  friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const PolyModP& a, const PolyModP& b);

  std::string to_string() const;

 private:
  void trim();
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

// Monic gcd (zero if both zero).
PolyModP gcd(const PolyModP& a, const PolyModP& b);
// g = s a + t b with g monic.
struct ExtGcd {
  PolyModP g, s, t;
};
ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b);
PolyModP pow_mod(const PolyModP& base, const BigInt& exponent, const PolyModP& modulus);
PolyModP pow_mod(const PolyModP& base, std::uint64_t exponent, const PolyModP& modulus);
// Resultant over F_p, same sign convention as the integer resultant.
std::uint64_t resultant_mod_p(const PolyModP& f, const PolyModP& g);

// Rabin's test; f of degree >= 1.
bool is_irreducible(const PolyModP& f);

struct FactorPower {
  PolyModP factor;
  unsigned multiplicity;
  friend bool operator==(const FactorPower& a, const FactorPower& b) {
    return a.multiplicity == b.multiplicity && a.factor == b.factor;
  }
};

// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
// Equal-degree splitting draws from a generator seeded by (f, p, seed).
std::vector<FactorPower> factor_mod_p(const PolyModP& f, std::uint64_t seed = 0);
std::vector<FactorPower> squarefree_decomposition(const PolyModP& f);
// Input monic squarefree; returns (product of all degree-d factors, d).
std::vector<std::pair<PolyModP, unsigned>> distinct_degree_factorization(const PolyModP& f);

// Also throws NotPrime for composite p.
void require_prime(std::uint64_t p);

}  // namespace vdw::poly
