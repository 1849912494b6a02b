#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "vdw/core/numtheory.hpp"

namespace vdw::poly {

// Dense integer polynomial, coefficients in ascending degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<BigInt> ascending);
  static IntPoly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int i) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly derivative() const;
  BigInt operator()(const BigInt& x) const;
  // gcd of coefficients, nonnegative
  BigInt content() const;
  // Divided by content, leading coefficient made positive.
  IntPoly primitive_part() const;
  // f(x + c)
  IntPoly shift(const BigInt& c) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  // Exact division of every coefficient; c must divide the content.
  IntPoly divexact(const BigInt& c) const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& f, unsigned e);
// lc(b)^(deg a - deg b + 1) a mod b, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Quotient when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Yun: primitive squarefree g_i, pairwise coprime, with pp(f) = +-prod g_i^(e_i), e_i ascending.
std::vector<std::pair<IntPoly, unsigned>> squarefree_factorization(const IntPoly& f);

// x^n + a_1 x^(n-1) + ... + a_n with n >= 1.
class MonicIntPoly {
 public:
  MonicIntPoly() = default;
  explicit MonicIntPoly(std::vector<BigInt> a);
  MonicIntPoly(std::initializer_list<long> a);
  static MonicIntPoly from_poly(const IntPoly& f);

  std::size_t degree() const { return a_.size(); }
  const std::vector<BigInt>& coeffs() const { return a_; }
  // 1-based: a(1) = a_1.
  const BigInt& a(std::size_t i) const { return a_.at(i - 1); }
  IntPoly to_poly() const;
  // ["a_1",...,"a_n"] with decimal strings
  std::string to_json() const;
  friend bool operator==(const MonicIntPoly&, const MonicIntPoly&) = default;

 private:
  std::vector<BigInt> a_;
};

BigInt height(const MonicIntPoly& f);
BigInt height(const IntPoly& f);  // max |coefficient| below the leading one for monic input

}  // namespace vdw::poly
