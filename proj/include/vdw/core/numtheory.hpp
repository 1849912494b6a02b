#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vdw {

using BigInt = mpz_class;
using Rational = mpq_class;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

// Nonnegative residue of x modulo m (m > 0).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t m);
BigInt ipow(const BigInt& base, unsigned long exp);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
bool is_perfect_square(const BigInt& x);
bool is_rational_square(const Rational& x);
// Largest e with p^e | x; x != 0.
int valuation(const BigInt& x, const BigInt& p);

// Prime factorization of |x| (x != 0), ascending primes.
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& x);

// Accepts "a", "a/b" and finite decimals such as "-2.5".
Rational parse_rational(std::string_view text);
std::string to_decimal(const Rational& x, int digits);
double to_double(const Rational& x);

}  // namespace vdw
