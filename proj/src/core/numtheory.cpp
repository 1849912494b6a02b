#include "vdw/core/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "vdw/core/error.hpp"

namespace vdw {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  require(r == 1, ErrorCode::kInvalidArgument, "value not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t mod_u64(const BigInt& x, std::uint64_t m) {
  if (x.fits_slong_p()) {
    long v = x.get_si();
    long long r = static_cast<long long>(v % static_cast<long long>(m));
    if (r < 0) r += static_cast<long long>(m);
    return static_cast<std::uint64_t>(r);
  }
  BigInt r;
  BigInt mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& x) {
  return is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

int valuation(const BigInt& x, const BigInt& p) {
  require(x != 0, ErrorCode::kInvalidArgument, "valuation of zero");
  BigInt y = x;
  int v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

namespace {

BigInt pollard_rho(const BigInt& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (true) {
    BigInt c = static_cast<unsigned long>(rng() % 1000 + 1);
    BigInt x = static_cast<unsigned long>(rng() % 1000 + 2);
    BigInt y = x;
    BigInt d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& x) {
  require(x != 0, ErrorCode::kInvalidArgument, "factorization of zero");
  BigInt n = abs(x);
  std::map<BigInt, int> found;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  factor_into(n, found, rng);
  return {found.begin(), found.end()};
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  require(!s.empty(), ErrorCode::kInvalidArgument, "empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    require(valid_int(num) && valid_int(den), ErrorCode::kInvalidArgument,
            "malformed rational '" + s + "'");
    BigInt d = to_int(den);
    require(d != 0, ErrorCode::kDivisionByZero, "zero denominator in '" + s + "'");
    r = Rational(to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool negative = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    require(valid_int(ip) && (fp.empty() || valid_int(fp)) && fp.find_first_of("+-") == std::string::npos,
            ErrorCode::kInvalidArgument, "malformed decimal '" + s + "'");
    BigInt scale = ipow(10, fp.size());
    BigInt frac = fp.empty() ? BigInt(0) : BigInt(fp);
    BigInt whole = abs(to_int(ip));
    r = Rational(whole * scale + frac, scale);
    if (negative) r = -r;
  } else {
    require(valid_int(s), ErrorCode::kInvalidArgument, "malformed integer '" + s + "'");
    r = Rational(to_int(s));
  }
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& x, int digits) {
  BigInt scale = ipow(10, static_cast<unsigned long>(digits));
  Rational scaled = abs(x) * scale;
  // round half up on the magnitude
  BigInt q = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string s = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (x < 0 && q != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace vdw
