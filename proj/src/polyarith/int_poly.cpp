#include "vdw/polyarith/int_poly.hpp"

#include <algorithm>

#include "json.hpp"
#include "vdw/core/error.hpp"

namespace vdw::poly {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return divexact(c);
}

IntPoly IntPoly::shift(const BigInt& c) const {
  // Horner in x + c
  IntPoly result;
  IntPoly linear{std::vector<BigInt>{c, 1}};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * linear;
    result += IntPoly(std::vector<BigInt>{*it});
  }
  return result;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divexact(const BigInt& c) const {
  require(c != 0, ErrorCode::kDivisionByZero, "polynomial divided by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = (*this)[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) out += (unit ? "x" : "*x");
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly result{1};
  for (unsigned i = 0; i < e; ++i) result = result * f;
  return result;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), ErrorCode::kDivisionByZero, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  int e = a.degree() - db + 1;
  if (e <= 0) return a;
  while (dr >= db && dr >= 0) {
    BigInt lr = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(dr - db + i)] -= lr * b[i];
    }
    --e;
    // drop the (now zero) top coefficient and any further zeros
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  if (e > 0) {
    BigInt scale = ipow(lb, static_cast<unsigned long>(e));
    for (auto& x : r) x *= scale;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), ErrorCode::kDivisionByZero, "division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  const BigInt& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  BigInt cg;
  BigInt ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero() && v.degree() > 0) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  if (!v.is_zero()) return IntPoly{1} * cg;  // constant remainder: coprime
  return u.primitive_part() * cg;
}

MonicIntPoly::MonicIntPoly(std::vector<BigInt> a) : a_(std::move(a)) {
  require(!a_.empty(), ErrorCode::kInvalidArgument, "monic polynomial needs degree >= 1");
}

MonicIntPoly::MonicIntPoly(std::initializer_list<long> a) {
  for (long c : a) a_.emplace_back(c);
  require(!a_.empty(), ErrorCode::kInvalidArgument, "monic polynomial needs degree >= 1");
}

MonicIntPoly MonicIntPoly::from_poly(const IntPoly& f) {
  require(f.is_monic() && f.degree() >= 1, ErrorCode::kInvalidArgument, "polynomial is not monic of degree >= 1");
  std::vector<BigInt> a(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) a[static_cast<std::size_t>(i - 1)] = f[f.degree() - i];
  return MonicIntPoly(std::move(a));
}

IntPoly MonicIntPoly::to_poly() const {
  std::vector<BigInt> c(a_.size() + 1);
  c[a_.size()] = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) c[a_.size() - 1 - i] = a_[i];
  return IntPoly(std::move(c));
}

std::string MonicIntPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : a_) j.push_back(c.get_str());
  return j.dump();
}

BigInt height(const MonicIntPoly& f) {
  BigInt h = 0;
  for (const auto& c : f.coeffs()) h = std::max(h, BigInt(abs(c)));
  return h;
}

BigInt height(const IntPoly& f) {
  BigInt h = 0;
  for (int i = 0; i < f.degree(); ++i) h = std::max(h, BigInt(abs(f[i])));
  return h;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_factorization(const IntPoly& f) {
  require(f.degree() >= 1, ErrorCode::kInvalidArgument, "squarefree factorization needs degree >= 1");
  // Yun's algorithm over Z (characteristic 0)
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly a = f.primitive_part();
  IntPoly b = gcd(a, a.derivative());
  IntPoly c = *divide_exact(a, b);
  IntPoly d = *divide_exact(a.derivative(), b) - c.derivative();
  for (unsigned i = 1; c.degree() >= 1; ++i) {
    IntPoly g = gcd(c, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    c = *divide_exact(c, g);
    d = *divide_exact(d, g) - c.derivative();
  }
  return out;
}

}  // namespace vdw::poly
