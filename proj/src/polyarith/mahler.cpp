#include "vdw/polyarith/mahler.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vdw/core/error.hpp"

namespace vdw::poly {

namespace {

template <typename T>
struct Cx {
  T re, im;
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator/(const Cx& o) const {
    T den = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
  }
  T norm() const { return re * re + im * im; }
};

template <typename T>
T cabs(const Cx<T>& z) {
  using std::sqrt;
  return sqrt(z.norm());
}

template <typename T>
T from_big(const BigInt& x) {
  if constexpr (std::is_same_v<T, long double>) {
    return std::stold(x.get_str());
  } else {
    return T(x.get_str());
  }
}

template <typename T>
long double to_ld(const T& x) {
  if constexpr (std::is_same_v<T, long double>) {
    return x;
  } else {
    return x.template convert_to<long double>();
  }
}

struct Interval {
  long double lo, hi;
};

// Roots of a monic squarefree polynomial (ascending coeffs, leading 1) by Aberth iteration,
// certified with inclusion disks; returns an interval for prod max(1, |root|), or nullopt.
template <typename T>
std::optional<Interval> certified_measure(const IntPoly& g, std::vector<Cx<T>>& roots) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  const int d = g.degree();
  const T u = std::numeric_limits<T>::epsilon();
  std::vector<T> coef(static_cast<std::size_t>(d) + 1), abs_coef(coef.size());
  for (int i = 0; i <= d; ++i) {
    coef[static_cast<std::size_t>(i)] = from_big<T>(g[i]);
    abs_coef[static_cast<std::size_t>(i)] = abs(coef[static_cast<std::size_t>(i)]);
  }
  auto eval = [&](const Cx<T>& z, Cx<T>& value, Cx<T>& deriv) {
    value = {coef[static_cast<std::size_t>(d)], T(0)};
    deriv = {T(0), T(0)};
    for (int i = d - 1; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + Cx<T>{coef[static_cast<std::size_t>(i)], T(0)};
    }
  };
  if (static_cast<int>(roots.size()) != d) {
    // Cauchy bound start radius, angles offset to break symmetry
    T radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max<T>(radius, abs_coef[static_cast<std::size_t>(i)]);
    radius = std::min<T>(T(1) + radius, T(2) * pow(radius + T(1), T(1) / T(d)));
    roots.resize(static_cast<std::size_t>(d));
    const T two_pi = T(2) * boost::math::constants::pi<T>();
    for (int i = 0; i < d; ++i) {
      T angle = two_pi * T(i) / T(d) + T(0.4);
      roots[static_cast<std::size_t>(i)] = {radius * cos(angle), radius * sin(angle)};
    }
  }
  const T stop = u * T(16);
  for (int iter = 0; iter < 2000; ++iter) {
    T max_step = 0;
    for (int i = 0; i < d; ++i) {
      Cx<T>& zi = roots[static_cast<std::size_t>(i)];
      Cx<T> v, dv;
      eval(zi, v, dv);
      if (v.norm() == T(0)) continue;
      Cx<T> newton = v / dv;
      Cx<T> sum{T(0), T(0)};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        sum = sum + Cx<T>{T(1), T(0)} / (zi - roots[static_cast<std::size_t>(j)]);
      }
      Cx<T> step = newton / (Cx<T>{T(1), T(0)} - newton * sum);
      zi = zi - step;
      max_step = std::max<T>(max_step, cabs(step) / std::max<T>(T(1), cabs(zi)));
    }
    if (max_step <= stop) break;
  }
  // Inclusion radii r_i = d |g(z_i)| / |prod_{j != i} (z_i - z_j)|, inflated for rounding.
  std::vector<T> rad(static_cast<std::size_t>(d));
  const T inflate = T(1) + T(8 * d + 8) * u;
  for (int i = 0; i < d; ++i) {
    const Cx<T>& zi = roots[static_cast<std::size_t>(i)];
    Cx<T> v, dv;
    eval(zi, v, dv);
    T az = cabs(zi), horner_err = 0, zp = 1;
    for (int k = 0; k <= d; ++k) {
      horner_err += abs_coef[static_cast<std::size_t>(k)] * zp;
      zp *= az;
    }
    horner_err *= T(8 * d + 8) * u;
    Cx<T> prod{T(1), T(0)};
    for (int j = 0; j < d; ++j) {
      if (j != i) prod = prod * (zi - roots[static_cast<std::size_t>(j)]);
    }
    T den = cabs(prod);
    if (!(den > T(0))) return std::nullopt;
    rad[static_cast<std::size_t>(i)] = T(d) * (cabs(v) + horner_err) / den * inflate * inflate;
  }
  // Connected components of overlapping disks; a component of k disks holds exactly k roots.
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      T dist = cabs(roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)]);
      if (dist <= (rad[static_cast<std::size_t>(i)] + rad[static_cast<std::size_t>(j)]) * inflate) {
        parent[static_cast<std::size_t>(find(i))] = find(j);
      }
    }
  }
  long double lo = 1, hi = 1;
  for (int c = 0; c < d; ++c) {
    if (find(c) != c) continue;
    T min_mod = std::numeric_limits<T>::max(), max_mod = 0;
    int k = 0;
    for (int i = 0; i < d; ++i) {
      if (find(i) != c) continue;
      ++k;
      T az = cabs(roots[static_cast<std::size_t>(i)]);
      min_mod = std::min<T>(min_mod, az / inflate - rad[static_cast<std::size_t>(i)]);
      max_mod = std::max<T>(max_mod, az * inflate + rad[static_cast<std::size_t>(i)]);
    }
    T low = pow(std::max<T>(T(1), min_mod), T(k)) / inflate;
    T high = pow(std::max<T>(T(1), max_mod), T(k)) * inflate;
    lo *= to_ld(low);
    hi *= to_ld(high);
  }
  // long double products of d terms
  const long double ld_u = std::numeric_limits<long double>::epsilon();
  lo *= 1 - 4 * (d + 1) * ld_u;
  hi *= 1 + 4 * (d + 1) * ld_u;
  return Interval{lo, hi};
}

template <typename T>
std::optional<Interval> measure_at(const std::vector<std::pair<IntPoly, unsigned>>& parts, long double tol) {
  long double lo = 1, hi = 1;
  for (const auto& [g, e] : parts) {
    std::vector<Cx<T>> roots;
    auto iv = certified_measure<T>(g, roots);
    if (!iv) return std::nullopt;
    lo *= std::pow(iv->lo, static_cast<long double>(e));
    hi *= std::pow(iv->hi, static_cast<long double>(e));
  }
  const long double ld_u = std::numeric_limits<long double>::epsilon();
  lo *= 1 - 8 * ld_u * static_cast<long double>(parts.size() + 1);
  hi *= 1 + 8 * ld_u * static_cast<long double>(parts.size() + 1);
  if ((hi - lo) / 2 > tol) return std::nullopt;
  return Interval{lo, hi};
}

using boost::multiprecision::cpp_bin_float;
using boost::multiprecision::number;
using Float40 = number<cpp_bin_float<40>>;
using Float80 = number<cpp_bin_float<80>>;
using Float160 = number<cpp_bin_float<160>>;
using Float320 = number<cpp_bin_float<320>>;

}  // namespace

MahlerMeasure mahler_measure(const MonicIntPoly& f, double tol) {
  require(tol >= 1e-9, ErrorCode::kInvalidArgument, "tolerance must be at least 1e-9");
  const IntPoly poly = f.to_poly();
  std::vector<std::pair<IntPoly, unsigned>> parts;
  for (auto& [g, e] : squarefree_factorization(poly)) {
    // leading coefficient of a monic input's factor is +-1
    parts.emplace_back(g.leading() < 0 ? -g : g, e);
  }
  auto finish = [](const Interval& iv, int level) {
    return MahlerMeasure{(iv.lo + iv.hi) / 2, (iv.hi - iv.lo) / 2, level};
  };
  const long double t = tol;
  if (auto iv = measure_at<long double>(parts, t)) return finish(*iv, 0);
  if (auto iv = measure_at<Float40>(parts, t)) return finish(*iv, 1);
  if (auto iv = measure_at<Float80>(parts, t)) return finish(*iv, 2);
  if (auto iv = measure_at<Float160>(parts, t)) return finish(*iv, 3);
  if (auto iv = measure_at<Float320>(parts, t)) return finish(*iv, 4);
  fail(ErrorCode::kToleranceUnreachable, "Mahler measure could not be certified for " + f.to_json());
}

}  // namespace vdw::poly
