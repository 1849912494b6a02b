#include "vdw/counting/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "vdw/core/error.hpp"

namespace vdw::counting {

void BoundInputs::validate() const {
  require(n >= 2, ErrorCode::kInvalidArgument, "bound needs n >= 2");
  require(k >= 1 && k <= n - 1, ErrorCode::kInvalidArgument, "bound needs 1 <= ind <= n-1");
  require(a > 0, ErrorCode::kInvalidArgument, "a(G) must be positive");
  require(u == 0 || u == Rational(1, n * (n - 1)), ErrorCode::kInvalidArgument, "u must be 0 or 1/(n(n-1))");
}

BoundReport bound_calculator(const BoundInputs& in) {
  in.validate();
  const Rational n = in.n, inv_k = Rational(1, in.k);
  const Rational denom = in.a + 1 - inv_k - in.u;
  require(denom != 0, ErrorCode::kDivisionByZero, "a + 1 - 1/k - u vanishes");
  BoundReport r;
  r.term1 = n + 1 - in.k;
  r.term2 = n - (n - 1) * (1 - inv_k) / denom;
  r.term3 = (2 * n - 2) * (in.a - in.u) + 1;
  r.chosen = std::min(std::max(r.term1, r.term2), r.term3);
  r.ystar = (n - 1) / denom;
  for (auto* x : {&r.term1, &r.term2, &r.term3, &r.chosen, &r.ystar}) x->canonicalize();
  return r;
}

std::string BoundReport::to_json(int digits) const {
  nlohmann::ordered_json j;
  const std::pair<const char*, const Rational*> fields[] = {
      {"term1Exp", &term1}, {"term2Exp", &term2}, {"term3Exp", &term3}, {"chosenExp", &chosen}, {"Ystar", &ystar}};
  for (const auto& [name, value] : fields) {
    j[name] = to_decimal(*value, digits);
    j[std::string(name) + "Exact"] = value->get_str();
  }
  return j.dump();
}

HeadlineComparison headline_comparison(unsigned n) {
  require(n >= 4 && n % 2 == 0, ErrorCode::kInvalidArgument, "headline comparison needs even n >= 4");
  const auto report = bound_calculator({n, n / 2, Rational(3, 8), 0});
  Rational headline = Rational(3 * n, 11) + Rational(1164, 1000);
  headline.canonicalize();
  return {n, report.term2, report.chosen, headline};
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points) {
  require(points.size() >= 3, ErrorCode::kInsufficientData, "exponent fit needs at least 3 points");
  for (const auto& [h, count] : points) {
    require(count > 0, ErrorCode::kZeroCount, "exponent fit needs positive counts");
    require(h > 0, ErrorCode::kInvalidArgument, "exponent fit needs positive H");
  }
  const double m = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [h, count] : points) {
    const double x = std::log(h), y = std::log(count);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double var = sxx - sx * sx / m;
  require(var > 0, ErrorCode::kInsufficientData, "exponent fit needs at least two distinct H");
  ExponentFit fit;
  fit.slope = (sxy - sx * sy / m) / var;
  fit.intercept = (sy - fit.slope * sx) / m;
  double rss = 0;
  for (const auto& [h, count] : points) {
    const double e = std::log(count) - (fit.intercept + fit.slope * std::log(h));
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / m);
  return fit;
}

namespace {

std::uint64_t height_of(const std::vector<long>& a) {
  std::uint64_t h = 0;
  for (auto v : a) h = std::max<std::uint64_t>(h, static_cast<std::uint64_t>(std::labs(v)));
  return h;
}

double central_binomial(unsigned n) { return binomial(n, n / 2).get_d(); }

// Calls visit(a) for every (a_1..a_deg) in [-B, B]^deg.
template <typename Visit>
void for_each_monic(unsigned deg, long B, Visit&& visit) {
  std::vector<long> a(deg, -B);
  while (true) {
    visit(a);
    std::size_t i = deg;
    while (i-- > 0) {
      if (a[i] < B) {
        ++a[i];
        break;
      }
      a[i] = -B;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

HeightReport intransitive_height_report(unsigned n1, unsigned n2, std::uint64_t H,
                                        std::optional<std::uint64_t> factor_cap, std::uint64_t budget) {
  require(n1 >= 1 && n2 >= 1 && n1 + n2 <= 8, ErrorCode::kInvalidArgument, "needs n1, n2 >= 1 and n1 + n2 <= 8");
  require(H <= 30, ErrorCode::kInvalidArgument, "needs H <= 30");
  const unsigned n = n1 + n2;
  HeightReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.H = H;
  // H(f_i) <= C(n_i, n_i/2) M(f_i) <= C(n_i, n_i/2) M(f) <= C(n_i, n_i/2) sqrt(n+1) max(H, 1)
  const double mahler_cap = std::sqrt(static_cast<double>(n + 1)) * static_cast<double>(std::max<std::uint64_t>(H, 1));
  const long B1 = factor_cap ? static_cast<long>(*factor_cap) : static_cast<long>(std::floor(central_binomial(n1) * mahler_cap));
  const long B2 = factor_cap ? static_cast<long>(*factor_cap) : static_cast<long>(std::floor(central_binomial(n2) * mahler_cap));
  const long double pairs = std::pow(2.0L * B1 + 1, n1) * std::pow(2.0L * B2 + 1, n2);
  require(pairs <= static_cast<long double>(budget), ErrorCode::kBudgetExceeded, "factor pairs exceed the budget");

  report.lower = 1.0 / (central_binomial(n) * std::sqrt((n1 + 1.0) * (n2 + 1.0)));
  report.upper = central_binomial(n1) * central_binomial(n2) * std::sqrt(n + 1.0);
  report.narrow_lower = 1.0 / central_binomial(n);
  report.narrow_upper = std::sqrt(n + 1.0);
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0;

  std::vector<long> f(n);
  for_each_monic(n1, B1, [&](const std::vector<long>& a) {
    const std::uint64_t h1 = height_of(a);
    for_each_monic(n2, B2, [&](const std::vector<long>& b) {
      // coefficients of (x^n1 + a..)(x^n2 + b..) below the leading one
      for (unsigned k = 1; k <= n; ++k) {
        long c = 0;
        for (unsigned i = 0; i <= std::min(k, n1); ++i) {
          const unsigned j = k - i;
          if (j > n2) continue;
          const long ai = i == 0 ? 1 : a[i - 1];
          const long bj = j == 0 ? 1 : b[j - 1];
          c += ai * bj;
        }
        f[k - 1] = c;
      }
      const std::uint64_t h = height_of(f);
      if (!factor_cap && h > H) return;
      const std::uint64_t h2 = height_of(b);
      ++report.table[{h1, h2, h}];
      ++report.products;
      if (h == 0 || h1 == 0 || h2 == 0) {
        ++report.zero_height;
        return;
      }
      const double ratio = static_cast<double>(h1) * static_cast<double>(h2) / static_cast<double>(h);
      report.min_ratio = std::min(report.min_ratio, ratio);
      report.max_ratio = std::max(report.max_ratio, ratio);
      if (ratio < report.lower || ratio > report.upper) ++report.violations;
      if (ratio < report.narrow_lower || ratio > report.narrow_upper) ++report.narrow_violations;
    });
  });
  if (report.products == report.zero_height) report.min_ratio = 0;
  return report;
}

std::string HeightReport::to_json() const {
  nlohmann::ordered_json j;
  j["n1"] = n1;
  j["n2"] = n2;
  j["H"] = H;
  j["products"] = products;
  j["zeroHeight"] = zero_height;
  j["minRatio"] = min_ratio;
  j["maxRatio"] = max_ratio;
  j["bracket"] = {lower, upper};
  j["violations"] = violations;
  j["narrowBracket"] = {narrow_lower, narrow_upper};
  j["narrowViolations"] = narrow_violations;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, count] : table) rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  j["table"] = rows;  // rows of [H(f1), H(f2), H(f), count]
  return j.dump();
}

}  // namespace vdw::counting
