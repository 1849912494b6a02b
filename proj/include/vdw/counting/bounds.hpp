#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vdw/core/numtheory.hpp"

namespace vdw::counting {

struct BoundInputs {
  unsigned n = 0;
  unsigned k = 1;  // ind(G)
  Rational a;      // a(G) > 0
  Rational u;      // 0, or 1/(n(n-1)) for primitive G

  void validate() const;
};

struct BoundReport {
  Rational term1;  // n + 1 - k
  Rational term2;  // n - (n-1)(1 - 1/k) / (a + 1 - 1/k - u)
  Rational term3;  // (2n - 2)(a - u) + 1
  Rational chosen; // min(max(term1, term2), term3)
  Rational ystar;  // (n-1) / (a + 1 - 1/k - u)

  std::string to_json(int digits) const;
};

// Throws DivisionByZero when a + 1 - 1/k - u = 0.
BoundReport bound_calculator(const BoundInputs& inputs);

// Inputs a = 3/8, k = n/2, u = 0 (n even) set next to the headline 3n/11 + 1.164.
// term2 tends to 3n/11 + 136/121; the chosen exponent is n/2 + 1 for these inputs.
struct HeadlineComparison {
  unsigned n;
  Rational term2;
  Rational chosen;
  Rational headline;
};
HeadlineComparison headline_comparison(unsigned n);

struct ExponentFit {
  double slope;
  double intercept;
  double residual;  // root mean square of log residuals
};

// Least squares of log(count) against log(H). Needs >= 3 points with H > 0 and count > 0.
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points);

// Products f = f1 f2 of monic integer polynomials of degrees n1, n2 with H(f) <= H, or with
// H(f_i) <= factor_cap when that is given. ratio = H(f1) H(f2) / H(f) over products with nonzero heights.
struct HeightReport {
  unsigned n1 = 0, n2 = 0;
  std::uint64_t H = 0;
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> table;  // (H1, H2, H) -> count
  std::uint64_t products = 0;
  std::uint64_t zero_height = 0;
  double min_ratio = 0, max_ratio = 0;
  // Provable: [1/(C(n,n/2) sqrt((n1+1)(n2+1))), C(n1,n1/2) C(n2,n2/2) sqrt(n+1)].
  double lower = 0, upper = 0;
  std::uint64_t violations = 0;
  // The narrower [1/C(n,n/2), sqrt(n+1)], reported for inspection.
  double narrow_lower = 0, narrow_upper = 0;
  std::uint64_t narrow_violations = 0;

  std::string to_json() const;
};

// Requires n1 + n2 <= 8, H <= 30. Throws BudgetExceeded past budget enumerated pairs.
HeightReport intransitive_height_report(unsigned n1, unsigned n2, std::uint64_t H,
                                        std::optional<std::uint64_t> factor_cap = std::nullopt,
                                        std::uint64_t budget = 1'000'000'000);

}  // namespace vdw::counting
