#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "vdw/core/error.hpp"
#include "vdw/fourier/fourier.hpp"
#include "vdw/polyarith/poly_mod_p.hpp"
#include "vdw/polyarith/sieve.hpp"

namespace vdw::fourier {
namespace {

using poly::PolyModP;
using poly::SplittingType;

// Oracle irreducibility: no monic divisor of degree 1..d/2, found by exhaustive trial.
bool trial_irreducible(const PolyModP& f) {
  const std::uint64_t p = f.p();
  for (int e = 1; 2 * e <= f.degree(); ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if ((f % poly::monic_from_index(p, e, idx)).is_zero()) return false;
    }
  }
  return true;
}

std::vector<PolyModP> trial_irreducibles(std::uint64_t p, unsigned d) {
  std::vector<PolyModP> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto f = poly::monic_from_index(p, d, idx);
    if (trial_irreducible(f)) out.push_back(f);
  }
  return out;
}

// A divisor y^m * D(x) of a point.
struct Divisor {
  unsigned y_power;
  PolyModP x_part;
};

// Every unordered sigma-tuple of distinct irreducibles as a divisor; the y factor is a degree-1 option.
std::vector<Divisor> oracle_tuples(const WeightSpace& space, const SplittingType& sigma) {
  struct Option {
    bool is_y;
    PolyModP poly;
  };
  std::vector<std::vector<Option>> options;
  for (const auto& part : sigma.parts()) {
    std::vector<Option> list;
    for (const auto& f : trial_irreducibles(space.p, part.degree)) list.push_back({false, f});
    if (space.kind == SpaceKind::kBinary && part.degree == 1) list.push_back({true, PolyModP::constant(space.p, 1)});
    options.push_back(list);
  }
  const auto& parts = sigma.parts();
  std::vector<Divisor> out;
  std::vector<std::size_t> pick(parts.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == parts.size()) {
      // ordered tuple of distinct choices; keep it only when identical parts are in increasing order
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
          if (parts[a].degree == parts[b].degree && pick[a] == pick[b]) return;
          if (parts[a] == parts[b] && pick[a] > pick[b]) return;
        }
      }
      Divisor div{0, PolyModP::constant(space.p, 1)};
      for (std::size_t a = 0; a < parts.size(); ++a) {
        const auto& opt = options[a][pick[a]];
        for (unsigned e = 0; e < parts[a].multiplicity; ++e) {
          if (opt.is_y) {
            ++div.y_power;
          } else {
            div.x_part = div.x_part * opt.poly;
          }
        }
      }
      out.push_back(div);
      return;
    }
    for (std::size_t c = 0; c < options[i].size(); ++c) {
      pick[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t oracle_weight(const WeightSpace& space, const std::vector<Divisor>& tuples,
                            const std::vector<std::uint64_t>& point) {
  const unsigned n = space.n;
  std::vector<std::uint64_t> asc(n + 1, 0);
  unsigned leading_zeros = 0;
  if (space.kind == SpaceKind::kMonic) {
    asc[n] = 1;
    for (unsigned i = 1; i <= n; ++i) asc[n - i] = point[i - 1];
  } else {
    for (unsigned i = 0; i <= n; ++i) asc[n - i] = point[i];
    while (leading_zeros <= n && point[leading_zeros] == 0) ++leading_zeros;
  }
  const PolyModP f(space.p, asc);
  std::uint64_t count = 0;
  for (const auto& div : tuples) {
    if (div.y_power > leading_zeros) continue;
    if (f.is_zero() || (f % div.x_part).is_zero()) ++count;
  }
  return count;
}

const std::vector<std::string> kSigmas = {"1", "2", "1 1", "1^2", "3", "2 1", "1 1 1", "1^2 1", "1^3"};

TEST(Fourier, IrreducibleEnumerationMatchesTrialDivisionAndNecklaceCounts) {
  EXPECT_EQ(poly::enumerate_irreducibles(2, 1), (std::vector<PolyModP>{PolyModP(2, {0, 1}), PolyModP(2, {1, 1})}));
  EXPECT_EQ(poly::enumerate_irreducibles(2, 2), (std::vector<PolyModP>{PolyModP(2, {1, 1, 1})}));
  EXPECT_EQ(irreducible_count({SpaceKind::kBinary, 2, 3}, 1), 3u);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto list = poly::enumerate_irreducibles(p, d);
      EXPECT_EQ(list, trial_irreducibles(p, d)) << p << " " << d;
      EXPECT_EQ(list.size(), poly::necklace_count(p, d));
    }
  }
  EXPECT_EQ(poly::necklace_count(2, 6), 9u);
  EXPECT_THROW(poly::enumerate_irreducibles(11, 7), Error);
}

TEST(Fourier, WeightExamples) {
  const WeightSpace monic{SpaceKind::kMonic, 5, 3};
  EXPECT_EQ(weight(monic, {0, 0, 0}, SplittingType::parse("1^2")), 1u);
  // x(x-1)(x-2) = x^3 - 3x^2 + 2x
  EXPECT_EQ(weight(monic, {2, 2, 0}, SplittingType::parse("1 1")), 3u);
  EXPECT_EQ(weight(monic, {2, 2, 0}, SplittingType::parse("1^2")), 0u);
  EXPECT_EQ(weight(monic, {2, 2, 0}, SplittingType::parse("1 1 1 1")), 0u);
}

TEST(Fourier, FactorizationWeightAndTupleMarkingAgreeWithOracle) {
  for (auto kind : {SpaceKind::kMonic, SpaceKind::kBinary}) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned n : {2u, 3u}) {
        const WeightSpace space{kind, p, n};
        for (const auto& text : kSigmas) {
          const auto sigma = SplittingType::parse(text);
          const auto table = weight_table(space, sigma);
          const auto tuples = sigma.deg() <= n ? oracle_tuples(space, sigma) : std::vector<Divisor>{};
          for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            const auto point = space.decode(idx);
            const auto expected = sigma.deg() <= n ? oracle_weight(space, tuples, point) : 0;
            ASSERT_EQ(table[idx], expected) << to_string(kind) << " p=" << p << " n=" << n << " sigma=" << text;
            ASSERT_EQ(weight(space, point, sigma), expected);
          }
        }
      }
    }
  }
}

TEST(Fourier, ZeroFrequencyExamples) {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const auto t = fourier_table({SpaceKind::kMonic, p, 3}, SplittingType::parse("1"));
    EXPECT_NEAR(t.values[0].real(), 1.0, 1e-12);
    EXPECT_NEAR(verify_decay(t).main_term_error, 0.0, 1e-9);
  }
  const auto square = fourier_table({SpaceKind::kMonic, 5, 3}, SplittingType::parse("1^2"));
  EXPECT_NEAR(square.values[0].real(), 1.0 / 5, 1e-12);
  const auto cube = fourier_table({SpaceKind::kMonic, 5, 3}, SplittingType::parse("1^3"));
  EXPECT_NEAR(cube.values[0].real(), 1.0 / 25, 1e-12);
  EXPECT_NEAR(std::abs(cube.values[0].imag()), 0.0, 1e-12);
}

TEST(Fourier, AxisTransformMatchesDirectSumAndPointwiseCharacterSum) {
  for (auto kind : {SpaceKind::kMonic, SpaceKind::kBinary}) {
    for (std::uint64_t p : {3, 5}) {
      const WeightSpace space{kind, p, 3};
      for (const auto& text : kSigmas) {
        const auto sigma = SplittingType::parse(text);
        const auto axis = fourier_table(space, sigma, DftMethod::kAxis);
        const auto direct = fourier_table(space, sigma, DftMethod::kDirect);
        for (std::size_t g = 0; g < axis.values.size(); ++g) ASSERT_LT(std::abs(axis.values[g] - direct.values[g]), 1e-12);
        // one frequency recomputed from the definition
        const auto g = space.decode(space.size() - 2);
        std::complex<double> acc = 0;
        for (std::uint64_t f = 0; f < space.size(); ++f) {
          const auto pt = space.decode(f);
          std::uint64_t dot = 0;
          for (std::size_t j = 0; j < pt.size(); ++j) dot += pt[j] * g[j];
          acc += static_cast<double>(axis.weights[f]) *
                 std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(dot % p) / static_cast<double>(p));
        }
        acc /= static_cast<double>(space.size());
        EXPECT_LT(std::abs(acc - axis.values[space.size() - 2]), 1e-12);
      }
    }
  }
  EXPECT_THROW(fourier_table({SpaceKind::kMonic, 7, 3}, SplittingType::parse("1"), DftMethod::kDirect), Error);
}

TEST(Fourier, ParsevalAndErrorBudget) {
  for (auto kind : {SpaceKind::kMonic, SpaceKind::kBinary}) {
    for (std::uint64_t p : {3, 7}) {
      for (const auto& text : kSigmas) {
        const auto t = fourier_table({kind, p, 3}, SplittingType::parse(text));
        EXPECT_LT(t.parseval_relative_error(), 1e-9);
        EXPECT_LT(t.error_budget(), 1e-6 * std::pow(static_cast<double>(p), -(t.k + 1.0)));
        double sum = 0;
        for (auto w : t.weights) sum += static_cast<double>(w);
        EXPECT_NEAR(t.values[0].real(), sum / static_cast<double>(t.space.size()), 1e-12);
      }
    }
  }
}

TEST(Fourier, DecayRegimesAndWeilCase) {
  const auto empty = verify_decay(fourier_table({SpaceKind::kMonic, 5, 2}, SplittingType::parse("1 1 1")));
  EXPECT_EQ(empty.exponent_used, "empty");
  EXPECT_EQ(empty.max_nonzero_scaled, 0.0);
  EXPECT_EQ(empty.main_term_error, 0.0);

  EXPECT_EQ(verify_decay(fourier_table({SpaceKind::kMonic, 5, 3}, SplittingType::parse("1^2"))).exponent_used, "k+1");
  EXPECT_EQ(verify_decay(fourier_table({SpaceKind::kBinary, 5, 3}, SplittingType::parse("1^3"))).exponent_used, "k+1");
  for (unsigned n : {3u, 4u}) {
    std::string text = "1^" + std::to_string(n);
    for (std::uint64_t p : {5, 7, 11}) {
      const auto r = verify_decay(fourier_table({SpaceKind::kMonic, p, n}, SplittingType::parse(text)));
      EXPECT_EQ(r.exponent_used, "k+1/2");
      // |sum_r e(P(r)/p)| <= (deg P - 1) sqrt(p) for nonconstant P of degree <= n
      EXPECT_LE(r.max_nonzero_scaled, n - 1 + 1e-9) << n << " " << p;
    }
  }
  const auto report = verify_decay(fourier_table({SpaceKind::kMonic, 7, 3}, SplittingType::parse("1")));
  EXPECT_TRUE(std::isfinite(report.max_nonzero_scaled));
  EXPECT_NE(report.to_json().find("\"regime\":\"k+1\""), std::string::npos);
}

// Oracle binary index: leading zero count m, then index of the remaining x-polynomial made monic.
unsigned oracle_binary_index(std::uint64_t p, const std::vector<long>& c, unsigned k_cap) {
  const unsigned n = static_cast<unsigned>(c.size()) - 1;
  auto res = [p](long v) { return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); };
  unsigned m = 0;
  while (m <= n && res(c[m]) == 0) ++m;
  if (m > n) return k_cap;
  std::vector<std::uint64_t> asc(n + 1 - m);
  for (unsigned i = m; i <= n; ++i) asc[n - i] = res(c[i]);
  const auto g = PolyModP(p, asc).monic();
  unsigned ind = m > 0 ? m - 1 : 0;
  if (g.degree() > 0) {
    for (const auto& fp : poly::factor_mod_p(g)) ind += (fp.multiplicity - 1) * fp.factor.degree();
  }
  return ind;
}

TEST(Fourier, BoxCountsAgreeAcrossPaths) {
  EXPECT_EQ(box_count_index(SpaceKind::kMonic, 5, 3, 0, 2), 125u);
  EXPECT_EQ(box_count_index(SpaceKind::kMonic, 5, 3, 2, 2), box_count_index_direct(5, 3, 2, 2));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (std::uint64_t H : {0, 1, 3, 6}) {
        ASSERT_EQ(box_count_index(SpaceKind::kMonic, p, 3, k, H), box_count_index_direct(p, 3, k, H));
        ASSERT_EQ(multi_prime_box_count({{p, k}}, 3, H), box_count_index_direct(p, 3, k, H));
      }
    }
  }
  // H = (p-1)/2 + p covers every residue class exactly three times per coordinate
  for (std::uint64_t p : {5, 7}) {
    const std::uint64_t H = (p - 1) / 2 + p;
    std::uint64_t high = box_count_index(SpaceKind::kMonic, p, 3, 2, (p - 1) / 2);
    EXPECT_EQ(box_count_index(SpaceKind::kMonic, p, 3, 2, H), high * 27);
  }
  EXPECT_EQ(multi_prime_box_count({{3, 0}, {5, 0}}, 3, 4), 729u);
  EXPECT_THROW(multi_prime_box_count({{317, 1}, {331, 1}}, 3, 4), Error);

  // two primes: brute-force scan with index_mod_p at each prime
  const unsigned n = 3;
  const long H = 4;
  std::uint64_t brute = 0;
  for (long a1 = -H; a1 <= H; ++a1) {
    for (long a2 = -H; a2 <= H; ++a2) {
      for (long a3 = -H; a3 <= H; ++a3) {
        const poly::MonicIntPoly f{a1, a2, a3};
        if (poly::index_mod_p(f, 3) >= 2 && poly::index_mod_p(f, 5) >= 2) ++brute;
      }
    }
  }
  EXPECT_EQ(multi_prime_box_count({{3, 2}, {5, 2}}, n, H), brute);

  // binary space against the leading-zero oracle
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned k = 0; k <= 3; ++k) {
      const long Hb = 2;
      std::uint64_t expected = 0;
      std::vector<long> c(4, -Hb);
      while (true) {
        if (oracle_binary_index(p, c, 100) >= k) ++expected;
        std::size_t i = c.size();
        while (i-- > 0) {
          if (c[i] < Hb) {
            ++c[i];
            break;
          }
          c[i] = -Hb;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      EXPECT_EQ(box_count_index(SpaceKind::kBinary, p, 3, k, Hb), expected) << p << " " << k;
    }
  }
}

}  // namespace
}  // namespace vdw::fourier
