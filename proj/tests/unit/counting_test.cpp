#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "vdw/core/error.hpp"
#include "vdw/counting/bounds.hpp"
#include "vdw/counting/enumerate.hpp"

namespace vdw::counting {
namespace {

long isqrt_exact(long v) {
  if (v < 0) return -1;
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

bool is_square_long(long v) { return isqrt_exact(v) >= 0; }

// Integer roots of x^3 + b x^2 + c x + d (|roots| bounded by 1 + max |coeff|).
int cubic_integer_roots(long b, long c, long d) {
  const long bound = 1 + std::max({std::labs(b), std::labs(c), std::labs(d)});
  int count = 0;
  for (long r = -bound; r <= bound; ++r) {
    if (((r + b) * r + c) * r + d == 0) ++count;
  }
  return count;
}

long cubic_disc(long b, long c, long d) {
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

// x^4 + a x^3 + b x^2 + c x + d splits into two monic integer quadratics.
bool quartic_has_quadratic_factor(long a, long b, long c, long d) {
  if (d == 0) return true;
  for (long v = -std::labs(d); v <= std::labs(d); ++v) {
    if (v == 0 || d % v != 0) continue;
    const long w = d / v;
    // u + s = a, u s = b - v - w
    const long disc = a * a - 4 * (b - v - w);
    const long r = isqrt_exact(disc);
    if (r < 0 || (a + r) % 2 != 0) continue;
    const long u = (a + r) / 2, s = (a - r) / 2;
    if (u * w + v * s == c || s * w + v * u == c) return true;
  }
  return false;
}

struct OracleCounts {
  std::uint64_t not_sn = 0;
  std::uint64_t v4 = 0;
  std::uint64_t c3 = 0;
};

OracleCounts oracle_cubic(long H) {
  OracleCounts out;
  for (long b = -H; b <= H; ++b) {
    for (long c = -H; c <= H; ++c) {
      for (long d = -H; d <= H; ++d) {
        const long disc = cubic_disc(b, c, d);
        const bool reducible = cubic_integer_roots(b, c, d) > 0;
        if (disc == 0 || reducible || is_square_long(disc)) ++out.not_sn;
        if (disc != 0 && !reducible && is_square_long(disc)) ++out.c3;
      }
    }
  }
  return out;
}

OracleCounts oracle_quartic(long H) {
  OracleCounts out;
  for (long a = -H; a <= H; ++a) {
    for (long b = -H; b <= H; ++b) {
      for (long c = -H; c <= H; ++c) {
        for (long d = -H; d <= H; ++d) {
          // resolvent y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) shares the discriminant
          const long rb = -b, rc = a * c - 4 * d, rd = -(a * a * d - 4 * b * d + c * c);
          const long disc = cubic_disc(rb, rc, rd);
          const bool reducible = [&] {
            const long bound = 1 + std::max({std::labs(a), std::labs(b), std::labs(c), std::labs(d)});
            for (long r = -bound; r <= bound; ++r) {
              if ((((r + a) * r + b) * r + c) * r + d == 0) return true;
            }
            return quartic_has_quadratic_factor(a, b, c, d);
          }();
          const int roots = cubic_integer_roots(rb, rc, rd);
          if (disc == 0 || reducible || roots > 0 || is_square_long(disc)) ++out.not_sn;
          if (disc != 0 && !reducible && roots == 3) ++out.v4;
        }
      }
    }
  }
  return out;
}

TEST(Counting, SmallBoxExamples) {
  const auto n1 = enumerate_box(1, 2).ledger;
  EXPECT_EQ(n1.total, 5u);
  EXPECT_EQ(n1.per_group.at("S1"), 5u);
  EXPECT_EQ(n1.e_exact(), 0u);
  EXPECT_EQ(enumerate_box(2, 1).ledger.total, 9u);
  EXPECT_EQ(compute_E(2, 1).lower, 4u);
  EXPECT_EQ(compute_E(3, 0).lower, 1u);
  EXPECT_EQ(compute_N(2, 1, "S2"), 5u);
  EXPECT_EQ(compute_N(2, 1, "C2"), 5u);
  EXPECT_THROW(compute_N(4, 1, "C5"), Error);
  EXPECT_THROW(compute_N(6, 1, "S6"), Error);
  EXPECT_THROW(compute_N(4, 1, "Q8"), Error);
}

TEST(Counting, BudgetCheckedBeforeDegree) {
  try {
    enumerate_box(9, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  try {
    enumerate_box(9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeOutOfRange);
  }
  EnumerateOptions exact6;
  EXPECT_THROW(enumerate_box(6, 1, exact6), Error);
}

TEST(Counting, QuadraticsMatchSquareDiscriminantOracle) {
  for (long H : {1, 5, 10, 100}) {
    std::uint64_t expected = 0;
    for (long a = -H; a <= H; ++a) {
      for (long b = -H; b <= H; ++b) expected += is_square_long(a * a - 4 * b);
    }
    EXPECT_EQ(compute_E(2, static_cast<std::uint64_t>(H)).lower, expected) << H;
  }
}

TEST(Counting, CubicsAndQuarticsMatchIndependentClassifier) {
  for (long H : {1, 3, 10}) {
    const auto oracle = oracle_cubic(H);
    const auto ledger = enumerate_box(3, static_cast<std::uint64_t>(H)).ledger;
    EXPECT_EQ(ledger.e_exact(), oracle.not_sn) << H;
    EXPECT_EQ(ledger.per_group.at("C3"), oracle.c3);
    EXPECT_EQ(ledger.square_disc, ledger.per_group.at("C3"));
  }
  for (long H : {1, 2, 6}) {
    const auto oracle = oracle_quartic(H);
    const auto ledger = enumerate_box(4, static_cast<std::uint64_t>(H)).ledger;
    EXPECT_EQ(ledger.e_exact(), oracle.not_sn) << H;
    EXPECT_EQ(ledger.per_group.at("V4"), oracle.v4) << H;
  }
  EXPECT_EQ(compute_N(4, 2, "V4"), oracle_quartic(2).v4);
}

TEST(Counting, FastPathAgreesWithExactPath) {
  const Classifier classifier(5, 3, Mode::kExact);
  std::vector<long> a(5);
  std::uint64_t seen = 0;
  for (long i = 0; i < 3000; ++i) {
    long x = i * 7919 + 17;
    for (auto& v : a) {
      v = x % 7 - 3;
      x /= 7;
    }
    const auto fast = classifier.classify(a.data());
    const auto slow = classifier.classify_exact(poly::MonicIntPoly(std::vector<BigInt>(a.begin(), a.end())));
    ASSERT_EQ(fast.code(), slow.code());
    ++seen;
  }
  EXPECT_EQ(seen, 3000u);
}

TEST(Counting, LowerBoundAndMonotonicity) {
  for (unsigned n : {2u, 3u, 4u}) {
    std::uint64_t prev_e = 0;
    std::map<std::string, std::uint64_t> prev_groups;
    for (std::uint64_t H = 0; H <= (n == 4 ? 3u : 6u); ++H) {
      const auto ledger = enumerate_box(n, H).ledger;
      const std::uint64_t e = ledger.e_exact();
      EXPECT_GE(e, static_cast<std::uint64_t>(std::pow(2 * H + 1, n - 1)));
      EXPECT_GE(e, prev_e);
      for (const auto& [name, count] : ledger.per_group) EXPECT_GE(count, prev_groups[name]);
      prev_e = e;
      prev_groups = ledger.per_group;
    }
  }
}

TEST(Counting, IntervalModeBracketsExactCount) {
  EnumerateOptions interval;
  interval.mode = Mode::kInterval;
  for (unsigned n : {3u, 4u}) {
    const auto exact = enumerate_box(n, 3).ledger;
    const auto approx = enumerate_box(n, 3, interval).ledger;
    EXPECT_LE(approx.e_lower(), exact.e_exact());
    EXPECT_GE(approx.e_upper(), exact.e_exact());
    EXPECT_EQ(approx.reducible, exact.reducible);
    EXPECT_EQ(approx.degenerate, exact.degenerate);
  }
  const auto six = compute_E(6, 1);
  EXPECT_FALSE(six.exact);
  EXPECT_LE(six.lower, six.upper);
  EXPECT_GE(six.lower, 243u);
}

TEST(Counting, DeterministicAcrossThreadsAndCheckpoints) {
  EnumerateOptions one, eight;
  eight.threads = 8;
  const auto a = enumerate_box(3, 8, one).ledger;
  const auto b = enumerate_box(3, 8, eight).ledger;
  EXPECT_EQ(to_json(a), to_json(b));

  const auto dir = std::filesystem::temp_directory_path() / "vdw_counting_ckpt_test";
  std::filesystem::remove_all(dir);
  EnumerateOptions ck;
  ck.checkpoint_dir = dir;
  // full run, drop two sub-box files, resume
  const auto first = enumerate_box(3, 8, ck);
  EXPECT_EQ(first.computed, 17u);
  std::filesystem::remove(checkpoint_path(dir, 3, 8, -2));
  std::filesystem::remove(checkpoint_path(dir, 3, 8, 5));
  const auto resumed = enumerate_box(3, 8, ck);
  EXPECT_EQ(resumed.computed, 2u);
  EXPECT_EQ(resumed.loaded, 15u);
  EXPECT_EQ(to_json(resumed.ledger), to_json(a));
  const auto again = enumerate_box(3, 8, ck);
  EXPECT_EQ(again.computed, 0u);

  EnumerateOptions other = ck;
  other.mode = Mode::kInterval;
  EXPECT_THROW(enumerate_box(3, 8, other), Error);
  std::filesystem::remove_all(dir);
}

TEST(Counting, LedgerMergeAndRoundTrip) {
  const auto whole = enumerate_box(3, 4).ledger;
  // rebuild from per-sub-box checkpoints merged in reverse order
  const auto dir = std::filesystem::temp_directory_path() / "vdw_counting_merge_test";
  std::filesystem::remove_all(dir);
  EnumerateOptions ck;
  ck.checkpoint_dir = dir;
  enumerate_box(3, 4, ck);
  CountLedger merged;
  merged.n = 3;
  merged.H = 4;
  for (const auto& name : {"C3", "S3"}) merged.per_group[name] = 0;
  for (long a1 = 4; a1 >= -4; --a1) {
    std::ifstream in(checkpoint_path(dir, 3, 4, a1));
    std::stringstream buf;
    buf << in.rdbuf();
    const auto j = nlohmann::json::parse(buf.str());
    merged.add(ledger_from_json(j.at("ledger").dump()));
  }
  EXPECT_EQ(to_json(merged), to_json(whole));
  EXPECT_EQ(to_json(ledger_from_json(to_json(whole))), to_json(whole));
  EXPECT_THROW(ledger_from_json("{\"format_version\":1}"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Counting, CasePartition) {
  // x^3 - 3x + 1: disc 81, 3-maximal with v_3 = 4, so C = 3 and D = 81
  const poly::MonicIntPoly f{0, -3, 1};
  const auto params = SieveParams::defaults(3);
  EXPECT_EQ(sieve_case(f, 3, params), SieveCase::kI);    // 81 > 3^(7/3)
  EXPECT_EQ(sieve_case(f, 9, params), SieveCase::kII);   // 81 <= 9^(7/3)
  EXPECT_EQ(sieve_case(f, 2, params), SieveCase::kIII);  // 3 > 2^(7/6)

  const auto ledger = [&] {
    EnumerateOptions o;
    o.sieve = params;
    return enumerate_box(3, 20, o).ledger;
  }();
  std::uint64_t cells = 0;
  for (const auto& [name, count] : ledger.case_histogram) cells += count;
  EXPECT_EQ(cells, ledger.per_group.at("C3"));
  EXPECT_GT(ledger.case_histogram.at("II"), ledger.case_histogram.at("I"));
  EXPECT_GT(ledger.case_histogram.at("II"), ledger.case_histogram.at("III"));
  EXPECT_EQ(case_partition(3, 20, params), ledger.case_histogram);

  EXPECT_THROW(SieveParams({Rational(1, 5), 1}).validate(3), Error);
  EXPECT_NO_THROW(SieveParams({Rational(1, 6), 1}).validate(3));
}

TEST(Counting, BoundCalculator) {
  const auto m11 = bound_calculator({11, 4, Rational(5, 2), Rational(1, 110)});
  EXPECT_NEAR(to_double(m11.term2), 8.686, 5e-4);
  EXPECT_EQ(m11.chosen, m11.term2);
  for (unsigned p : {5u, 7u, 11u}) {
    const auto r = bound_calculator({p, p - 1, Rational(1, p - 1), Rational(1, p * (p - 1))});
    EXPECT_EQ(r.chosen, 2) << p;
  }
  EXPECT_EQ(bound_calculator({5, 1, 1, 0}).chosen, 5);
  for (unsigned n = 6; n <= 40; ++n) {
    Rational a = Rational(n + 2, 4) - 1 + Rational(1, 2);
    a.canonicalize();
    const auto r = bound_calculator({n, 2, a, Rational(1, n * (n - 1))});
    EXPECT_LE(r.chosen, n - 1) << n;
  }
  try {
    bound_calculator({3, 1, Rational(1, 6), Rational(1, 6)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  EXPECT_THROW(bound_calculator({5, 1, 1, Rational(1, 7)}), Error);
  EXPECT_NE(m11.to_json(3).find("\"term2Exp\":\"8.686\""), std::string::npos);

  // term2 approaches 3n/11 + 136/121 for a = 3/8, k = n/2
  const auto far = headline_comparison(2000);
  EXPECT_NEAR(to_double(far.term2) - 3 * 2000.0 / 11, 136.0 / 121, 1e-3);
  EXPECT_EQ(far.chosen, 1001);
}

TEST(Counting, ExponentFit) {
  std::vector<std::pair<double, double>> sq, cube;
  for (double h : {10.0, 20.0, 40.0, 80.0}) {
    sq.emplace_back(h, 3 * h * h);
    cube.emplace_back(h, 0.5 * h * h * h);
  }
  EXPECT_NEAR(exponent_fit(sq).slope, 2.0, 1e-9);
  EXPECT_NEAR(exponent_fit(cube).slope, 3.0, 1e-9);
  EXPECT_NEAR(exponent_fit(cube).residual, 0.0, 1e-9);
  EXPECT_THROW(exponent_fit({{1, 1}, {2, 2}}), Error);
  try {
    exponent_fit({{1, 1}, {2, 0}, {3, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroCount);
  }
}

TEST(Counting, IntransitiveHeights) {
  const auto zero = intransitive_height_report(1, 1, 0);
  EXPECT_EQ(zero.products, 1u);
  EXPECT_EQ(zero.table.begin()->first, std::make_tuple(0ull, 0ull, 0ull));

  // (x-1)(x-1) = x^2 - 2x + 1: H = 2, H1 H2 = 1
  const auto lin = intransitive_height_report(1, 1, 2);
  EXPECT_GE(lin.table.at({1, 1, 2}), 1u);
  EXPECT_EQ(lin.violations, 0u);

  // every product with H(f) <= H is found: compare with a scan over all monic quadratics
  const auto quad = intransitive_height_report(1, 1, 5);
  std::uint64_t reducible = 0;
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      // ordered root pairs (r, s) with r + s = -a, r s = b
      for (long r = -12; r <= 12; ++r) {
        const long s = -a - r;
        if (r * s == b) ++reducible;
      }
    }
  }
  EXPECT_EQ(quad.products, reducible);

  const auto capped = intransitive_height_report(2, 2, 30, 5);
  EXPECT_EQ(capped.products, 11u * 11 * 11 * 11);
  EXPECT_EQ(capped.violations, 0u);
  EXPECT_GE(capped.min_ratio, capped.lower);
  EXPECT_LE(capped.max_ratio, capped.upper);
  EXPECT_THROW(intransitive_height_report(4, 4, 30), Error);
}

}  // namespace
}  // namespace vdw::counting
