#include "vdw/verify/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "vdw/core/error.hpp"
#include "vdw/fourier/fourier.hpp"
#include "vdw/galois/galois.hpp"
#include "vdw/permgroup/catalogue.hpp"
#include "vdw/permgroup/product_action.hpp"
#include "vdw/polyarith/completion.hpp"
#include "vdw/polyarith/mahler.hpp"
#include "vdw/polyarith/resultant.hpp"
#include "vdw/polyarith/splitting_type.hpp"

namespace vdw::verify {

using Json = nlohmann::ordered_json;

std::string SuiteResult::to_json() const {
  Json j;
  j["suite"] = name;
  j["passed"] = passed;
  j["checked"] = checked;
  j["violations"] = violations;
  j["details"] = details;
  return j.dump();
}

namespace {

void record(SuiteResult& r, bool ok) {
  ++r.checked;
  if (!ok) {
    ++r.violations;
    r.passed = false;
  }
}

// Odometer over [0, base)^len.
bool advance(std::vector<std::uint64_t>& v, std::uint64_t base) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < base) return true;
    v[i] = 0;
  }
  return false;
}

}  // namespace

SuiteResult prop33() {
  SuiteResult r{"prop33"};
  Json cells = Json::array(), skipped = Json::array();
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (unsigned n : {3u, 4u, 5u}) {
      // the count is defined for characteristic prime to n! only
      if (p <= n) {
        skipped.push_back({{"p", p}, {"n", n}});
        continue;
      }
      for (unsigned k = 1; k < n; ++k) {
        const BigInt bound = poly::partition_bound(k, n - k);
        std::vector<std::uint64_t> prefix(n - k, 0);
        std::uint64_t worst = 0, cell_violations = 0;
        do {
          const std::uint64_t count = poly::count_index_completions(p, n, k, prefix);
          worst = std::max(worst, count);
          const bool ok = BigInt(static_cast<unsigned long>(count)) <= bound;
          record(r, ok);
          cell_violations += !ok;
        } while (advance(prefix, p));
        cells.push_back({{"p", p}, {"n", n}, {"k", k}, {"bound", bound.get_str()}, {"maxCount", worst},
                         {"violations", cell_violations}});
      }
    }
  }
  r.details["cells"] = cells;
  r.details["skippedCharacteristicNotAboveDegree"] = skipped;
  return r;
}

SuiteResult prop34(std::uint64_t seed, unsigned samples) {
  SuiteResult r{"prop34"};
  std::mt19937_64 rng(seed);
  Json cells = Json::array();
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned len = 1; len <= 3; ++len) {
      std::vector<std::vector<std::uint64_t>> admissible;
      std::vector<std::uint64_t> w(len, 1);
      while (true) {
        if (!poly::has_zero_subset_sum(p, w)) admissible.push_back(w);
        std::size_t i = len;
        while (i-- > 0) {
          if (++w[i] < p) break;
          w[i] = 1;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      const std::uint64_t bound = factorial(len).get_ui();
      std::uint64_t worst = 0;
      if (!admissible.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
        std::uniform_int_distribution<std::uint64_t> target(0, p - 1);
        for (unsigned s = 0; s < samples; ++s) {
          const auto& weights = admissible[pick(rng)];
          std::vector<std::uint64_t> c(len);
          for (auto& x : c) x = target(rng);
          const std::uint64_t count = poly::power_sum_solution_count(p, weights, c);
          worst = std::max(worst, count);
          record(r, count <= bound);
        }
      }
      cells.push_back({{"p", p}, {"r", len}, {"admissibleWeightTuples", admissible.size()}, {"maxCount", worst},
                       {"bound", bound}});
    }
  }
  r.details["cells"] = cells;
  return r;
}

SuiteResult prop51() {
  SuiteResult r{"prop51"};
  Json cells = Json::array();
  std::uint64_t vanishing_dd = 0;
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{3, 3}, {3, 5}, {3, 7}, {4, 3}, {4, 5}}) {
    const std::uint64_t p2 = p * p;
    std::uint64_t forced = 0, derivative_fail = 0, dd_fail = 0, dd_zero = 0;
    std::vector<std::uint64_t> prefix(n - 1, 0);
    do {
      std::vector<BigInt> big(prefix.begin(), prefix.end());
      std::optional<poly::IntPoly> disc_t;
      std::optional<BigInt> dd;
      for (std::uint64_t an = 0; an < p2; ++an) {
        std::vector<std::uint64_t> tuple(prefix);
        tuple.push_back(an);
        if (!poly::mod_p2_forced_test(p, tuple)) continue;
        ++forced;
        if (!disc_t) {
          disc_t = poly::disc_in_last_coefficient(big);
          dd = poly::double_disc(big);
        }
        const BigInt slope = disc_t->derivative()(BigInt(static_cast<unsigned long>(an)));
        const bool slope_ok = mod_u64(slope, p) == 0;
        record(r, slope_ok);
        derivative_fail += !slope_ok;
        if (*dd == 0) {
          ++dd_zero;
          continue;
        }
        const bool dd_ok = mod_u64(*dd, p) == 0;
        record(r, dd_ok);
        dd_fail += !dd_ok;
      }
    } while (advance(prefix, p2));
    vanishing_dd += dd_zero;
    cells.push_back({{"n", n}, {"p", p}, {"forcedTuples", forced}, {"derivativeViolations", derivative_fail},
                     {"ddViolations", dd_fail}, {"excludedZeroDD", dd_zero}});
  }
  r.details["cells"] = cells;
  r.details["excludedZeroDD"] = vanishing_dd;
  return r;
}

SuiteResult fmky() {
  SuiteResult r{"fmky"};
  Rational tightest = -1;
  Json tight;
  for (unsigned m = 3; m <= 10; ++m) {
    for (unsigned k = 1; 2 * k < m; ++k) {
      for (unsigned y = 1; y <= m / 2; ++y) {
        std::vector<std::vector<perm::Letter>> cycles;
        for (unsigned i = 0; i < y; ++i) cycles.push_back({2 * i + 1, 2 * i + 2});
        const auto sigma = perm::Permutation::from_cycles(m, cycles);
        const Rational count = static_cast<unsigned long>(perm::count_moved_ksubsets(sigma, k));
        Rational bound = Rational(8, 5 * k) * Rational(binomial(m - 1, k - 1)) * y;
        bound.canonicalize();
        record(r, count >= bound);
        Rational ratio = count / bound;
        ratio.canonicalize();
        if (tightest < 0 || ratio < tightest) {
          tightest = ratio;
          tight = {{"m", m}, {"k", k}, {"y", y}, {"count", count.get_str()}, {"bound", bound.get_str()}};
        }
      }
    }
  }
  r.details["tightest"] = tight;
  r.details["tightestRatio"] = tightest.get_str();
  return r;
}

SuiteResult thm25() {
  SuiteResult r{"thm25"};
  Json cells = Json::array();
  for (unsigned m = 3; m <= 5; ++m) {
    for (unsigned k = 1; k <= 2 && 2 * k < m; ++k) {
      for (unsigned rr = 1; rr <= 2; ++rr) {
        const perm::ProductActionSpec spec{m, k, rr};
        if (spec.degree() > 100) continue;
        const std::uint64_t n = spec.degree();
        const auto sym_m = perm::symmetric_group(m);
        const auto sym_r = perm::symmetric_group(std::max(rr, 2u));
        const auto& sm = sym_m.elements();
        const auto& sr = sym_r.elements();
        std::vector<perm::Permutation> tops;
        for (const auto& h : sr) {
          if (rr == 1 && !h.is_identity()) continue;
          tops.push_back(rr == 1 ? perm::Permutation(1) : h);
        }
        Rational worst = -1;
        std::vector<std::size_t> idx(rr, 0);
        std::uint64_t cell_checked = 0, cell_viol = 0;
        while (true) {
          for (const auto& h : tops) {
            perm::WreathElement g;
            for (auto i : idx) g.base.push_back(sm[i]);
            g.top = h;
            if (g.is_identity()) continue;
            const auto [ind_g, ind_gp] = perm::blow_down_index_ratio(spec, g);
            // ind(g) / ind(g') > n / (3 r m)
            const bool ok = BigInt(static_cast<unsigned long>(ind_g)) * 3 * rr * m >
                            BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(ind_gp);
            record(r, ok);
            ++cell_checked;
            cell_viol += !ok;
            Rational ratio = Rational(BigInt(static_cast<unsigned long>(ind_g)) * 3 * rr * m,
                                      BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(ind_gp));
            ratio.canonicalize();
            if (worst < 0 || ratio < worst) worst = ratio;
          }
          std::size_t i = rr;
          while (i-- > 0) {
            if (++idx[i] < sm.size()) break;
            idx[i] = 0;
          }
          if (i == static_cast<std::size_t>(-1)) break;
        }
        cells.push_back({{"m", m}, {"k", k}, {"r", rr}, {"degree", n}, {"elements", cell_checked},
                         {"violations", cell_viol}, {"minRatioOverThreshold", worst.get_str()}});
      }
    }
  }
  r.details["cells"] = cells;
  return r;
}

SuiteResult jordan() {
  SuiteResult r{"jordan"};
  Json groups = Json::array();
  for (const auto& entry : perm::catalogue()) {
    const auto& g = entry.group;
    const std::size_t n = g.degree();
    if (!g.is_transitive() || !g.is_primitive()) continue;
    const auto types = g.cycle_types();
    const BigInt order = static_cast<unsigned long>(g.order());
    const BigInt nfact = factorial(n);
    auto has_type = [&](std::vector<std::size_t> head) {
      head.resize(n, 1);
      return types.count(head) > 0;
    };
    Json row = {{"name", entry.name}, {"degree", n}, {"order", order.get_str()}};
    if (n >= 2 && has_type({2})) {
      record(r, order == nfact);
      row["transposition"] = true;
    }
    if (n >= 9 && (has_type({3}) || has_type({2, 2}))) {
      record(r, 2 * order >= nfact);
      row["threeCycleOrDoubleTransposition"] = true;
    }
    if (2 * order < nfact) {
      const std::size_t ind = g.ind();
      const auto floor_sqrt = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      record(r, ind >= floor_sqrt);
      row["ind"] = ind;
      row["floorSqrtN"] = floor_sqrt;
    }
    groups.push_back(row);
  }
  r.details["primitiveGroups"] = groups;
  return r;
}

namespace {

poly::MonicIntPoly random_monic(std::mt19937_64& rng, unsigned n, long h) {
  std::uniform_int_distribution<long> coef(-h, h);
  std::vector<BigInt> a;
  for (unsigned i = 0; i < n; ++i) a.emplace_back(coef(rng));
  // pin the height at exactly h
  const std::size_t at = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  a[at] = (rng() & 1) ? h : -h;
  return poly::MonicIntPoly(a);
}

}  // namespace

SuiteResult mahler(std::uint64_t seed, unsigned samples, unsigned pairs, double tol) {
  SuiteResult r{"mahler"};
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> degree(1, 8);
  std::uniform_int_distribution<long> height(1, 100);
  double min_lower_slack = 1e300, min_upper_slack = 1e300;
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned n = degree(rng);
    const long h = height(rng);
    const auto f = random_monic(rng, n, h);
    const double m = static_cast<double>(poly::mahler_measure(f, tol).value);
    const double lower = static_cast<double>(h) / binomial(n, n / 2).get_d();
    const double upper = std::sqrt(n + 1.0) * static_cast<double>(h);
    record(r, lower <= m + tol);
    record(r, m - tol <= upper);
    min_lower_slack = std::min(min_lower_slack, m - lower);
    min_upper_slack = std::min(min_upper_slack, upper - m);
  }
  double worst_rel = 0;
  std::uniform_int_distribution<unsigned> half(1, 4);
  for (unsigned s = 0; s < pairs; ++s) {
    const auto f = random_monic(rng, half(rng), height(rng));
    const auto g = random_monic(rng, half(rng), height(rng));
    const auto fg = poly::MonicIntPoly::from_poly(f.to_poly() * g.to_poly());
    const double mf = static_cast<double>(poly::mahler_measure(f, tol).value);
    const double mg = static_cast<double>(poly::mahler_measure(g, tol).value);
    const double mfg = static_cast<double>(poly::mahler_measure(fg, tol).value);
    const double rel = std::abs(mfg - mf * mg) / (mf * mg);
    worst_rel = std::max(worst_rel, rel);
    record(r, rel <= 3 * tol);
  }
  r.details["tolerance"] = tol;
  r.details["samples"] = samples;
  r.details["pairs"] = pairs;
  r.details["minLowerSlack"] = min_lower_slack;
  r.details["minUpperSlack"] = min_upper_slack;
  r.details["maxRelativeProductError"] = worst_rel;
  r.details["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteResult fourier() {
  using fourier::SpaceKind;
  SuiteResult r{"fourier"};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> primes = {3, 5, 7, 11};
  const std::vector<std::string> sigmas = {"1",     "2",     "1 1",   "1^2",   "3",       "2 1",     "1 1 1",
                                           "1^2 1", "1^3",   "4",     "3 1",   "2 2",     "2 1 1",   "1 1 1 1",
                                           "2^2",   "1^2 2", "1^2 1 1", "1^2 1^2", "1^3 1", "1^4"};
  Json series = Json::array();
  std::uint64_t main_monotone = 0, max_monotone = 0, parseval_fail = 0, budget_fail = 0;
  double worst_parseval = 0, observed_main = 0, observed_max = 0;
  for (auto kind : {SpaceKind::kMonic, SpaceKind::kBinary}) {
    for (unsigned n : {3u, 4u}) {
      for (const auto& text : sigmas) {
        const auto sigma = poly::SplittingType::parse(text);
        if (sigma.deg() > n) continue;
        std::vector<double> mains, maxes;
        std::string regime;
        for (auto p : primes) {
          const auto table = fourier::fourier_table({kind, p, n}, sigma);
          const auto report = fourier::verify_decay(table);
          const bool parseval_ok = report.parseval_error <= 1e-9;
          const bool budget_ok = table.error_budget() < 1e-6 * std::pow(static_cast<double>(p), -(table.k + 1.0));
          record(r, parseval_ok);
          record(r, budget_ok);
          parseval_fail += !parseval_ok;
          budget_fail += !budget_ok;
          worst_parseval = std::max(worst_parseval, report.parseval_error);
          mains.push_back(report.main_term_error);
          maxes.push_back(report.max_nonzero_scaled);
          regime = report.exponent_used;
        }
        // strictly increasing through every prime of the ladder
        auto grows = [](const std::vector<double>& v) {
          for (std::size_t i = 1; i < v.size(); ++i) {
            if (!(v[i] > v[i - 1] + 1e-12)) return false;
          }
          return true;
        };
        const bool main_grows = grows(mains), max_grows = grows(maxes);
        record(r, !main_grows);
        record(r, !max_grows);
        main_monotone += main_grows;
        max_monotone += max_grows;
        observed_main = std::max(observed_main, *std::max_element(mains.begin(), mains.end()));
        observed_max = std::max(observed_max, *std::max_element(maxes.begin(), maxes.end()));
        series.push_back({{"space", fourier::to_string(kind)}, {"n", n}, {"sigma", text}, {"regime", regime},
                          {"mainTermError", mains}, {"maxNonzeroScaled", maxes}, {"mainTermGrows", main_grows},
                          {"maxScaledGrows", max_grows}});
      }
    }
  }
  r.details["primes"] = primes;
  r.details["observedMaxMainTermError"] = observed_main;
  r.details["observedMaxNonzeroScaled"] = observed_max;
  r.details["mainTermMonotoneSeries"] = main_monotone;
  r.details["maxScaledMonotoneSeries"] = max_monotone;
  r.details["parsevalFailures"] = parseval_fail;
  r.details["errorBudgetFailures"] = budget_fail;
  r.details["worstParsevalRelativeError"] = worst_parseval;
  r.details["series"] = series;

  // box counts against 3 (H^3/p^2 + p^(1/2)); logged, not part of the verdict
  Json box = Json::array();
  std::uint64_t box_over = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t H : {p / 2, p, 2 * p}) {
      const std::uint64_t count = fourier::box_count_index(SpaceKind::kMonic, p, 3, 2, H);
      const double threshold = 3 * (std::pow(static_cast<double>(H), 3) / (p * p) + std::sqrt(static_cast<double>(p)));
      box_over += count > threshold;
      // the box has (2H+1)^3 points, so the natural scale is (2H+1)^3 / p^2
      const double scale = std::pow(2.0 * static_cast<double>(H) + 1, 3) / static_cast<double>(p * p);
      box.push_back({{"p", p}, {"H", H}, {"count", count}, {"threshold", threshold}, {"over", count > threshold},
                     {"countOverBoxScale", static_cast<double>(count) / scale}});
    }
  }
  r.details["boxCounts"] = box;
  r.details["boxCountsOverThreshold"] = box_over;
  Json multi = Json::array();
  for (std::uint64_t H : {5, 10, 20, 40}) {
    const std::uint64_t count = fourier::multi_prime_box_count({{3, 2}, {5, 2}}, 3, H);
    const double main = std::pow(static_cast<double>(H), 3) / 225.0;
    multi.push_back({{"H", H}, {"count", count}, {"observedConstant", static_cast<double>(count) / main}});
  }
  r.details["multiPrime_3_2_5_2"] = multi;
  r.details["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteResult galois(std::uint64_t seed, unsigned samples) {
  SuiteResult r{"galois"};
  std::mt19937_64 rng(seed);
  std::map<std::string, std::set<std::vector<std::size_t>>> models;
  models["S5"] = perm::symmetric_group(5).cycle_types();
  models["A5"] = perm::alternating_group(5).cycle_types();
  models["F20"] = perm::affine_group(5).cycle_types();
  models["D5"] = perm::dihedral_group(5).cycle_types();
  models["C5"] = perm::cyclic_group(5).cycle_types();
  std::map<std::string, std::uint64_t> seen;
  std::uint64_t reducible_skipped = 0, certified = 0;
  std::uniform_int_distribution<long> general(-10, 10), trinomial(-60, 60);
  unsigned done = 0;
  while (done < samples) {
    std::vector<BigInt> a(5, 0);
    if (rng() & 1) {
      for (auto& x : a) x = general(rng);
    } else {
      a[3] = trinomial(rng);
      a[4] = trinomial(rng);
    }
    const poly::MonicIntPoly f(a);
    const BigInt d = poly::disc(f);
    if (d == 0 || !galois::is_irreducible_over_Z(f)) {
      ++reducible_skipped;
      continue;
    }
    ++done;
    const auto exact = galois::galois_group_exact(f, d);
    record(r, exact.status == galois::VerdictStatus::kExactGroup);
    ++seen[exact.group];
    const auto cert = galois::sn_certificate(f, 100);
    if (cert.status == galois::VerdictStatus::kCertifiedSn) {
      ++certified;
      record(r, exact.group == "S5");
    }
    if (is_perfect_square(d)) {
      record(r, exact.group == "C5" || exact.group == "D5" || exact.group == "A5");
      record(r, cert.status == galois::VerdictStatus::kCertifiedSubsetAn);
    }
    for (const auto& ev : cert.evidence) {
      std::vector<std::size_t> type(ev.cycle_type.begin(), ev.cycle_type.end());
      record(r, models.at(exact.group).count(type) > 0);
      record(r, poly::index_mod_p(f, ev.prime) == 0);
    }
  }
  r.details["samples"] = samples;
  r.details["groups"] = seen;
  r.details["certifiedSn"] = certified;
  r.details["skippedReducibleOrDegenerate"] = reducible_skipped;
  return r;
}

SuiteResult disc(std::uint64_t seed, unsigned samples) {
  SuiteResult r{"disc"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::uniform_int_distribution<int> degree(1, 6), small_degree(1, 5);
  auto random_poly = [&](int deg) {
    std::vector<BigInt> c(deg + 1);
    for (auto& x : c) x = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    return poly::IntPoly(c);
  };
  for (unsigned s = 0; s < samples; ++s) {
    const auto f = random_poly(degree(rng));
    record(r, poly::discriminant(f) == poly::discriminant_modular(f));
  }
  for (unsigned s = 0; s < samples / 10; ++s) {
    const auto f = random_poly(small_degree(rng));
    const auto g = random_poly(small_degree(rng));
    const BigInt res = poly::resultant(f, g);
    record(r, poly::discriminant(f * g) == poly::discriminant(f) * poly::discriminant(g) * res * res);
  }
  r.details["samples"] = samples;
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prop33", "prop34", "prop51", "fmky",  "thm25",
                                                 "jordan", "mahler", "fourier", "galois", "disc"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> table = {
      {"prop33", [](std::uint64_t) { return prop33(); }},
      {"prop34", [](std::uint64_t s) { return prop34(s); }},
      {"prop51", [](std::uint64_t) { return prop51(); }},
      {"fmky", [](std::uint64_t) { return fmky(); }},
      {"thm25", [](std::uint64_t) { return thm25(); }},
      {"jordan", [](std::uint64_t) { return jordan(); }},
      {"mahler", [](std::uint64_t s) { return mahler(s); }},
      {"fourier", [](std::uint64_t) { return fourier(); }},
      {"galois", [](std::uint64_t s) { return galois(s); }},
      {"disc", [](std::uint64_t s) { return disc(s); }},
  };
  const auto it = table.find(name);
  require(it != table.end(), ErrorCode::kInvalidArgument, "unknown verify suite '" + name + "'");
  return it->second(seed);
}

}  // namespace vdw::verify
