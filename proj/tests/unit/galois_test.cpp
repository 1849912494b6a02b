#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "vdw/core/error.hpp"
#include "vdw/galois/galois.hpp"
#include "vdw/permgroup/catalogue.hpp"
#include "vdw/polyarith/resultant.hpp"

namespace vdw::galois {
namespace {

using perm::Permutation;
using perm::PermGroup;

IntPoly expand(const std::vector<IntFactor>& factors) {
  IntPoly prod{1};
  for (const auto& f : factors) prod = prod * poly::pow(f.factor.to_poly(), f.multiplicity);
  return prod;
}

TEST(FactorOverZTest, Examples) {
  auto f1 = factor_over_Z(MonicIntPoly{0, 0, 0, -1});
  ASSERT_EQ(f1.size(), 3u);
  EXPECT_EQ(f1[0].factor, (MonicIntPoly{-1}));
  EXPECT_EQ(f1[1].factor, (MonicIntPoly{1}));
  EXPECT_EQ(f1[2].factor, (MonicIntPoly{0, 1}));
  auto f2 = factor_over_Z(MonicIntPoly{0, 0, 0, 4});
  ASSERT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2[0].factor, (MonicIntPoly{-2, 2}));
  EXPECT_EQ(f2[1].factor, (MonicIntPoly{2, 2}));
  EXPECT_TRUE(is_irreducible_over_Z(MonicIntPoly{0, 0, 0, -1, -1}));
  auto f3 = factor_over_Z(MonicIntPoly{0, 0});
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0].multiplicity, 2u);
}

// Oracle for degree <= 3: irreducible iff no integer root (roots divide the constant term).
bool has_integer_root(const IntPoly& f) {
  if (f[0] == 0) return true;
  const BigInt c = abs(f[0]);
  for (BigInt d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    for (const BigInt& r : {d, BigInt(-d), BigInt(c / d), BigInt(-(c / d))}) {
      if (f(r) == 0) return true;
    }
  }
  return false;
}

TEST(FactorOverZTest, RandomProductsReproduceAndFactorsIrreducible) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly f{1};
    const int pieces = 1 + trial % 4;
    for (int i = 0; i < pieces; ++i) {
      std::vector<BigInt> a;
      for (int k = 0; k < 1 + (trial + i) % 3; ++k) a.emplace_back(coef(rng));
      f = f * MonicIntPoly(a).to_poly();
    }
    const auto factors = factor_over_Z(MonicIntPoly::from_poly(f));
    ASSERT_EQ(expand(factors), f) << f.to_string();
    for (const auto& fac : factors) {
      if (fac.factor.degree() <= 3) {
        ASSERT_TRUE(fac.factor.degree() == 1 || !has_integer_root(fac.factor.to_poly())) << fac.factor.to_json();
      }
    }
  }
}

TEST(FactorOverZTest, SwinnertonDyerStyleRecombination) {
  // (x^2 - 2)(x^2 - 3) has no irreducible-mod-p certificate but factors over Z
  const IntPoly f = IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1};
  const auto factors = factor_over_Z(MonicIntPoly::from_poly(f));
  ASSERT_EQ(factors.size(), 2u);
  // x^4 - 10x^2 + 1 is irreducible yet splits mod every prime
  EXPECT_TRUE(is_irreducible_over_Z(MonicIntPoly{0, -10, 0, 1}));
}

PermGroup from_gens(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> g;
  for (const char* s : gens) g.push_back(Permutation::parse(n, s));
  return PermGroup(n, g);
}

// Independent model of each named group as an explicit permutation group.
PermGroup model(const std::string& name) {
  if (name == "C2") return perm::cyclic_group(2);
  if (name == "C3") return perm::cyclic_group(3);
  if (name == "S3") return perm::symmetric_group(3);
  if (name == "C4") return perm::cyclic_group(4);
  if (name == "V4") return from_gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  if (name == "D4") return perm::dihedral_group(4);
  if (name == "A4") return perm::alternating_group(4);
  if (name == "S4") return perm::symmetric_group(4);
  if (name == "C5") return perm::cyclic_group(5);
  if (name == "D5") return perm::dihedral_group(5);
  if (name == "F20") return perm::affine_group(5);
  if (name == "A5") return perm::alternating_group(5);
  return perm::symmetric_group(5);
}

std::set<std::vector<std::size_t>> frobenius_types(const MonicIntPoly& f, std::size_t primes) {
  const BigInt d = poly::disc(f);
  std::set<std::vector<std::size_t>> seen;
  std::size_t used = 0;
  for (std::uint64_t p = 2; used < primes; p = next_prime(p)) {
    if (mod_u64(d, p) == 0) continue;
    ++used;
    auto ct = poly::splitting_type(f, p).cycle_type();
    seen.insert(std::vector<std::size_t>(ct.begin(), ct.end()));
  }
  // the identity class can have density 1/120; every other class here has density >= 1/12
  seen.insert(std::vector<std::size_t>(f.degree(), 1));
  return seen;
}

void expect_group(const MonicIntPoly& f, const std::string& name) {
  const auto verdict = galois_group_exact(f);
  EXPECT_EQ(verdict.status, VerdictStatus::kExactGroup);
  EXPECT_EQ(verdict.group, name) << f.to_json();
  const PermGroup g = model(name);
  EXPECT_EQ(verdict.order, g.order());
  EXPECT_EQ(frobenius_types(f, 400), g.cycle_types()) << f.to_json() << " as " << name;
}

TEST(GaloisExactTest, NamedExamples) {
  expect_group(MonicIntPoly{1, 1}, "C2");
  expect_group(MonicIntPoly{0, -3, -1}, "C3");
  expect_group(MonicIntPoly{0, 0, -2}, "S3");
  expect_group(MonicIntPoly{0, 0, 0, 1}, "V4");
  expect_group(MonicIntPoly{1, 1, 1, 1}, "C4");
  expect_group(MonicIntPoly{0, 0, 0, -2}, "D4");
  expect_group(MonicIntPoly{0, 0, 8, 12}, "A4");
  expect_group(MonicIntPoly{0, 0, 1, 1}, "S4");
  expect_group(MonicIntPoly{1, -4, -3, 3, 1}, "C5");
  expect_group(MonicIntPoly{0, 0, 0, -5, 12}, "D5");
  expect_group(MonicIntPoly{0, 0, 0, 0, -2}, "F20");
  expect_group(MonicIntPoly{0, 0, 0, 20, 16}, "A5");
  expect_group(MonicIntPoly{0, 0, 0, -1, -1}, "S5");
}

TEST(GaloisExactTest, Contracts) {
  EXPECT_THROW(galois_group_exact(MonicIntPoly{0, -1}), Error);
  EXPECT_THROW(galois_group_exact(MonicIntPoly{0, 0, 0, 0, 0, -2}), Error);
  EXPECT_EQ(canonical_group_name("S2"), "C2");
  EXPECT_THROW(canonical_group_name("Q8"), Error);
  EXPECT_NO_THROW(self_check_quintic_resolvent());
}

TEST(GaloisExactTest, RandomQuarticsAndQuinticsMatchFrobeniusStatistics) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::map<std::string, int> seen;
  for (int trial = 0; trial < 240; ++trial) {
    const int n = 4 + trial % 2;
    std::vector<BigInt> a;
    for (int i = 0; i < n; ++i) a.emplace_back(coef(rng));
    // biquadratic and trinomial shapes reach the small groups
    if (trial % 3 == 0) {
      a[0] = 0;
      a[2] = 0;
      if (n == 5) a[1] = 0;
    }
    const MonicIntPoly f(a);
    if (poly::disc(f) == 0 || !is_irreducible_over_Z(f)) continue;
    const auto verdict = galois_group_exact(f);
    ++seen[verdict.group];
    const auto types = frobenius_types(f, 300);
    ASSERT_EQ(types, model(verdict.group).cycle_types()) << f.to_json() << " classified " << verdict.group;
  }
  EXPECT_GE(seen.size(), 4u);
}

TEST(SnCertificateTest, Examples) {
  const auto v1 = sn_certificate(MonicIntPoly{0, 0, 0, -1, -1}, 50);
  EXPECT_EQ(v1.status, VerdictStatus::kCertifiedSn);
  EXPECT_EQ(v1.group, "S5");
  EXPECT_FALSE(v1.evidence.empty());
  EXPECT_EQ(sn_certificate(MonicIntPoly{0, -3, -1}).status, VerdictStatus::kCertifiedSubsetAn);
  const auto v3 = sn_certificate(MonicIntPoly{0, 0, 0, 0, -2}, 50);
  EXPECT_EQ(v3.status, VerdictStatus::kUnresolved);
  EXPECT_EQ(v3.evidence.size(), 50u);
}

TEST(SnCertificateTest, AgreesWithExactPathOnRandomQuintics) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-20, 20);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> a;
    for (int i = 0; i < 5; ++i) a.emplace_back(coef(rng));
    const MonicIntPoly f(a);
    const BigInt d = poly::disc(f);
    if (d == 0 || !is_irreducible_over_Z(f)) continue;
    const auto cert = sn_certificate(f);
    const auto ex = galois_group_exact(f);
    if (cert.status == VerdictStatus::kCertifiedSn) {
      ++certified;
      ASSERT_EQ(ex.group, "S5");
    }
    if (cert.status == VerdictStatus::kCertifiedSubsetAn) {
      ASSERT_TRUE(ex.group == "C5" || ex.group == "D5" || ex.group == "A5") << ex.group;
    }
  }
  EXPECT_GT(certified, 200);
}

TEST(WitnessTest, DegreeMasksAndBits) {
  EXPECT_EQ(degree_sum_mask(poly::SplittingType::parse("2 1")), 0b1111u);
  EXPECT_EQ(degree_sum_mask(poly::SplittingType::parse("3")), 0b1001u);
  EXPECT_TRUE(cycle_type_witness({2, 1, 1, 1}, 5) & witness::kTransposition);
  EXPECT_TRUE(cycle_type_witness({3, 2}, 5) & witness::kTransposition);
  EXPECT_FALSE(cycle_type_witness({2, 2, 1}, 5) & witness::kTransposition);
  EXPECT_TRUE(cycle_type_witness({5, 1, 1}, 7) & witness::kBigPrimeCycle);
  EXPECT_FALSE(cycle_type_witness({5, 1, 1}, 7) & witness::kJordanCycle);
  EXPECT_TRUE(cycle_type_witness({5, 1, 1, 1}, 8) & witness::kJordanCycle);
  EXPECT_TRUE(witnesses_force_sn(witness::kThreeDivides | witness::kOdd, 5));
  EXPECT_FALSE(witnesses_force_sn(witness::kOdd, 5));
}

}  // namespace
}  // namespace vdw::galois
