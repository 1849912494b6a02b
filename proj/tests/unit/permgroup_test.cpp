#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "vdw/core/error.hpp"
#include "vdw/permgroup/catalogue.hpp"
#include "vdw/permgroup/product_action.hpp"

namespace vdw::perm {
namespace {

using Cycles = std::vector<std::vector<Letter>>;

// Parity-based oracle for A_4, independent of the closure code.
std::vector<std::vector<int>> even_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void expect_error(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(PermutationTest, CycleTypeAndIndex) {
  EXPECT_EQ(Permutation(4).cycle_type(), (std::vector<std::size_t>{1, 1, 1, 1}));
  auto g = Permutation::parse(5, "(1 2)(3 4 5)");
  EXPECT_EQ(g.cycle_type(), (std::vector<std::size_t>{3, 2}));
  std::vector<Letter> eleven(11);
  std::iota(eleven.begin(), eleven.end(), 1);
  auto c11 = Permutation::from_cycles(11, {eleven});
  EXPECT_EQ(c11.cycle_type(), (std::vector<std::size_t>{11}));
  EXPECT_EQ(Permutation(7).ind(), 0u);
  EXPECT_EQ(Permutation::parse(5, "(1 2)").ind(), 1u);
  EXPECT_EQ(c11.ind(), 10u);
}

TEST(PermutationTest, IndexAgreesWithCycleSum) {
  auto s6 = symmetric_group(6);
  for (const auto& g : s6.elements()) {
    EXPECT_EQ(g.ind(), ind_from_cycle_type(g.cycle_type()));
    EXPECT_EQ(g.ind(), g.degree() - g.orbit_count());
  }
}

TEST(PermutationTest, ParseRoundTrip) {
  auto g = Permutation::parse(6, "(1,4)(2 3 6)");
  EXPECT_EQ(g.to_string(), "(1 4)(2 3 6)");
  EXPECT_EQ(Permutation::parse(6, g.to_string()), g);
  EXPECT_TRUE(g.then(g.inverse()).is_identity());
  EXPECT_EQ(g.pow(6), Permutation(6));
}

TEST(GroupTest, IndexOfGroup) {
  for (unsigned p : {3u, 5u, 7u, 11u}) EXPECT_EQ(cyclic_group(p).ind(), p - 1);
  EXPECT_EQ(mathieu11().ind(), 4u);
  EXPECT_EQ(mathieu11().order(), 7920u);
  EXPECT_EQ(wreath_product_action({5, 1, 2}).ind(), 5u);
  expect_error(ErrorCode::kTrivialGroup, [] { (void)PermGroup(3, {}).ind(); });
  expect_error(ErrorCode::kGroupTooLarge, [] { (void)symmetric_group(8).ind(100); });
}

TEST(GroupTest, MinMovedPoints) {
  for (unsigned n = 2; n <= 7; ++n) EXPECT_EQ(symmetric_group(n).min_moved_points(), 2u);
  EXPECT_EQ(cyclic_group(5).min_moved_points(), 5u);
  std::size_t oracle = 4;
  for (const auto& p : even_permutations(4)) {
    std::size_t moved = 0;
    for (int i = 0; i < 4; ++i) moved += p[i] != i;
    if (moved > 0) oracle = std::min(oracle, moved);
  }
  ASSERT_EQ(oracle, 3u);
  EXPECT_EQ(alternating_group(4).min_moved_points(), oracle);
  EXPECT_EQ(alternating_group(4).order(), even_permutations(4).size());
  EXPECT_EQ(alternating_group(4).ind(), 2u);
}

TEST(GroupTest, Transitivity) {
  EXPECT_TRUE(cyclic_group(5).is_transitive());
  EXPECT_FALSE(PermGroup(3, {Permutation::parse(3, "(1 2)")}).is_transitive());
  PermGroup s3xs2(5, {Permutation::parse(5, "(1 2)"), Permutation::parse(5, "(1 2 3)"),
                      Permutation::parse(5, "(4 5)")});
  EXPECT_FALSE(s3xs2.is_transitive());
}

TEST(GroupTest, Primitivity) {
  EXPECT_FALSE(cyclic_group(4).is_primitive());
  EXPECT_TRUE(cyclic_group(5).is_primitive());
  EXPECT_FALSE(imprimitive_wreath_action(3, 2).is_primitive());
  expect_error(ErrorCode::kNotTransitive,
               [] { (void)PermGroup(3, {Permutation::parse(3, "(1 2)")}).is_primitive(); });
}

// Block oracle: B is a block iff every element maps B to B or to a disjoint set.
bool has_block_oracle(const PermGroup& g) {
  std::size_t n = g.degree();
  const auto& all = g.elements();
  for (std::size_t size = 2; size < n; ++size) {
    if (n % size != 0) continue;
    std::vector<bool> choose(n - 1, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(size - 1), true);
    do {
      std::set<Letter> block{0};
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (choose[i]) block.insert(static_cast<Letter>(i + 1));
      bool ok = true;
      for (const auto& h : all) {
        std::size_t hit = 0;
        for (Letter x : block) hit += block.count(h(x));
        if (hit != 0 && hit != block.size()) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return false;
}

TEST(WreathTest, ProductActionExamples) {
  auto g312 = wreath_product_action({3, 1, 2});
  EXPECT_EQ(g312.degree(), 9u);
  EXPECT_EQ(g312.order(), 72u);
  auto g521 = wreath_product_action({5, 2, 1});
  EXPECT_EQ(g521.degree(), 10u);
  EXPECT_EQ(g521.order(), 120u);
  EXPECT_TRUE(g521.is_transitive());
  EXPECT_TRUE(g521.is_primitive());
  EXPECT_FALSE(has_block_oracle(g521));
  auto g512 = wreath_product_action({5, 1, 2});
  EXPECT_EQ(g512.degree(), 25u);
  EXPECT_TRUE(g512.is_primitive());
  EXPECT_EQ(g512.ind(), 5u);
  expect_error(ErrorCode::kDegreeTooLarge, [] { (void)wreath_product_action({20, 9, 3}); });
}

TEST(WreathTest, BlockAlgorithmMatchesOracle) {
  for (auto* name : {"C6", "D5", "Wr(2,3)", "Wr(3,2)", "PA(3,1,2)", "AGL7", "A4", "S4", "D4"}) {
    auto g = group_by_name(name).group;
    EXPECT_EQ(g.is_primitive(), !has_block_oracle(g)) << name;
  }
}

TEST(WreathTest, ExplicitOrderViaElements) {
  // 72 distinct images of all (g1, g2; h) triples, independent of the closure.
  ProductActionSpec spec{3, 1, 2};
  auto s3 = symmetric_group(3).elements();
  auto s2 = symmetric_group(2).elements();
  std::set<std::vector<Letter>> images;
  for (const auto& a : s3)
    for (const auto& b : s3)
      for (const auto& h : s2) images.insert(product_action_image(spec, {{a, b}, h}).images());
  EXPECT_EQ(images.size(), 72u);
}

TEST(WreathTest, LexicographicRanking) {
  auto subsets = ksubsets_lex(4, 2);
  std::vector<std::uint64_t> expected{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  EXPECT_EQ(subsets, expected);
}

TEST(WreathTest, BlowDownExamples) {
  ProductActionSpec s521{5, 2, 1};
  auto r1 = blow_down_index_ratio(s521, {{Permutation::parse(5, "(1 2)")}, Permutation(1)});
  EXPECT_EQ(r1, std::make_pair(std::size_t{3}, std::size_t{1}));
  ProductActionSpec s312{3, 1, 2};
  auto r2 = blow_down_index_ratio(s312, {{Permutation(3), Permutation(3)}, Permutation::parse(2, "(1 2)")});
  EXPECT_EQ(r2, std::make_pair(std::size_t{3}, std::size_t{3}));
  expect_error(ErrorCode::kIdentityElement,
               [&] { (void)blow_down_index_ratio(s312, {{Permutation(3), Permutation(3)}, Permutation(2)}); });
}

TEST(WreathTest, CountMovedKSubsets) {
  EXPECT_EQ(count_moved_ksubsets(Permutation::parse(4, "(1 2)"), 1), 2u);
  EXPECT_EQ(count_moved_ksubsets(Permutation::parse(4, "(1 2)"), 2 - 1), 2u);
  EXPECT_EQ(count_moved_ksubsets(Permutation::parse(6, "(1 2)(3 4)(5 6)"), 2), 12u);
  // f(m,2,y) = 2(m - y - 1) y for k = 2
  for (unsigned m = 5; m <= 10; ++m) {
    for (unsigned y = 1; 2 * y <= m; ++y) {
      Cycles c;
      for (unsigned i = 0; i < y; ++i) c.push_back({2 * i + 1, 2 * i + 2});
      EXPECT_EQ(count_moved_ksubsets(Permutation::from_cycles(m, c), 2), 2 * (m - y - 1) * y) << m << " " << y;
    }
  }
}

TEST(WreathTest, CountMovedRejectsLargeK) {
  expect_error(ErrorCode::kInvalidArgument, [] { (void)count_moved_ksubsets(Permutation::parse(4, "(1 2)"), 2); });
}

TEST(CatalogueTest, SelfChecksAndOrders) {
  for (const auto& e : catalogue()) {
    ASSERT_TRUE(e.expected_order.has_value()) << e.name;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(e.group.order())), *e.expected_order) << e.name;
    EXPECT_LE(e.group.degree(), 30u) << e.name;
  }
  auto c7 = group_by_name("C7");
  EXPECT_EQ(c7.group.order(), 7u);
  EXPECT_TRUE(c7.group.is_transitive());
  EXPECT_TRUE(c7.group.is_primitive());
}

TEST(CatalogueTest, MathieuSelfCheckRejectsWrongGenerators) {
  PermGroup fake(11, {Permutation::parse(11, "(1 2 3 4 5 6 7 8 9 10 11)")});
  expect_error(ErrorCode::kInvariantViolation, [&] { self_check_mathieu11(fake); });
}

TEST(CatalogueTest, JsonLine) {
  auto s = summarize("A4", alternating_group(4));
  EXPECT_EQ(to_json_line(s),
            R"({"name":"A4","degree":4,"order":12,"transitive":true,"primitive":true,"ind":2,"min_moved":3})");
}

TEST(CatalogueTest, UnknownName) {
  expect_error(ErrorCode::kUnknownGroup, [] { (void)group_by_name("Q8"); });
}

}  // namespace
}  // namespace vdw::perm
