#include "shadowdyn/markov.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace shadowdyn {
namespace {

using testing::Gen;

TEST(Markov, Vieta) {
  EXPECT_EQ(vieta_markov({1, 1, 1}), (MarkovTriple{1, 1, 2}));
  EXPECT_EQ(vieta_markov({1, 2, 5}), (MarkovTriple{1, 2, 1}));
  EXPECT_EQ(vieta_markov({2, 5, 29}), (MarkovTriple{2, 5, 1}));
  EXPECT_EQ(vieta_markov(vieta_markov({5, 13, 194})), (MarkovTriple{5, 13, 194}));
  EXPECT_ERRC(vieta_markov({1, 2, 3}), Errc::InvalidTriple);
}

TEST(Markov, TreeShape) {
  const auto tree = markov_tree(2);
  EXPECT_EQ(tree.root(), (MarkovTriple{1, 1, 1}));
  EXPECT_EQ(tree.at(PathWord::parse("L")), (MarkovTriple{1, 1, 2}));
  EXPECT_EQ(tree.at(PathWord::parse("LL")), (MarkovTriple{1, 2, 5}));
  EXPECT_ERRC(markov_tree(25), Errc::DepthLimit);
}

TEST(Markov, FibonacciBranch) {
  EXPECT_EQ(fibonacci_branch_values(6), (std::vector<BigInt>{1, 2, 5, 13, 34, 89}));
  // odd-index Fibonacci numbers by direct recursion
  BigInt a = 0, b = 1;
  const auto values = fibonacci_branch_values(30);
  for (const auto& v : values) {
    EXPECT_EQ(v, b);
    BigInt next = a + b;
    a = b;
    b = next;
    next = a + b;
    a = b;
    b = next;
  }
}

TEST(ShadowMarkov, RootSatisfiesEquation) {
  const auto root = shadow_markov_root();
  EXPECT_TRUE(satisfies_shadow_markov(root));
  // 1 + (1+ε)² + (1+ε)² = 3 + 4ε
  const DualInt lhs = root.x * root.x + root.y * root.y + root.z * root.z;
  EXPECT_EQ(lhs, DualInt(3, 4));
  EXPECT_EQ(real_part(root), (MarkovTriple{1, 1, 1}));
}

TEST(ShadowMarkov, VietaIsInvolution) {
  const ShadowMarkovTriple t{DualInt(1), DualInt(1, 1), DualInt(1, 1)};
  const auto moved = shadow_vieta(t);
  EXPECT_TRUE(satisfies_shadow_markov(moved));
  EXPECT_EQ(moved.z, DualInt(3, -2) * t.x * t.y - t.z);
  EXPECT_EQ(shadow_vieta(moved), t);
  EXPECT_ERRC(shadow_vieta({DualInt(1), DualInt(1), DualInt(2)}), Errc::InvalidTriple);
}

TEST(ShadowMarkov, FibonacciShadow) {
  EXPECT_EQ(fibonacci_branch_shadow(3), (std::vector<BigInt>{1, 4, 13}));
  const std::vector<BigInt> expected{1, 4, 13, 40, 120, 354, 1031, 2972, 8495};
  EXPECT_EQ(fibonacci_branch_shadow(9), expected);
  // the same numbers read off the tree
  const auto tree = shadow_markov_tree(8);
  PathWord w;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(tree.at(w).z.sh, expected[k]);
    w.push_back(Turn::L);
  }
}

TEST(ShadowMarkov, ClosureAndProjectionDepth12) {
  const auto shadow = shadow_markov_tree(12);
  const auto real = markov_tree(12);
  ASSERT_EQ(shadow.size(), real.size());
  for (std::size_t i = 0; i < shadow.size(); ++i) {
    ASSERT_TRUE(satisfies_shadow_markov(shadow[i]));
    ASSERT_TRUE(satisfies_markov(real[i]));
    ASSERT_EQ(real_part(shadow[i]), real[i]);
  }
}

TEST(ShadowMarkov, ParallelIsIdentical) {
  EXPECT_EQ(shadow_markov_tree(11, kDefaultDepthLimit, 4).nodes(), shadow_markov_tree(11).nodes());
}

TEST(MarkovProperty, RandomNodesInvolutionAndRotation) {
  const auto tree = shadow_markov_tree(12);
  Gen gen(31);
  for (int run = 0; run < 1000; ++run) {
    const auto& t = tree[static_cast<std::size_t>(gen.integer(0, tree.size() - 1))];
    ASSERT_EQ(shadow_vieta(shadow_vieta(t)), t);
    const auto r = rotate(t);
    ASSERT_TRUE(satisfies_shadow_markov(r));
    ASSERT_TRUE(satisfies_shadow_markov(shadow_vieta(r)));
    ASSERT_EQ(rotate(rotate(r)), t);
  }
}

TEST(MarkovProperty, ProjectionCommutesWithSteps) {
  Gen gen(37);
  for (int run = 0; run < testing::kPropertyRuns; ++run) {
    ShadowMarkovTriple s = shadow_markov_root();
    MarkovTriple m = markov_root();
    for (Turn turn : gen.word(25)) {
      s = shadow_markov_step(s, turn);
      m = markov_step(m, turn);
      ASSERT_EQ(real_part(s), m);
      ASSERT_EQ(real_part(shadow_vieta(s)), vieta_markov(m));
    }
  }
}

}  // namespace
}  // namespace shadowdyn
