#include "shadowdyn/topograph.hpp"

#include <numeric>
#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "support.hpp"

namespace shadowdyn {
namespace {

using testing::Gen;

BigInt value_at(const QuadForm& q, const RegionVector& v) { return q(v.u, v.v); }

// Independent Stern–Brocot descent: the word leading to u/v, with L moving
// toward 1/0 and R toward 0/1.
PathWord stern_brocot_word(BigInt u, BigInt v) {
  PathWord w;
  while (u != v) {
    if (u > v) {
      w.push_back(Turn::L);
      u -= v;
    } else {
      w.push_back(Turn::R);
      v -= u;
    }
  }
  return w;
}

TEST(Topograph, RootTriple) {
  EXPECT_EQ(root_triple({1, 1, 1}), (FaceTriple<BigInt>{1, 1, 3}));
  EXPECT_EQ(root_triple({1, 0, 1}), (FaceTriple<BigInt>{1, 1, 2}));
  EXPECT_EQ(root_triple({17, -12, 2}), (FaceTriple<BigInt>{17, 2, 7}));
}

TEST(Topograph, ArithmeticProgressionStep) {
  const FaceTriple<BigInt> t{1, 1, 3};
  EXPECT_EQ(ap_step(t, Turn::L).z, 7);
  EXPECT_EQ(ap_step(FaceTriple<BigInt>{1, 1, 2}, Turn::L).z, 5);
  EXPECT_EQ(ap_step(FaceTriple<BigInt>{4, 4, 4}, Turn::R).z, 12);
  EXPECT_EQ(ap_reverse(ap_reverse(t)), t);
}

TEST(Topograph, ValuesAlongPath) {
  const auto path = values_along_path({1, 1, 1}, PathWord());
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0], (FaceTriple<BigInt>{1, 1, 3}));
  const auto w = PathWord::parse("LRRL");
  EXPECT_EQ(values_along_path({2, 1, -3}, w).size(), 5u);
}

TEST(Topograph, EnumerateShape) {
  const auto t0 = enumerate({1, 1, 1}, 0);
  EXPECT_EQ(t0.size(), 1u);
  const auto t2 = enumerate({1, 1, 1}, 2);
  EXPECT_EQ(t2.size(), 7u);
  std::set<BigInt> seen;
  for (const auto& t : t2.nodes()) seen.insert({t.x, t.y, t.z});
  EXPECT_TRUE(seen.count(1) && seen.count(3) && seen.count(7));
  EXPECT_ERRC(enumerate({1, 1, 1}, 25), Errc::DepthLimit);
  EXPECT_NO_THROW(enumerate({1, 1, 1}, 1, 30));
}

TEST(Topograph, RootRegions) {
  EXPECT_EQ(region_vector(PathWord(), Region::X), (RegionVector{1, 0}));
  EXPECT_EQ(region_vector(PathWord(), Region::Y), (RegionVector{0, 1}));
  EXPECT_EQ(region_vector(PathWord(), Region::Z), (RegionVector{1, 1}));
  EXPECT_EQ(RegionVector::normalized(-2, -3), (RegionVector{2, 3}));
  EXPECT_EQ(RegionVector::normalized(-1, 0), (RegionVector{1, 0}));
  EXPECT_EQ(RegionVector::normalized(4, -1), (RegionVector{-4, 1}));
}

TEST(Topograph, FareyLabelsFollowSternBrocot) {
  const auto frames = enumerate_frames(10);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const RegionVector z = frames[i].region(Region::Z);
    EXPECT_EQ(stern_brocot_word(z.u, z.v), Tree<int>::word_of(i)) << z.farey();
  }
}

TEST(Topograph, ValuesMatchDirectEvaluation) {
  const std::vector<QuadForm> forms{{1, 1, 1}, {1, 0, 1}, {17, -12, 2}, {1, 0, -2}, {-5, 7, 3}};
  const auto frames = enumerate_frames(10);
  for (const auto& q : forms) {
    const auto tree = enumerate(q, 10);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const auto& f = frames[i];
      ASSERT_EQ(tree[i].x, value_at(q, f.region(Region::X)));
      ASSERT_EQ(tree[i].y, value_at(q, f.region(Region::Y)));
      ASSERT_EQ(tree[i].z, value_at(q, f.region(Region::Z)));
    }
  }
}

TEST(Topograph, EisensteinValuesAvoidTwoModThree) {
  const auto tree = enumerate({1, 1, 1}, 10);
  for (const auto& t : tree.nodes()) {
    EXPECT_NE(BigInt(t.z % 3), 2);
  }
  // and the oracle over coprime pairs agrees
  for (int u = 0; u <= 40; ++u) {
    for (int v = 0; v <= 40; ++v) {
      if (std::gcd(u, v) != 1) continue;
      EXPECT_NE((u * u + u * v + v * v) % 3, 2);
    }
  }
}

TEST(Topograph, ParallelEnumerationIsIdentical) {
  const QuadForm q{3, -7, 2};
  const auto seq = enumerate(q, 12);
  for (unsigned threads : {2u, 3u, 8u}) {
    EXPECT_EQ(enumerate(q, 12, kDefaultDepthLimit, threads).nodes(), seq.nodes());
  }
}

TEST(Topograph, FrameStepAndReverse) {
  const EdgeFrame root = EdgeFrame::root();
  // reversing twice negates both vectors, which leaves the regions unchanged
  const EdgeFrame twice = root.reversed().reversed();
  for (Region r : {Region::X, Region::Y, Region::Z}) EXPECT_EQ(twice.region(r), root.region(r));
  EXPECT_EQ(root.reversed().region(Region::Z), (RegionVector{-1, 1}));
  EXPECT_EQ(frame_at(PathWord::parse("LR")), root.step(Turn::L).step(Turn::R));
}

TEST(Jacobi, SmallValues) {
  EXPECT_EQ(jacobi_two_squares(1), 4);
  EXPECT_EQ(jacobi_two_squares(3), 0);
  EXPECT_EQ(jacobi_two_squares(5), 8);
  EXPECT_EQ(jacobi_two_squares(25), 12);
  EXPECT_EQ(brute_force_two_squares(5), 8);
}

TEST(Jacobi, MatchesLatticeCount) {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    ASSERT_EQ(jacobi_two_squares(n), brute_force_two_squares(n)) << n;
  }
}

TEST(River, Errors) {
  EXPECT_ERRC(find_river({1, 0, 1}), Errc::NotIndefinite);
  EXPECT_ERRC(find_river({1, 1, 1}), Errc::NotIndefinite);
  EXPECT_ERRC(find_river({1, 0, -1}), Errc::SquareDiscriminant);
  EXPECT_ERRC(find_river({0, 1, 0}), Errc::SquareDiscriminant);
}

TEST(River, PeriodSeparatesSigns) {
  for (const QuadForm& q : {QuadForm{17, -12, 2}, QuadForm{1, 0, -2}, QuadForm{1, 0, -3},
                            QuadForm{-5, 1, 3}, QuadForm{2, 9, 1}}) {
    const auto river = find_river(q);
    ASSERT_FALSE(river.period.empty());
    ASSERT_EQ(river.period_states.size(), river.period.size());
    for (const auto& s : river.period_states) {
      EXPECT_LT(sign(s.x) * sign(s.y), 0);
    }
    // the frame carries the same values
    EXPECT_EQ(river.start.x, value_at(q, river.start_frame.region(Region::X)));
    EXPECT_EQ(river.start.y, value_at(q, river.start_frame.region(Region::Y)));
    EXPECT_EQ(river.start.z, value_at(q, river.start_frame.region(Region::Z)));
    // walking the period returns to the start
    FaceTriple<BigInt> t = river.start;
    for (Turn turn : river.period) {
      Turn taken;
      t = river_step(t, &taken);
      EXPECT_EQ(taken, turn);
    }
    EXPECT_EQ(t, river.start);
  }
}

using Edge = std::pair<std::string, std::string>;

Edge edge_key(const EdgeFrame& f) {
  auto a = f.region(Region::X).farey(), b = f.region(Region::Y).farey();
  if (b < a) std::swap(a, b);
  return {a, b};
}

// Sign-changing edges of the topograph within `depth` of the root edge, in
// both directions, by direct evaluation of q.
std::pair<std::set<Edge>, std::set<Edge>> scan_edges(const QuadForm& q, int depth) {
  std::set<Edge> all, changing;
  for (const EdgeFrame& root : {EdgeFrame::root(), EdgeFrame::root().reversed()}) {
    const auto frames =
        grow_tree(root, depth, [](const EdgeFrame& f, Turn t) { return f.step(t); });
    for (const auto& f : frames.nodes()) {
      const Edge e = edge_key(f);
      all.insert(e);
      if (sign(value_at(q, f.region(Region::X))) * sign(value_at(q, f.region(Region::Y))) < 0) {
        changing.insert(e);
      }
    }
  }
  return {all, changing};
}

std::set<Edge> river_edges(const QuadForm& q, int steps) {
  const auto river = find_river(q);
  std::set<Edge> out;
  for (bool forward : {true, false}) {
    FaceTriple<BigInt> t = forward ? river.start : ap_reverse(river.start);
    EdgeFrame f = forward ? river.start_frame : river.start_frame.reversed();
    for (int i = 0; i < steps; ++i) {
      out.insert(edge_key(f));
      Turn taken;
      t = river_step(t, &taken);
      f = f.step(taken);
    }
  }
  return out;
}

TEST(River, MatchesDepthTwelveScan) {
  for (const QuadForm& q : {QuadForm{17, -12, 2}, QuadForm{1, 0, -2}, QuadForm{3, 1, -1}}) {
    const auto [all, changing] = scan_edges(q, 12);
    ASSERT_FALSE(changing.empty());
    std::set<Edge> seen;
    for (const auto& e : river_edges(q, 200)) {
      if (all.count(e)) seen.insert(e);
    }
    EXPECT_EQ(seen, changing);
  }
}

TEST(TopographProperty, ParallelogramLaw) {
  Gen gen(17);
  for (int run = 0; run < 10000; ++run) {
    const QuadForm q{gen.big(6), gen.big(6), gen.big(6)};
    const BigInt u1 = gen.big(5), u2 = gen.big(5), v1 = gen.big(5), v2 = gen.big(5);
    ASSERT_EQ(q(u1 + v1, u2 + v2) + q(u1 - v1, u2 - v2), 2 * (q(u1, u2) + q(v1, v2)));
  }
}

TEST(TopographProperty, RandomWordsGiveCoprimeVectors) {
  Gen gen(19);
  for (int run = 0; run < 10000; ++run) {
    const PathWord w = gen.word(static_cast<std::size_t>(gen.integer(0, 40)));
    for (Region r : {Region::X, Region::Y, Region::Z}) {
      const RegionVector v = region_vector(w, r);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), v.u.get_mpz_t(), v.v.get_mpz_t());
      ASSERT_EQ(g, 1) << w.str();
      ASSERT_TRUE(v.v > 0 || (v.v == 0 && v.u > 0));
    }
  }
}

TEST(TopographProperty, DiscriminantIsConstant) {
  Gen gen(23);
  for (int run = 0; run < 100; ++run) {
    const QuadForm q{gen.big(4), gen.big(4), gen.big(4)};
    const BigInt disc = q.discriminant();
    FaceTriple<BigInt> t = root_triple(q);
    for (Turn turn : gen.word(30)) {
      t = ap_step(t, turn);
      // local h across the x|y edge is z − x − y
      const BigInt h = t.z - t.x - t.y;
      ASSERT_EQ(h * h - 4 * t.x * t.y, disc);
    }
  }
}

TEST(TopographProperty, PathMatchesDirectEvaluation) {
  Gen gen(29);
  for (int run = 0; run < testing::kPropertyRuns; ++run) {
    const QuadForm q{gen.big(8), gen.big(8), gen.big(8)};
    const PathWord w = gen.word(static_cast<std::size_t>(gen.integer(0, 60)));
    const auto t = values_along_path(q, w).back();
    EXPECT_EQ(t.z, value_at(q, region_vector(w, Region::Z)));
    EXPECT_EQ(t.x, value_at(q, region_vector(w, Region::X)));
  }
}

}  // namespace
}  // namespace shadowdyn
