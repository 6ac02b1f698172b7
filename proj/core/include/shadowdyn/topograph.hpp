#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn {

/// Binary quadratic form a·x² + h·xy + b·y² in (a, h, b) notation.
struct QuadForm {
  BigInt a;
  BigInt h;
  BigInt b;

  /// h² − 4ab.
  BigInt discriminant() const { return BigInt(h * h - 4 * a * b); }

  BigInt operator()(const BigInt& x, const BigInt& y) const {
    return BigInt(a * x * x + h * x * y + b * y * y);
  }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// Three region values around a vertex. x and y flank the edge toward the
/// root (x on the left, looking away from the root); z is the region ahead.
template <class T>
struct FaceTriple {
  T x;
  T y;
  T z;

  friend bool operator==(const FaceTriple&, const FaceTriple&) = default;
};

enum class Region { X, Y, Z };

/// Primitive lattice vector, sign-normalized: v > 0, or u > 0 when v = 0.
struct RegionVector {
  BigInt u;
  BigInt v;

  static RegionVector normalized(BigInt u, BigInt v);

  std::string farey() const { return to_string(u) + "/" + to_string(v); }

  friend bool operator==(const RegionVector&, const RegionVector&) = default;
};

/// Oriented superbase at an edge: the actual (not sign-normalized) lattice
/// vectors of the left and right regions. The region ahead is left + right,
/// the one behind is left − right.
struct EdgeFrame {
  BigInt lu, lv;  // left
  BigInt ru, rv;  // right

  static EdgeFrame root() { return {1, 0, 0, 1}; }

  EdgeFrame step(Turn t) const;
  /// Same edge traversed the other way.
  EdgeFrame reversed() const;

  RegionVector region(Region which) const;

  friend bool operator==(const EdgeFrame&, const EdgeFrame&) = default;
};

/// (a, b, a + b + h): values on e1 = (1,0), e2 = (0,1) and e1 + e2.
FaceTriple<BigInt> root_triple(const QuadForm& q);

/// Arithmetic progression rule: crossing an edge flanked by values p and r
/// replaces the opposite value s with 2(p + r) − s.
template <class T>
FaceTriple<T> ap_step(const FaceTriple<T>& t, Turn turn) {
  if (turn == Turn::L) {
    T fresh = T(t.x + t.z);
    fresh += fresh;
    fresh -= t.y;
    return {t.x, t.z, std::move(fresh)};
  }
  T fresh = T(t.y + t.z);
  fresh += fresh;
  fresh -= t.x;
  return {t.z, t.y, std::move(fresh)};
}

/// The same edge seen from its other end: (y, x, 2(x + y) − z).
template <class T>
FaceTriple<T> ap_reverse(const FaceTriple<T>& t) {
  T behind = T(t.x + t.y);
  behind += behind;
  behind -= t.z;
  return {t.y, t.x, std::move(behind)};
}

template <class T>
FaceTriple<T> walk(FaceTriple<T> t, const PathWord& word) {
  for (Turn turn : word) t = ap_step(t, turn);
  return t;
}

/// Triples at every vertex along `word`, root first; size |word| + 1.
std::vector<FaceTriple<BigInt>> values_along_path(const QuadForm& q, const PathWord& word);

EdgeFrame frame_at(const PathWord& word);

/// Primitive vector of one of the three regions at the vertex `word`.
RegionVector region_vector(const PathWord& word, Region which);

Tree<FaceTriple<BigInt>> enumerate(const QuadForm& q, int depth,
                                   int depth_limit = kDefaultDepthLimit, unsigned threads = 1);

Tree<EdgeFrame> enumerate_frames(int depth, int depth_limit = kDefaultDepthLimit);

/// Conway river of an indefinite form with non-square discriminant.
struct RiverDescription {
  FaceTriple<BigInt> start;
  EdgeFrame start_frame;
  PathWord period;
  /// States of the period, starting with `start`; one per step of `period`.
  std::vector<FaceTriple<BigInt>> period_states;
  /// Number of edges walked from the root before reaching the river.
  std::int64_t approach_steps = 0;
};

inline constexpr std::int64_t kRiverStepLimit = 1'000'000;

/// Descends from the root edge toward smaller |values| until an edge with
/// flanking values of opposite sign is found, then follows the river until
/// the starting edge state recurs.
///
/// Throws NotIndefinite (D <= 0), SquareDiscriminant (D a perfect square) and
/// ZeroValueEncountered.
RiverDescription find_river(const QuadForm& q, std::int64_t step_limit = kRiverStepLimit);

/// Next river edge: the flank whose sign matches z is replaced by z.
FaceTriple<BigInt> river_step(const FaceTriple<BigInt>& t, Turn* taken = nullptr);

/// r₂(n) = 4·(d₁(n) − d₃(n)) counted over divisors.
std::int64_t jacobi_two_squares(std::int64_t n);

/// Counts (x, y) ∈ ℤ² with x² + y² = n directly.
std::int64_t brute_force_two_squares(std::int64_t n);

}  // namespace shadowdyn
