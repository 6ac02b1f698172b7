#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/dual.hpp"
#include "shadowdyn/euclid.hpp"
#include "shadowdyn/topograph.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn {

/// p² − d·q² = 1.
struct PellSolution {
  BigInt d;
  BigInt p;
  BigInt q;

  bool valid() const { return p * p - d * q * q == 1; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Fundamental Pell solution plus the shadow scale m. With ξ = p + q√d and
/// η = p − q√d (ξη = 1) every closed form below is an integer.
struct PellContext {
  PellSolution pell;
  BigInt m;

  static PellContext for_d(const BigInt& d, const BigInt& m = 1);
};

/// Minimal positive solution from the continued fraction of √d; when the
/// period length is odd the convergent after two periods is used.
/// Throws SquareInput for d < 2 or square d.
PellSolution pell_fundamental(const BigInt& d);

/// Ascending scan q = 1, 2, ... up to max_q. Slow, but obviously correct.
std::optional<PellSolution> pell_brute_force(std::int64_t d, std::int64_t max_q);

/// Indices beyond this are rejected (P_a has about a·log2(ξ) bits).
inline constexpr std::int64_t kMaxPellIndex = std::int64_t{1} << 26;

/// ξ^a = P_a + U_a·q√d.
struct PellPower {
  BigInt P;
  BigInt U;
};

/// Binary powering in ℤ[q√d] using (q√d)² = p² − 1. Exact for all a,
/// with P_{−a} = P_a and U_{−a} = −U_a.
PellPower pell_power(const PellContext& ctx, std::int64_t a);

/// P_a = (ξ^a + η^a)/2.
BigInt half_trace(const PellContext& ctx, std::int64_t a);

/// U_a = (ξ^a − η^a)/(ξ − η), so (ξ^a − η^a)/(2√d) = q·U_a.
BigInt half_diff_unit(const PellContext& ctx, std::int64_t a);

/// P_0..P_n by P_{a+1} = 2p·P_a − P_{a−1}.
std::vector<BigInt> half_trace_sequence(const PellContext& ctx, std::int64_t n);

/// U_0..U_n by the same three-term recurrence.
std::vector<BigInt> half_diff_sequence(const PellContext& ctx, std::int64_t n);

using MordellTriple = FaceTriple<BigInt>;
/// Value and shadow packed as dual numbers x + x̃ε.
using ShadowMordellTriple = FaceTriple<DualInt>;

/// x² + y² + z² = 2xyz + 1.
bool satisfies_mordell(const MordellTriple& t);

/// Same equation over the dual numbers (value and shadow parts).
bool satisfies_shadow_mordell(const ShadowMordellTriple& t);

/// (x − yz)x̃ + (y − xz)ỹ + (z − xy)z̃ = 0.
bool satisfies_shadow_constraint(const ShadowMordellTriple& t);

MordellTriple value_part(const ShadowMordellTriple& t);
FaceTriple<BigInt> shadow_part(const ShadowMordellTriple& t);

/// (P_a, P_b, P_c). Throws BadEuclidTriple unless a + b = c.
MordellTriple mordell_triple(const PellContext& ctx, const EuclidTriple& e);

/// Principal shadow x̃ = m·a·q·U_a (likewise for b, c). Throws BadEuclidTriple.
ShadowMordellTriple principal_shadow(const PellContext& ctx, const EuclidTriple& e);

/// (x, y, 2xy − z). Throws InvalidTriple off the Mordell surface.
MordellTriple vieta_mordell(const MordellTriple& t);

/// (X, Y, 2XY − Z) over dual numbers. Throws InvalidTriple.
ShadowMordellTriple shadow_vieta_mordell(const ShadowMordellTriple& t);

MordellTriple mordell_step(const MordellTriple& t, Turn turn);
ShadowMordellTriple shadow_mordell_step(const ShadowMordellTriple& t, Turn turn);

/// Vieta trees rooted at the Euclid root (1, 1, 2). Node w equals
/// mordell_triple / principal_shadow of the Euclid triple at w.
Tree<MordellTriple> mordell_tree(const PellContext& ctx, int depth,
                                 int depth_limit = kDefaultDepthLimit, unsigned threads = 1);
Tree<ShadowMordellTriple> shadow_mordell_tree(const PellContext& ctx, int depth,
                                              int depth_limit = kDefaultDepthLimit,
                                              unsigned threads = 1);

/// Dual Vieta orbit of (1 + aε, 1 + bε, 1 + cε).
Tree<ShadowMordellTriple> special_orbit_tree(const BigInt& a, const BigInt& b, const BigInt& c,
                                             int depth, int depth_limit = kDefaultDepthLimit,
                                             unsigned threads = 1);

/// ε-components of special_orbit_tree. Equal node by node to the topograph
/// of a·x² + (c − a − b)·xy + b·y².
Tree<FaceTriple<BigInt>> special_orbit_shadow_tree(const BigInt& a, const BigInt& b,
                                                   const BigInt& c, int depth,
                                                   int depth_limit = kDefaultDepthLimit,
                                                   unsigned threads = 1);

/// P_1..P_n: the values along the leftmost branch of the Mordell tree.
std::vector<BigInt> mordell_branch(const PellContext& ctx, std::int64_t n);

}  // namespace shadowdyn
