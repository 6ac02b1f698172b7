#pragma once

#include <vector>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/dual.hpp"
#include "shadowdyn/topograph.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn {

// Triples are laid out as FaceTriple so that L/R means the same thing here as
// on a topograph: the tree vertex holds the three region values.
using MarkovTriple = FaceTriple<BigInt>;
using ShadowMarkovTriple = FaceTriple<DualInt>;

/// x² + y² + z² = 3xyz.
bool satisfies_markov(const MarkovTriple& t);

/// X² + Y² + Z² = (3 − 2ε)XYZ over integer dual numbers.
bool satisfies_shadow_markov(const ShadowMarkovTriple& t);

/// (x, y, 3xy − z). Throws InvalidTriple if t is not a Markov triple.
MarkovTriple vieta_markov(const MarkovTriple& t);

/// (X, Y, (3 − 2ε)XY − Z). Throws InvalidTriple off the shadow Markov surface.
ShadowMarkovTriple shadow_vieta(const ShadowMarkovTriple& t);

/// Cyclic permutation (x, y, z) → (y, z, x).
template <class T>
FaceTriple<T> rotate(const FaceTriple<T>& t) {
  return {t.y, t.z, t.x};
}

/// Child vertex: Vieta on the region left behind, in topograph layout.
MarkovTriple markov_step(const MarkovTriple& t, Turn turn);
ShadowMarkovTriple shadow_markov_step(const ShadowMarkovTriple& t, Turn turn);

/// (1, 1, 1).
MarkovTriple markov_root();

/// Initial units X = 1, Y = Z = 1 + ε, placed so that the
/// leftmost branch is the Fibonacci branch: (x, y, z) = (1 + ε, 1, 1 + ε).
ShadowMarkovTriple shadow_markov_root();

Tree<MarkovTriple> markov_tree(int depth, int depth_limit = kDefaultDepthLimit,
                               unsigned threads = 1);
Tree<ShadowMarkovTriple> shadow_markov_tree(int depth, int depth_limit = kDefaultDepthLimit,
                                            unsigned threads = 1);

MarkovTriple real_part(const ShadowMarkovTriple& t);

/// Shadows of the first n values created along the leftmost branch
/// (the root's z included): 1, 4, 13, 40, ...
std::vector<BigInt> fibonacci_branch_shadow(int n);

/// Real values along the same branch: 1, 2, 5, 13, 34, ...
std::vector<BigInt> fibonacci_branch_values(int n);

}  // namespace shadowdyn
