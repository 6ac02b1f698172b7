#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/euclid.hpp"
#include "shadowdyn/mordell.hpp"
#include "shadowdyn/topograph.hpp"

namespace shadowdyn {

// Growth experiments along paths of the topograph. All sequences are exact
// integers; doubles appear only when the final logarithms are taken.

/// ln|z_k|/k for k = 1..|word|, z_k the value created at step k.
/// Throws ZeroValueEncountered.
std::vector<double> growth_series(const FaceTriple<BigInt>& start, const PathWord& word);

/// Windowed limsup of growth_series.
double growth_exponent_from(const FaceTriple<BigInt>& start, const PathWord& word);

/// Growth exponent of |Q| along the path from the root triple.
double topograph_growth_exponent(const QuadForm& q, const PathSpec& spec, std::int64_t n);

/// Growth exponent along the Conway river of q, starting at the river edge
/// found by find_river and walking its period `repeats` times.
double river_growth_exponent(const QuadForm& q, std::int64_t repeats);

/// ln|x̃(a)/x(a)| = ln|m·a·q·U_a / P_a|, formed from exact integers.
double log_shadow_ratio(const PellContext& ctx, const BigInt& a);

/// (1/k)·ln|x̃_k/x_k| for k = 1..n, indices a_k along the Euclid path.
std::vector<double> relative_growth_series(const PellContext& ctx, const PathSpec& spec,
                                           std::int64_t n);

/// Windowed limsup of relative_growth_series.
double relative_shadow_growth(const PellContext& ctx, const PathSpec& spec, std::int64_t n);

/// x̃(a)/(a·x(a)) = m·q·U_a/P_a exactly; tends to m/√d.
Rational shadow_ratio(const PellContext& ctx, std::int64_t a);

struct Gl2Check {
  LyapunovEstimate original;
  LyapunovEstimate image;
  std::optional<double> exact_original;
  std::optional<double> exact_image;
  /// nullopt when the image is ∞ (walked as a rational path).
  std::optional<ContinuedFraction> image_cf;
};

/// Estimates Λ at ξ and at (aξ + b)/(cξ + d), the latter re-expanded as a
/// continued fraction. Needs a continued-fraction path and det g = ±1;
/// throws DegenerateImage for other matrices and InvalidArgument for word
/// paths.
Gl2Check gl2_invariance_check(const PathSpec& spec, const Mobius& g, std::int64_t n);

}  // namespace shadowdyn
