#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn {

/// (a, b, c) with a + b = c.
struct EuclidTriple {
  BigInt a;
  BigInt b;
  BigInt c;

  static EuclidTriple root() { return {1, 1, 2}; }

  bool valid() const { return a + b == c; }

  friend bool operator==(const EuclidTriple&, const EuclidTriple&) = default;
};

/// L: (a, c, a + c); R: (c, b, c + b). Same orientation as the topograph.
EuclidTriple euclid_step(const EuclidTriple& t, Turn turn);

/// Root first; size |word| + 1.
std::vector<EuclidTriple> euclid_path(const PathWord& word);

Tree<EuclidTriple> euclid_tree(int depth, int depth_limit = kDefaultDepthLimit);

/// A directed infinite path from the root, given either by a continued
/// fraction or by a word.
///
/// Continued fractions: the partial quotients c1, c2, c3, ... become blocks
/// L^c1 R^c2 L^c3 ...; the head c0 is not part of the word. The path then
/// converges to [c1; c2, c3, ...], which is 1/(ξ − c0) and hence
/// GL2(ℤ)-equivalent to ξ. Once a finite expansion runs out, the last letter
/// repeats forever (a rational point; the path runs along a tree edge).
///
/// Words: prefix followed by the period repeated forever; with an empty
/// period the last letter of the prefix repeats (L for an empty prefix).
class PathSpec {
 public:
  struct Word {
    PathWord prefix;
    PathWord period;
  };

  static PathSpec from_cf(ContinuedFraction cf) { return PathSpec(std::move(cf)); }
  static PathSpec from_word(PathWord prefix, PathWord period = {}) {
    return PathSpec(Word{std::move(prefix), std::move(period)});
  }
  static PathSpec periodic(PathWord period) { return from_word({}, std::move(period)); }
  /// [1; 1, 1, ...], the alternating word LRLR...
  static PathSpec golden();

  /// "golden", a word "LRR" (repeating), "word:prefix/period", or a continued
  /// fraction as accepted by ContinuedFraction::parse, optionally "cf:"-prefixed.
  static PathSpec parse(std::string_view text);

  /// First n letters.
  PathWord word(std::size_t n) const;

  /// Letter period of an eventually periodic path, nullopt for rational ones.
  /// For a continued fraction with odd period length the block period is
  /// taken twice so that the letters line up.
  std::optional<PathWord> period_word() const;

  const ContinuedFraction* cf() const { return std::get_if<ContinuedFraction>(&source_); }

  std::string str() const;

 private:
  explicit PathSpec(std::variant<ContinuedFraction, Word> source) : source_(std::move(source)) {}

  std::variant<ContinuedFraction, Word> source_;
};

/// First n letters of the path of a continued fraction.
PathWord word_from_cf(const ContinuedFraction& cf, std::size_t n);

struct LyapunovEstimate {
  enum class Method { WindowedLimsup, ExactPeriodic };

  std::int64_t n = 0;
  double value = 0.0;
  Method method = Method::WindowedLimsup;
};

/// Steps k in the tail window (the last quarter, at least one) of an n-step
/// path; the limsup surrogate is the maximum over these.
std::int64_t window_start(std::int64_t n);

/// max over the tail window of ln(a_k)/k along the Euclid path.
LyapunovEstimate lyapunov_estimate(const PathSpec& spec, std::int64_t n);

/// ln(a_k)/k for k = 1..n (CSV output).
std::vector<double> lyapunov_series(const PathSpec& spec, std::int64_t n);

/// ln ρ(M)/|w| where M is the product over w of L = [[1,0],[1,1]] and
/// R = [[1,1],[0,1]]. Depends on M only through its trace, so rotations of w
/// give bit-identical results.
double lyapunov_exact_periodic(const PathWord& period);

/// Matrix product behind lyapunov_exact_periodic, row-major.
std::array<BigInt, 4> word_matrix(const PathWord& word);

/// ln of the spectral radius of a determinant-one integer matrix with the
/// given trace (|trace| >= 2).
double log_spectral_radius(const BigInt& trace);

}  // namespace shadowdyn
