#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowdyn/bigint.hpp"

namespace shadowdyn {

/// [head; preperiod..., (period...)] with every term after the head >= 1.
/// An empty period means a finite expansion, i.e. a rational number.
struct ContinuedFraction {
  BigInt head;
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  bool is_finite() const { return period.empty(); }

  /// Term c_i, i >= 1, of the infinite tail; nullopt past the end of a finite
  /// expansion.
  std::optional<BigInt> term(std::size_t i) const;

  /// "c0;c1,c2,(p1,p2)"; the parenthesised block repeats.
  std::string str() const;

  /// Accepts "c0;c1,c2,(p1,...)" as produced by str(), and the shorthand
  /// "c0,c1,...,ck,..." in which the trailing "..." repeats ck.
  static ContinuedFraction parse(std::string_view text);

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Regular continued fraction of √d, d > 0 not a square. Throws SquareInput.
ContinuedFraction sqrt_cf(const BigInt& d);

/// Continued fraction of the rational num/den, den != 0.
ContinuedFraction rational_cf(const BigInt& num, const BigInt& den);

struct Convergent {
  BigInt p;
  BigInt q;
};

/// Convergents p_k/q_k of [head; terms...] for the given number of terms
/// after the head (k = 0 .. count).
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);

/// Integer 2×2 matrix acting by ξ ↦ (a·ξ + b)/(c·ξ + d).
struct Mobius {
  BigInt a, b, c, d;

  BigInt det() const { return BigInt(a * d - b * c); }
};

/// Continued fraction of (aξ + b)/(cξ + d) computed term by term from the
/// expansion of ξ (Gosper's homographic algorithm). A periodic input yields a
/// periodic output; the period is detected by state recurrence.
/// Returns nullopt when the image is ∞. Throws DegenerateImage for det = 0.
std::optional<ContinuedFraction> mobius_transform(const ContinuedFraction& x, const Mobius& g);

}  // namespace shadowdyn
