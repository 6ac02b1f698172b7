#pragma once

#include <string>
#include <string_view>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/error.hpp"

namespace shadowdyn {

/// Dual number re + sh·ε with ε² = 0.
///
/// `re` is the value and `sh` its shadow. Multiplication drops the ε² term
/// structurally, so the ring laws hold exactly for exact coefficient types.
template <class T>
struct Dual {
  T re{0};
  T sh{0};

  Dual() = default;
  Dual(T value) : re(std::move(value)) {}  // NOLINT: implicit embedding of scalars
  Dual(T value, T shadow) : re(std::move(value)), sh(std::move(shadow)) {}
  Dual(long value) : re(value) {}  // NOLINT

  static Dual epsilon() { return Dual(T(0), T(1)); }

  friend bool operator==(const Dual& x, const Dual& y) { return x.re == y.re && x.sh == y.sh; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

  Dual operator-() const { return Dual(T(-re), T(-sh)); }

  Dual& operator+=(const Dual& y) {
    re += y.re;
    sh += y.sh;
    return *this;
  }
  Dual& operator-=(const Dual& y) {
    re -= y.re;
    sh -= y.sh;
    return *this;
  }
  Dual& operator*=(const Dual& y) {
    T s = re * y.sh + sh * y.re;
    re *= y.re;
    sh = std::move(s);
    return *this;
  }

  friend Dual operator+(Dual x, const Dual& y) { return x += y; }
  friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
  friend Dual operator*(Dual x, const Dual& y) { return x *= y; }
};

using DualInt = Dual<BigInt>;
using DualRat = Dual<Rational>;

inline DualInt add(const DualInt& x, const DualInt& y) { return x + y; }
inline DualInt mul(const DualInt& x, const DualInt& y) { return x * y; }

/// Units of the integer dual numbers are exactly ±1 + bε.
inline bool is_unit(const DualInt& x) { return x.re == 1 || x.re == -1; }

/// (s + bε)⁻¹ = s − bε for s = ±1. Throws NotAUnit otherwise.
DualInt inverse(const DualInt& x);

/// f(a + bε) = f(a) + b·f'(a)·ε, given f(a) and f'(a).
inline DualRat analytic_lift(const Rational& value, const Rational& derivative, const DualRat& x) {
  return DualRat(value, Rational(x.sh * derivative));
}

/// "a+bε" or "a-bε"; the ε part is always written.
std::string to_string(const DualInt& x);
std::string to_string(const DualRat& x);

/// Inverse of to_string(DualInt). A plain integer parses as a real dual.
DualInt parse_dual(std::string_view text);

}  // namespace shadowdyn
