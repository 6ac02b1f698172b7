#include "shadowdyn/dual.hpp"

namespace shadowdyn {

namespace {

constexpr std::string_view kEpsilon = "ε";

template <class T>
std::string format_dual(const T& re, const T& sh) {
  std::string out = re.get_str(10);
  if (sh < 0) {
    T mag = -sh;
    out += "-" + mag.get_str(10);
  } else {
    out += "+" + sh.get_str(10);
  }
  out += kEpsilon;
  return out;
}

}  // namespace

DualInt inverse(const DualInt& x) {
  if (!is_unit(x)) {
    throw Error(Errc::NotAUnit, to_string(x) + " is not a unit");
  }
  // (s + bε)(s − bε) = s² = 1
  return DualInt(x.re, BigInt(-x.sh));
}

std::string to_string(const DualInt& x) { return format_dual(x.re, x.sh); }

std::string to_string(const DualRat& x) { return format_dual(x.re, x.sh); }

DualInt parse_dual(std::string_view text) {
  std::string_view s = text;
  if (s.size() >= kEpsilon.size() && s.substr(s.size() - kEpsilon.size()) == kEpsilon) {
    s.remove_suffix(kEpsilon.size());
  } else if (!s.empty() && (s.back() == 'e' || s.back() == 'E')) {
    s.remove_suffix(1);
  } else {
    return DualInt(parse_bigint(s));
  }
  // split at the last sign that is not in leading position
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw Error(Errc::Parse, "malformed dual number '" + std::string(text) + "'");
  }
  return DualInt(parse_bigint(s.substr(0, split)), parse_bigint(s.substr(split)));
}

}  // namespace shadowdyn
