#include "shadowdyn/bigint.hpp"

#include <cmath>
#include <numbers>

#include "shadowdyn/error.hpp"

namespace shadowdyn {

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) { return x.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw Error(Errc::Parse, "expected an integer, got '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(Errc::Parse, "expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

double log_abs(const BigInt& x) {
  if (x == 0) throw Error(Errc::ZeroValueEncountered, "logarithm of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_abs(const Rational& x) {
  return log_abs(BigInt(x.get_num())) - log_abs(BigInt(x.get_den()));
}

int sign(const BigInt& x) { return sgn(x); }

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) {
    throw Error(Errc::InvalidArgument, "integer " + to_string(x) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x.get_si());
}

bool is_perfect_square(const BigInt& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

}  // namespace shadowdyn
