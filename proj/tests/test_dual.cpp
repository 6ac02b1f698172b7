#include "shadowdyn/dual.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"

namespace shadowdyn {
namespace {

using testing::Gen;

TEST(BigInt, ParseAndPrint) {
  EXPECT_EQ(parse_bigint("123456789012345678901234567890"),
            BigInt("123456789012345678901234567890"));
  EXPECT_EQ(parse_bigint("-42"), -42);
  EXPECT_EQ(parse_bigint("+7"), 7);
  EXPECT_EQ(to_string(BigInt(-17)), "-17");
  EXPECT_ERRC(parse_bigint(""), Errc::Parse);
  EXPECT_ERRC(parse_bigint("12a"), Errc::Parse);
  EXPECT_ERRC(parse_bigint("-"), Errc::Parse);
}

TEST(BigInt, LogAbs) {
  EXPECT_NEAR(log_abs(BigInt(1000)), std::log(1000.0), 1e-14);
  EXPECT_NEAR(log_abs(BigInt(-1000)), std::log(1000.0), 1e-14);
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 3, 5000);
  EXPECT_NEAR(log_abs(huge), 5000 * std::log(3.0), 1e-9);
  EXPECT_NEAR(log_abs(Rational(1, 8)), -std::log(8.0), 1e-14);
  EXPECT_ERRC(log_abs(BigInt(0)), Errc::ZeroValueEncountered);
}

TEST(BigInt, PerfectSquare) {
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_TRUE(is_perfect_square(49));
  EXPECT_FALSE(is_perfect_square(50));
  EXPECT_FALSE(is_perfect_square(-4));
}

TEST(Dual, Arithmetic) {
  const DualInt a(2, 3), b(5, -1);
  EXPECT_EQ(a + b, DualInt(7, 2));
  EXPECT_EQ(a - b, DualInt(-3, 4));
  EXPECT_EQ(a * b, DualInt(10, 13));  // 2·(−1) + 3·5
  EXPECT_EQ(DualInt::epsilon() * DualInt::epsilon(), DualInt(0));
  EXPECT_EQ(-a, DualInt(-2, -3));
}

TEST(Dual, Units) {
  EXPECT_TRUE(is_unit(DualInt(1, 7)));
  EXPECT_TRUE(is_unit(DualInt(-1, -4)));
  EXPECT_FALSE(is_unit(DualInt(2, 0)));
  EXPECT_EQ(inverse(DualInt(1, 5)), DualInt(1, -5));
  EXPECT_EQ(inverse(DualInt(-1, 5)) * DualInt(-1, 5), DualInt(1));
  EXPECT_ERRC(inverse(DualInt(0, 1)), Errc::NotAUnit);
  EXPECT_ERRC(inverse(DualInt(3, 1)), Errc::NotAUnit);
}

TEST(Dual, Text) {
  EXPECT_EQ(to_string(DualInt(3, 2)), "3+2ε");
  EXPECT_EQ(to_string(DualInt(3, -2)), "3-2ε");
  EXPECT_EQ(to_string(DualInt(0, 0)), "0+0ε");
  EXPECT_EQ(parse_dual("1+4ε"), DualInt(1, 4));
  EXPECT_EQ(parse_dual("-7-12e"), DualInt(-7, -12));
  EXPECT_EQ(parse_dual("9"), DualInt(9));
  EXPECT_ERRC(parse_dual("1+ε2"), Errc::Parse);
}

TEST(Dual, AnalyticLiftMatchesProducts) {
  // x^n computed by repeated multiplication against the lift of t ↦ t^n
  Gen gen(7);
  for (int run = 0; run < 100; ++run) {
    Rational a(BigInt(gen.integer(-50, 50)), BigInt(gen.integer(1, 9)));
    Rational b(BigInt(gen.integer(-50, 50)), BigInt(gen.integer(1, 9)));
    a.canonicalize();
    b.canonicalize();
    const int n = static_cast<int>(gen.integer(1, 12));
    DualRat x(a, b);
    DualRat power(Rational(1));
    for (int i = 0; i < n; ++i) power *= x;
    Rational value = 1, derivative = 0;
    for (int i = 0; i < n; ++i) value *= a;
    derivative = n;
    for (int i = 0; i < n - 1; ++i) derivative *= a;
    const DualRat lift = analytic_lift(value, derivative, x);
    EXPECT_EQ(lift.re, power.re);
    EXPECT_EQ(lift.sh, power.sh);
  }
}

TEST(DualProperty, RingLaws) {
  Gen gen(11);
  for (int run = 0; run < testing::kPropertyRuns; ++run) {
    const DualInt x = gen.dual(30), y = gen.dual(30), z = gen.dual(30);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + DualInt(0), x);
    EXPECT_EQ(x * DualInt(1), x);
    EXPECT_EQ(parse_dual(to_string(x)), x);
  }
}

TEST(DualProperty, UnitInverse) {
  Gen gen(13);
  for (int run = 0; run < testing::kPropertyRuns; ++run) {
    const DualInt u(gen.integer(0, 1) ? 1 : -1, gen.big(25));
    EXPECT_EQ(u * inverse(u), DualInt(1));
    EXPECT_EQ(inverse(inverse(u)), u);
  }
}

}  // namespace
}  // namespace shadowdyn
