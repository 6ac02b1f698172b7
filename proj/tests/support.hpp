#pragma once

#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/dual.hpp"
#include "shadowdyn/error.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn::testing {

#define EXPECT_ERRC(stmt, errc)                                          \
  do {                                                                   \
    try {                                                                \
      stmt;                                                              \
      ADD_FAILURE() << "expected " << ::shadowdyn::errc_name(errc);      \
    } catch (const ::shadowdyn::Error& e) {                              \
      EXPECT_EQ(e.code(), errc) << e.what();                             \
    }                                                                    \
  } while (0)

/// Seeded generator for property tests; the seed is printed on failure via
/// SCOPED_TRACE at the call site.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Up to `digits` decimal digits, either sign.
  BigInt big(int digits) {
    BigInt x = 0;
    const int n = static_cast<int>(integer(1, digits));
    for (int i = 0; i < n; ++i) x = x * 10 + integer(0, 9);
    return integer(0, 1) ? BigInt(-x) : x;
  }

  DualInt dual(int digits) { return {big(digits), big(digits)}; }

  PathWord word(std::size_t len) {
    PathWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(integer(0, 1) ? Turn::L : Turn::R);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kPropertyRuns = 200;

}  // namespace shadowdyn::testing
