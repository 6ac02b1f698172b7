#include "shadowdyn/mordell.hpp"

#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/error.hpp"

namespace shadowdyn {

PellContext PellContext::for_d(const BigInt& d, const BigInt& m) {
  return {pell_fundamental(d), m};
}

PellSolution pell_fundamental(const BigInt& d) {
  if (d < 2 || is_perfect_square(d)) {
    throw Error(Errc::SquareInput, "Pell equation needs a non-square d >= 2, got " + to_string(d));
  }
  const ContinuedFraction cf = sqrt_cf(d);
  const std::size_t r = cf.period.size();
  const std::size_t k = (r % 2 == 0) ? r - 1 : 2 * r - 1;
  const auto conv = convergents(cf, k);
  PellSolution sol{d, conv.back().p, conv.back().q};
  if (!sol.valid()) {
    throw Error(Errc::InvalidArgument, "continued fraction did not yield a Pell solution");
  }
  return sol;
}

std::optional<PellSolution> pell_brute_force(std::int64_t d, std::int64_t max_q) {
  const BigInt bd = d;
  if (d < 2 || is_perfect_square(bd)) {
    throw Error(Errc::SquareInput, "Pell equation needs a non-square d >= 2");
  }
  for (std::int64_t q = 1; q <= max_q; ++q) {
    BigInt bq = q;
    BigInt rhs = bd * bq * bq + 1;
    if (is_perfect_square(rhs)) {
      BigInt p;
      mpz_sqrt(p.get_mpz_t(), rhs.get_mpz_t());
      return PellSolution{bd, p, bq};
    }
  }
  return std::nullopt;
}

namespace {

void check_index(std::int64_t a) {
  if (a > kMaxPellIndex || a < -kMaxPellIndex) {
    throw Error(Errc::InvalidArgument, "Pell index " + std::to_string(a) + " is too large");
  }
}

std::int64_t index_of(const BigInt& a) {
  const std::int64_t i = to_int64(a);
  check_index(i);
  return i;
}

// (P1 + U1 s)(P2 + U2 s) with s² = p² − 1
PellPower multiply(const PellPower& x, const PellPower& y, const BigInt& s2) {
  return {BigInt(x.P * y.P + x.U * y.U * s2), BigInt(x.P * y.U + x.U * y.P)};
}

void require_euclid(const EuclidTriple& e) {
  if (!e.valid()) {
    throw Error(Errc::BadEuclidTriple, "(" + to_string(e.a) + ", " + to_string(e.b) + ", " +
                                           to_string(e.c) + ") does not satisfy a + b = c");
  }
}

std::string describe(const MordellTriple& t) {
  return "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ")";
}

}  // namespace

PellPower pell_power(const PellContext& ctx, std::int64_t a) {
  check_index(a);
  const BigInt& p = ctx.pell.p;
  const BigInt s2 = p * p - 1;
  const bool negative = a < 0;
  std::uint64_t e = negative ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);

  PellPower result{1, 0};
  PellPower base{p, 1};
  while (e > 0) {
    if (e & 1u) result = multiply(result, base, s2);
    e >>= 1;
    if (e > 0) base = multiply(base, base, s2);
  }
  if (negative) result.U = -result.U;
  return result;
}

BigInt half_trace(const PellContext& ctx, std::int64_t a) { return pell_power(ctx, a).P; }

BigInt half_diff_unit(const PellContext& ctx, std::int64_t a) { return pell_power(ctx, a).U; }

namespace {

std::vector<BigInt> three_term(const BigInt& first, const BigInt& second, const BigInt& p,
                               std::int64_t n) {
  std::vector<BigInt> out;
  if (n < 0) return out;
  out.push_back(first);
  if (n >= 1) out.push_back(second);
  const BigInt two_p = 2 * p;
  for (std::int64_t i = 2; i <= n; ++i) {
    out.push_back(BigInt(two_p * out[i - 1] - out[i - 2]));
  }
  return out;
}

}  // namespace

std::vector<BigInt> half_trace_sequence(const PellContext& ctx, std::int64_t n) {
  return three_term(1, ctx.pell.p, ctx.pell.p, n);
}

std::vector<BigInt> half_diff_sequence(const PellContext& ctx, std::int64_t n) {
  return three_term(0, 1, ctx.pell.p, n);
}

bool satisfies_mordell(const MordellTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z == 2 * t.x * t.y * t.z + 1;
}

bool satisfies_shadow_mordell(const ShadowMordellTriple& t) {
  const DualInt two(BigInt(2));
  const DualInt one(BigInt(1));
  return t.x * t.x + t.y * t.y + t.z * t.z == two * t.x * t.y * t.z + one;
}

bool satisfies_shadow_constraint(const ShadowMordellTriple& t) {
  const BigInt& x = t.x.re;
  const BigInt& y = t.y.re;
  const BigInt& z = t.z.re;
  BigInt lhs = (x - y * z) * t.x.sh + (y - x * z) * t.y.sh + (z - x * y) * t.z.sh;
  return lhs == 0;
}

MordellTriple value_part(const ShadowMordellTriple& t) { return {t.x.re, t.y.re, t.z.re}; }

FaceTriple<BigInt> shadow_part(const ShadowMordellTriple& t) { return {t.x.sh, t.y.sh, t.z.sh}; }

MordellTriple mordell_triple(const PellContext& ctx, const EuclidTriple& e) {
  require_euclid(e);
  return {half_trace(ctx, index_of(e.a)), half_trace(ctx, index_of(e.b)),
          half_trace(ctx, index_of(e.c))};
}

ShadowMordellTriple principal_shadow(const PellContext& ctx, const EuclidTriple& e) {
  require_euclid(e);
  auto component = [&](const BigInt& idx) {
    const PellPower pw = pell_power(ctx, index_of(idx));
    return DualInt(pw.P, BigInt(ctx.m * idx * ctx.pell.q * pw.U));
  };
  return {component(e.a), component(e.b), component(e.c)};
}

MordellTriple vieta_mordell(const MordellTriple& t) {
  if (!satisfies_mordell(t)) {
    throw Error(Errc::InvalidTriple, describe(t) + " is not a Mordell triple");
  }
  return {t.x, t.y, BigInt(2 * t.x * t.y - t.z)};
}

ShadowMordellTriple shadow_vieta_mordell(const ShadowMordellTriple& t) {
  if (!satisfies_shadow_mordell(t)) {
    throw Error(Errc::InvalidTriple,
                "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) +
                    ") is not a dual Mordell triple");
  }
  const DualInt two(BigInt(2));
  return {t.x, t.y, two * t.x * t.y - t.z};
}

MordellTriple mordell_step(const MordellTriple& t, Turn turn) {
  if (turn == Turn::L) return {t.x, t.z, BigInt(2 * t.x * t.z - t.y)};
  return {t.z, t.y, BigInt(2 * t.z * t.y - t.x)};
}

ShadowMordellTriple shadow_mordell_step(const ShadowMordellTriple& t, Turn turn) {
  const DualInt two(BigInt(2));
  if (turn == Turn::L) return {t.x, t.z, two * t.x * t.z - t.y};
  return {t.z, t.y, two * t.z * t.y - t.x};
}

Tree<MordellTriple> mordell_tree(const PellContext& ctx, int depth, int depth_limit,
                                 unsigned threads) {
  return grow_tree(mordell_triple(ctx, EuclidTriple::root()), depth, mordell_step, threads,
                   depth_limit);
}

Tree<ShadowMordellTriple> shadow_mordell_tree(const PellContext& ctx, int depth, int depth_limit,
                                              unsigned threads) {
  return grow_tree(principal_shadow(ctx, EuclidTriple::root()), depth, shadow_mordell_step,
                   threads, depth_limit);
}

Tree<ShadowMordellTriple> special_orbit_tree(const BigInt& a, const BigInt& b, const BigInt& c,
                                             int depth, int depth_limit, unsigned threads) {
  ShadowMordellTriple root{DualInt(BigInt(1), a), DualInt(BigInt(1), b), DualInt(BigInt(1), c)};
  return grow_tree(std::move(root), depth, shadow_mordell_step, threads, depth_limit);
}

Tree<FaceTriple<BigInt>> special_orbit_shadow_tree(const BigInt& a, const BigInt& b,
                                                   const BigInt& c, int depth, int depth_limit,
                                                   unsigned threads) {
  return special_orbit_tree(a, b, c, depth, depth_limit, threads).map(shadow_part);
}

std::vector<BigInt> mordell_branch(const PellContext& ctx, std::int64_t n) {
  std::vector<BigInt> out;
  if (n <= 0) return out;
  auto seq = half_trace_sequence(ctx, n);
  out.assign(seq.begin() + 1, seq.end());
  return out;
}

}  // namespace shadowdyn
