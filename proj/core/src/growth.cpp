#include "shadowdyn/growth.hpp"

#include <algorithm>
#include <limits>

#include "shadowdyn/error.hpp"

namespace shadowdyn {

namespace {

double windowed_max(const std::vector<double>& series) {
  const auto n = static_cast<std::int64_t>(series.size());
  if (n == 0) throw Error(Errc::InvalidArgument, "growth exponent needs at least one step");
  double best = -std::numeric_limits<double>::infinity();
  for (std::int64_t k = window_start(n); k <= n; ++k) {
    best = std::max(best, series[static_cast<std::size_t>(k - 1)]);
  }
  return best;
}

}  // namespace

std::vector<double> growth_series(const FaceTriple<BigInt>& start, const PathWord& word) {
  std::vector<double> out;
  out.reserve(word.size());
  FaceTriple<BigInt> t = start;
  std::size_t k = 0;
  for (Turn turn : word) {
    t = ap_step(t, turn);
    ++k;
    if (t.z == 0) throw Error(Errc::ZeroValueEncountered, "zero value along the path");
    out.push_back(log_abs(t.z) / static_cast<double>(k));
  }
  return out;
}

double growth_exponent_from(const FaceTriple<BigInt>& start, const PathWord& word) {
  return windowed_max(growth_series(start, word));
}

double topograph_growth_exponent(const QuadForm& q, const PathSpec& spec, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "growth exponent needs n >= 1");
  return growth_exponent_from(root_triple(q), spec.word(static_cast<std::size_t>(n)));
}

double river_growth_exponent(const QuadForm& q, std::int64_t repeats) {
  if (repeats < 1) throw Error(Errc::InvalidArgument, "repeats must be >= 1");
  const RiverDescription river = find_river(q);
  PathWord word;
  for (std::int64_t r = 0; r < repeats; ++r) {
    for (Turn t : river.period) word.push_back(t);
  }
  return growth_exponent_from(river.start, word);
}

double log_shadow_ratio(const PellContext& ctx, const BigInt& a) {
  const PellPower pw = pell_power(ctx, to_int64(a));
  const BigInt shadow = ctx.m * a * ctx.pell.q * pw.U;
  if (shadow == 0) throw Error(Errc::ZeroValueEncountered, "shadow vanishes");
  return log_abs(Rational(shadow, pw.P));
}

std::vector<double> relative_growth_series(const PellContext& ctx, const PathSpec& spec,
                                           std::int64_t n) {
  std::vector<double> out;
  if (n < 1) return out;
  const auto path = euclid_path(spec.word(static_cast<std::size_t>(n)));
  for (std::int64_t k = 1; k <= n; ++k) {
    out.push_back(log_shadow_ratio(ctx, path[static_cast<std::size_t>(k)].a) /
                  static_cast<double>(k));
  }
  return out;
}

double relative_shadow_growth(const PellContext& ctx, const PathSpec& spec, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "relative growth needs n >= 1");
  // only the window is needed; skip the big powers before it
  const auto path = euclid_path(spec.word(static_cast<std::size_t>(n)));
  double best = -std::numeric_limits<double>::infinity();
  for (std::int64_t k = window_start(n); k <= n; ++k) {
    best = std::max(best, log_shadow_ratio(ctx, path[static_cast<std::size_t>(k)].a) /
                              static_cast<double>(k));
  }
  return best;
}

Rational shadow_ratio(const PellContext& ctx, std::int64_t a) {
  if (a < 1) throw Error(Errc::InvalidArgument, "shadow_ratio needs a >= 1");
  const PellPower pw = pell_power(ctx, a);
  Rational r(BigInt(ctx.m * ctx.pell.q * pw.U), pw.P);
  r.canonicalize();
  return r;
}

Gl2Check gl2_invariance_check(const PathSpec& spec, const Mobius& g, std::int64_t n) {
  const ContinuedFraction* cf = spec.cf();
  if (cf == nullptr) {
    throw Error(Errc::InvalidArgument, "GL2 check needs a continued-fraction path");
  }
  const BigInt det = g.det();
  if (det != 1 && det != -1) {
    throw Error(Errc::DegenerateImage, "matrix determinant " + to_string(det) + " is not ±1");
  }
  Gl2Check out;
  out.original = lyapunov_estimate(spec, n);
  if (auto w = spec.period_word()) out.exact_original = lyapunov_exact_periodic(*w);

  out.image_cf = mobius_transform(*cf, g);
  // ∞ becomes the constant path, like any other rational point
  const PathSpec image =
      out.image_cf ? PathSpec::from_cf(*out.image_cf) : PathSpec::from_cf(ContinuedFraction{});
  out.image = lyapunov_estimate(image, n);
  if (auto w = image.period_word()) out.exact_image = lyapunov_exact_periodic(*w);
  return out;
}

}  // namespace shadowdyn
