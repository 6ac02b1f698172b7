#include "shadowdyn/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "shadowdyn/error.hpp"
#include "shadowdyn/euclid.hpp"
#include "shadowdyn/growth.hpp"
#include "shadowdyn/markov.hpp"
#include "shadowdyn/mordell.hpp"
#include "shadowdyn/topograph.hpp"

namespace shadowdyn {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

CheckResult within(std::string name, double value, double target, double tol) {
  const double err = std::abs(value - target);
  return {std::move(name), err < tol, 1,
          "value " + fmt(value) + ", target " + fmt(target) + ", |error| " + fmt(err) +
              " < " + fmt(tol)};
}

CheckResult below(std::string name, double value, double bound) {
  return {std::move(name), value < bound, 1, "value " + fmt(value) + " < " + fmt(bound)};
}

// Euclid triples (a, b, a + b) with |a|, |b| <= range.
template <class F>
std::int64_t for_each_euclid(std::int64_t range, F&& f) {
  std::int64_t count = 0;
  for (std::int64_t a = -range; a <= range; ++a) {
    for (std::int64_t b = -range; b <= range; ++b) {
      f(EuclidTriple{a, b, a + b});
      ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<CheckResult> verify_markov(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const auto tree = markov_tree(opts.depth, kDefaultDepthLimit, opts.threads);
  const auto shadow = shadow_markov_tree(opts.depth, kDefaultDepthLimit, opts.threads);

  CheckResult eq{"markov equation", true, 0, ""};
  CheckResult dual_eq{"shadow markov equation", true, 0, ""};
  CheckResult proj{"real part projection", true, 0, ""};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    ++eq.cases;
    ++dual_eq.cases;
    ++proj.cases;
    if (!satisfies_markov(tree[i]) && eq.passed) {
      eq.passed = false;
      eq.detail = "fails at " + Tree<int>::word_of(i).str();
    }
    if (!satisfies_shadow_markov(shadow[i]) && dual_eq.passed) {
      dual_eq.passed = false;
      dual_eq.detail = "fails at " + Tree<int>::word_of(i).str();
    }
    if (!(real_part(shadow[i]) == tree[i]) && proj.passed) {
      proj.passed = false;
      proj.detail = "differs at " + Tree<int>::word_of(i).str();
    }
  }
  out.push_back(eq);
  out.push_back(dual_eq);
  out.push_back(proj);

  const std::vector<BigInt> expected{1, 4, 13, 40, 120, 354, 1031, 2972, 8495};
  out.push_back({"shadow fibonacci branch", fibonacci_branch_shadow(9) == expected, 9,
                 "1,4,13,40,120,354,1031,2972,8495"});
  return out;
}

std::vector<CheckResult> verify_mordell(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  CheckResult pell{"pell fundamental solutions", true, 0, ""};
  CheckResult eq{"mordell equation", true, 0, ""};
  CheckResult sys{"principal shadow constraint", true, 0, ""};
  CheckResult dual_eq{"shadow mordell equation", true, 0, ""};
  for (std::int64_t d : opts.ds) {
    ++pell.cases;
    const PellSolution fund = pell_fundamental(d);
    if (!fund.valid()) {
      pell.passed = false;
      pell.detail = "invalid for d = " + std::to_string(d);
    }
    for (std::int64_t m : opts.ms) {
      const PellContext ctx{fund, m};
      for_each_euclid(opts.range, [&](const EuclidTriple& e) {
        const auto label = [&] {
          return "d=" + std::to_string(d) + " m=" + std::to_string(m) + " (" + to_string(e.a) +
                 "," + to_string(e.b) + ")";
        };
        ++eq.cases;
        ++sys.cases;
        ++dual_eq.cases;
        const auto shadow = principal_shadow(ctx, e);
        if (!satisfies_mordell(mordell_triple(ctx, e)) && eq.passed) {
          eq.passed = false;
          eq.detail = "fails at " + label();
        }
        if (!satisfies_shadow_constraint(shadow) && sys.passed) {
          sys.passed = false;
          sys.detail = "fails at " + label();
        }
        if (!satisfies_shadow_mordell(shadow) && dual_eq.passed) {
          dual_eq.passed = false;
          dual_eq.detail = "fails at " + label();
        }
      });
    }
  }
  out.push_back(pell);
  out.push_back(eq);
  out.push_back(sys);
  out.push_back(dual_eq);

  // the Vieta tree reproduces the closed forms node by node
  CheckResult vieta{"vieta tree matches closed forms", true, 0, ""};
  const int depth = std::min(opts.depth, 8);
  const auto euclid = euclid_tree(depth);
  for (std::int64_t d : opts.ds) {
    const PellContext ctx = PellContext::for_d(d);
    const auto tree = shadow_mordell_tree(ctx, depth, kDefaultDepthLimit, opts.threads);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      ++vieta.cases;
      if (!(tree[i] == principal_shadow(ctx, euclid[i])) && vieta.passed) {
        vieta.passed = false;
        vieta.detail = "d=" + std::to_string(d) + " differs at " + Tree<int>::word_of(i).str();
      }
    }
  }
  out.push_back(vieta);
  return out;
}

std::vector<CheckResult> verify_topograph(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<QuadForm> forms{{1, 1, 1}, {1, 0, 1}, {17, -12, 2}, {2, 3, -5}, {-3, 1, 4}};
  const auto frames = enumerate_frames(opts.depth);

  CheckResult values{"values equal Q at region vectors", true, 0, ""};
  for (const auto& q : forms) {
    const auto tree = enumerate(q, opts.depth, kDefaultDepthLimit, opts.threads);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const auto& f = frames[i];
      for (Region r : {Region::X, Region::Y, Region::Z}) {
        ++values.cases;
        const auto v = f.region(r);
        const BigInt expected = q(v.u, v.v);
        const BigInt& got = r == Region::X ? tree[i].x : r == Region::Y ? tree[i].y : tree[i].z;
        if (got != expected && values.passed) {
          values.passed = false;
          values.detail = "fails at " + Tree<int>::word_of(i).str();
        }
      }
    }
  }
  out.push_back(values);

  CheckResult special{"special shadow orbits are topographs", true, 0, ""};
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; c += 3) {
        ++special.cases;
        const int depth = std::min(opts.depth, 8);
        const auto orbit = special_orbit_shadow_tree(a, b, c, depth);
        const auto topo = enumerate({a, c - a - b, b}, depth);
        if (!(orbit.nodes() == topo.nodes()) && special.passed) {
          special.passed = false;
          special.detail = "fails for (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
        }
      }
    }
  }
  out.push_back(special);

  CheckResult jacobi{"two-squares counts", true, 0, ""};
  for (std::int64_t n = 1; n <= 1000; ++n) {
    ++jacobi.cases;
    if (jacobi_two_squares(n) != brute_force_two_squares(n) && jacobi.passed) {
      jacobi.passed = false;
      jacobi.detail = "differs at n = " + std::to_string(n);
    }
  }
  out.push_back(jacobi);

  CheckResult river{"river flanks change sign", true, 0, ""};
  const auto r = find_river({17, -12, 2});
  for (const auto& s : r.period_states) {
    ++river.cases;
    if (sign(s.x) * sign(s.y) >= 0) river.passed = false;
  }
  river.detail = "period " + r.period.str();
  out.push_back(river);
  return out;
}

std::vector<CheckResult> verify_growth(const VerifyOptions&) {
  const double ln_phi = std::log(std::numbers::phi);
  std::vector<CheckResult> out;
  const PathSpec golden = PathSpec::golden();

  out.push_back(within("exact periodic LR", lyapunov_exact_periodic(PathWord::parse("LR")),
                       ln_phi, 1e-12));
  const double est = lyapunov_estimate(golden, 40).value;
  out.push_back(within("golden path estimate n=40", est, ln_phi, 0.02));
  const double rational = lyapunov_estimate(PathSpec::from_cf(ContinuedFraction::parse("0;3,2")),
                                            500)
                              .value;
  out.push_back(below("rational path estimate n=500", rational, 0.05));

  const PellContext ctx = PellContext::for_d(2);
  const Rational ratio = shadow_ratio(ctx, 30);
  out.push_back(within("shadow ratio a=30 d=2", ratio.get_d(), 1.0 / std::numbers::sqrt2, 1e-9));

  out.push_back(within("topograph growth golden n=40",
                       topograph_growth_exponent({1, 1, 1}, golden, 40), 2 * ln_phi, 0.05));
  out.push_back(below("river growth 20 periods", river_growth_exponent({17, -12, 2}, 20), 0.05));
  out.push_back(within("relative shadow growth n=30", relative_shadow_growth(ctx, golden, 30),
                       ln_phi, 0.05));
  return out;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (suite == "markov") return verify_markov(opts);
  if (suite == "mordell") return verify_mordell(opts);
  if (suite == "topograph") return verify_topograph(opts);
  if (suite == "growth") return verify_growth(opts);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (auto* f : {verify_markov, verify_mordell, verify_topograph, verify_growth}) {
      auto part = f(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw Error(Errc::Parse, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace shadowdyn
