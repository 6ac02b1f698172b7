#include "shadowdyn_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/error.hpp"
#include "shadowdyn/euclid.hpp"
#include "shadowdyn/growth.hpp"
#include "shadowdyn/markov.hpp"
#include "shadowdyn/mordell.hpp"
#include "shadowdyn/render.hpp"
#include "shadowdyn/topograph.hpp"
#include "shadowdyn/verify.hpp"

namespace shadowdyn::cli {

namespace {

using nlohmann::json;

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  json parameters = json::object();
  json outputs = json::object();
  std::vector<CheckResult> checks;

  std::int64_t failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  }

  json to_json() const {
    json results = json::array();
    for (const auto& c : checks) {
      results.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                         {"detail", c.detail}});
    }
    const auto failed = failures();
    return {
        {"command", command},
        {"parameters", parameters},
        {"outputs", outputs},
        {"checks",
         {{"passed", static_cast<std::int64_t>(checks.size()) - failed},
          {"failed", failed},
          {"results", results}}},
    };
  }
};

/// A command's result: the report, plus the document to print instead of the
/// report JSON for csv/dot/svg output.
struct Outcome {
  Report report;
  std::optional<std::string> body;
};

struct RenderOpts {
  int depth = 3;
  std::string format = "json";
  std::string labels = "values";
  unsigned threads = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<BigInt> parse_ints(const std::string& text, std::size_t expected, const char* what) {
  std::vector<BigInt> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_bigint(item));
  if (expected != 0 && out.size() != expected) {
    throw Error(Errc::Parse, std::string(what) + " needs " + std::to_string(expected) +
                                 " comma-separated integers, got '" + text + "'");
  }
  return out;
}

QuadForm parse_form(const std::string& text) {
  const auto v = parse_ints(text, 3, "--form");
  return {v[0], v[1], v[2]};
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(15) << x;
  return out.str();
}

std::string series_csv(const std::vector<double>& series) {
  std::ostringstream out;
  out << "step,value\n";
  for (std::size_t k = 0; k < series.size(); ++k) out << k + 1 << ',' << fmt_double(series[k]) << '\n';
  return out.str();
}

template <class T>
Outcome emit_tree(Report report, const Tree<FaceTriple<T>>& tree, const RenderOpts& r,
                  std::string title) {
  const RenderTree rt = make_render_tree(tree, std::move(title));
  switch (parse_format(r.format)) {
    case Format::Json:
      report.outputs["tree"] = tree_json(rt);
      return {std::move(report), std::nullopt};
    case Format::Csv:
      return {std::move(report), render_csv(rt)};
    case Format::Dot:
      return {std::move(report), render_dot(rt, parse_labels(r.labels))};
    case Format::Svg:
      return {std::move(report), render_svg(rt, parse_labels(r.labels))};
  }
  return {std::move(report), std::nullopt};
}

void put_render_params(Report& report, const RenderOpts& r) {
  report.parameters["depth"] = r.depth;
  report.parameters["format"] = r.format;
  report.parameters["labels"] = r.labels;
}

/// Runs `pred` on every node; records the first failing word.
template <class T, class Pred>
CheckResult check_nodes(std::string name, const Tree<T>& tree, Pred pred) {
  CheckResult c{std::move(name), true, static_cast<std::int64_t>(tree.size()), ""};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!pred(i, tree[i])) {
      c.passed = false;
      c.detail = "fails at '" + Tree<T>::word_of(i).str() + "'";
      break;
    }
  }
  return c;
}

CheckResult check_river(const RiverDescription& river) {
  CheckResult c{"river flanks have opposite signs", true,
                static_cast<std::int64_t>(river.period_states.size()), ""};
  for (const auto& s : river.period_states) {
    if (sign(s.x) * sign(s.y) >= 0) c.passed = false;
  }
  return c;
}

void add_render_flags(CLI::App* cmd, RenderOpts& r) {
  cmd->add_option("--depth", r.depth, "Tree depth (0 = root only)")->capture_default_str();
  cmd->add_option("--format", r.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "svg"}))
      ->capture_default_str();
  cmd->add_option("--labels", r.labels, "Region labels in dot/svg output")
      ->check(CLI::IsMember({"values", "farey", "both"}))
      ->capture_default_str();
  cmd->add_option("--threads", r.threads, "Worker threads for tree generation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->footer(
      "CSV columns: word,x,y,z,vx,vy,vz (path word from the root, the three region values, "
      "and the region vectors as u/v).");
}

PathSpec path_from(const std::string& path, const std::string& cf, const std::string& word) {
  if (!cf.empty()) return PathSpec::from_cf(ContinuedFraction::parse(cf));
  if (!word.empty()) return PathSpec::periodic(PathWord::parse(word));
  if (!path.empty()) return PathSpec::parse(path);
  return PathSpec::golden();
}

void add_path_flags(CLI::App* cmd, std::string& path, std::string& cf, std::string& word) {
  cmd->add_option("--path", path,
                  "Path: 'golden', a repeating word such as 'LRR', 'word:prefix/period', or a "
                  "continued fraction");
  cmd->add_option("--cf", cf, "Continued fraction, e.g. '1,1,1,...' or '0;1,(2)'");
  cmd->add_option("--word", word, "Repeating L/R word, e.g. LRLR");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topographs, Markov and Mordell triples, and their dual-number shadows"};
  app.name("shadowdyn");
  app.require_subcommand(1);

  std::function<Outcome()> action;
  std::string fmt_override;  // non-tree commands that may print csv

  // topograph
  RenderOpts topo_r;
  std::string topo_form;
  bool topo_river = false;
  auto* topo = app.add_subcommand("topograph", "Conway topograph of a·x² + h·xy + b·y²");
  topo->add_option("--form", topo_form, "Coefficients a,h,b")->required();
  topo->add_flag("--river", topo_river, "Also locate the Conway river");
  add_render_flags(topo, topo_r);
  topo->callback([&] {
    action = [&] {
      const QuadForm q = parse_form(topo_form);
      Report report{"topograph"};
      report.parameters["form"] = {to_string(q.a), to_string(q.h), to_string(q.b)};
      put_render_params(report, topo_r);
      const auto tree = enumerate(q, topo_r.depth, kDefaultDepthLimit, topo_r.threads);
      const auto frames = enumerate_frames(topo_r.depth);
      report.outputs["discriminant"] = to_string(q.discriminant());
      report.checks.push_back(check_nodes("values equal Q at region vectors", tree,
                                          [&](std::size_t i, const FaceTriple<BigInt>& t) {
                                            const auto& f = frames[i];
                                            auto at = [&](Region r) {
                                              auto v = f.region(r);
                                              return q(v.u, v.v);
                                            };
                                            return t.x == at(Region::X) && t.y == at(Region::Y) &&
                                                   t.z == at(Region::Z);
                                          }));
      if (topo_river) {
        const auto river = find_river(q);
        report.outputs["river"] = river_json(river);
        report.checks.push_back(check_river(river));
      }
      return emit_tree(std::move(report), tree, topo_r, "Q = " + topo_form);
    };
  });

  // markov
  RenderOpts markov_r;
  auto* markov = app.add_subcommand("markov", "Markov tree x² + y² + z² = 3xyz from (1,1,1)");
  add_render_flags(markov, markov_r);
  markov->callback([&] {
    action = [&] {
      Report report{"markov"};
      put_render_params(report, markov_r);
      const auto tree = markov_tree(markov_r.depth, kDefaultDepthLimit, markov_r.threads);
      report.checks.push_back(check_nodes("markov equation", tree, [](std::size_t, const auto& t) {
        return satisfies_markov(t);
      }));
      return emit_tree(std::move(report), tree, markov_r, "Markov tree");
    };
  });

  RenderOpts smarkov_r;
  auto* smarkov = app.add_subcommand("shadow-markov", "Shadow Markov tree over dual integers");
  add_render_flags(smarkov, smarkov_r);
  smarkov->callback([&] {
    action = [&] {
      Report report{"shadow-markov"};
      put_render_params(report, smarkov_r);
      const auto tree = shadow_markov_tree(smarkov_r.depth, kDefaultDepthLimit, smarkov_r.threads);
      const auto real = markov_tree(smarkov_r.depth, kDefaultDepthLimit, smarkov_r.threads);
      report.checks.push_back(check_nodes("shadow markov equation", tree,
                                          [](std::size_t, const auto& t) {
                                            return satisfies_shadow_markov(t);
                                          }));
      report.checks.push_back(check_nodes("real part is the markov tree", tree,
                                          [&](std::size_t i, const auto& t) {
                                            return real_part(t) == real[i];
                                          }));
      return emit_tree(std::move(report), tree, smarkov_r, "Shadow Markov tree");
    };
  });

  // pell
  std::string pell_d;
  auto* pell = app.add_subcommand("pell", "Fundamental solution of p² − d·q² = 1");
  pell->add_option("--d", pell_d, "Non-square d >= 2")->required();
  pell->callback([&] {
    action = [&] {
      const BigInt d = parse_bigint(pell_d);
      Report report{"pell"};
      report.parameters["d"] = to_string(d);
      const PellSolution s = pell_fundamental(d);
      report.outputs["p"] = to_string(s.p);
      report.outputs["q"] = to_string(s.q);
      report.outputs["sqrt_cf"] = to_json(sqrt_cf(d));
      report.checks.push_back({"p² − d·q² = 1", s.valid(), 1, ""});
      return Outcome{std::move(report), std::nullopt};
    };
  });

  // mordell / shadow-mordell
  RenderOpts mordell_r;
  std::string mordell_d, mordell_m = "1";
  auto* mordell = app.add_subcommand("mordell", "Mordell tree x² + y² + z² = 2xyz + 1");
  mordell->add_option("--d", mordell_d, "Pell parameter d")->required();
  mordell->add_option("--m", mordell_m, "Shadow scale (unused for values)")->capture_default_str();
  add_render_flags(mordell, mordell_r);
  mordell->callback([&] {
    action = [&] {
      const PellContext ctx = PellContext::for_d(parse_bigint(mordell_d), parse_bigint(mordell_m));
      Report report{"mordell"};
      report.parameters["d"] = to_string(ctx.pell.d);
      report.parameters["m"] = to_string(ctx.m);
      put_render_params(report, mordell_r);
      report.outputs["pell"] = {to_string(ctx.pell.p), to_string(ctx.pell.q)};
      const auto tree = mordell_tree(ctx, mordell_r.depth, kDefaultDepthLimit, mordell_r.threads);
      const auto euclid = euclid_tree(mordell_r.depth);
      report.checks.push_back(check_nodes("mordell equation", tree, [](std::size_t, const auto& t) {
        return satisfies_mordell(t);
      }));
      report.checks.push_back(check_nodes("closed form at euclid triple", tree,
                                          [&](std::size_t i, const auto& t) {
                                            return t == mordell_triple(ctx, euclid[i]);
                                          }));
      return emit_tree(std::move(report), tree, mordell_r, "Mordell tree, d = " + mordell_d);
    };
  });

  RenderOpts smordell_r;
  std::string smordell_d, smordell_m = "1";
  auto* smordell =
      app.add_subcommand("shadow-mordell", "Mordell tree with principal shadows x + x̃ε");
  smordell->add_option("--d", smordell_d, "Pell parameter d")->required();
  smordell->add_option("--m", smordell_m, "Shadow scale m")->capture_default_str();
  add_render_flags(smordell, smordell_r);
  smordell->callback([&] {
    action = [&] {
      const PellContext ctx =
          PellContext::for_d(parse_bigint(smordell_d), parse_bigint(smordell_m));
      Report report{"shadow-mordell"};
      report.parameters["d"] = to_string(ctx.pell.d);
      report.parameters["m"] = to_string(ctx.m);
      put_render_params(report, smordell_r);
      report.outputs["pell"] = {to_string(ctx.pell.p), to_string(ctx.pell.q)};
      const auto tree =
          shadow_mordell_tree(ctx, smordell_r.depth, kDefaultDepthLimit, smordell_r.threads);
      const auto euclid = euclid_tree(smordell_r.depth);
      report.checks.push_back(check_nodes("shadow mordell equation", tree,
                                          [](std::size_t, const auto& t) {
                                            return satisfies_shadow_mordell(t);
                                          }));
      report.checks.push_back(check_nodes("shadow constraint", tree,
                                          [](std::size_t, const auto& t) {
                                            return satisfies_shadow_constraint(t);
                                          }));
      report.checks.push_back(check_nodes("principal shadow at euclid triple", tree,
                                          [&](std::size_t i, const auto& t) {
                                            return t == principal_shadow(ctx, euclid[i]);
                                          }));
      return emit_tree(std::move(report), tree, smordell_r,
                       "Shadow Mordell tree, d = " + smordell_d + ", m = " + smordell_m);
    };
  });

  // special-shadow
  RenderOpts special_r;
  std::string sa = "0", sb = "0", sc = "0";
  auto* special =
      app.add_subcommand("special-shadow", "Dual Vieta orbit of (1 + aε, 1 + bε, 1 + cε)");
  special->add_option("--a", sa, "Shadow of x")->capture_default_str();
  special->add_option("--b", sb, "Shadow of y")->capture_default_str();
  special->add_option("--c", sc, "Shadow of z")->capture_default_str();
  add_render_flags(special, special_r);
  special->callback([&] {
    action = [&] {
      const BigInt a = parse_bigint(sa), b = parse_bigint(sb), c = parse_bigint(sc);
      Report report{"special-shadow"};
      report.parameters["a"] = to_string(a);
      report.parameters["b"] = to_string(b);
      report.parameters["c"] = to_string(c);
      put_render_params(report, special_r);
      const QuadForm q{a, BigInt(c - a - b), b};
      report.outputs["form"] = {to_string(q.a), to_string(q.h), to_string(q.b)};
      const auto tree =
          special_orbit_tree(a, b, c, special_r.depth, kDefaultDepthLimit, special_r.threads);
      const auto topo = enumerate(q, special_r.depth, kDefaultDepthLimit, special_r.threads);
      report.checks.push_back(check_nodes("shadow mordell equation", tree,
                                          [](std::size_t, const auto& t) {
                                            return satisfies_shadow_mordell(t);
                                          }));
      report.checks.push_back(check_nodes("shadows form the topograph of Q", tree,
                                          [&](std::size_t i, const auto& t) {
                                            return shadow_part(t) == topo[i];
                                          }));
      return emit_tree(std::move(report), tree, special_r, "Special shadow orbit");
    };
  });

  // lyapunov
  std::string ly_path, ly_cf, ly_word, ly_exact, ly_mobius, ly_format = "json";
  std::int64_t ly_n = 40;
  auto* lyap = app.add_subcommand("lyapunov", "Lyapunov exponent of a Euclid-tree path");
  add_path_flags(lyap, ly_path, ly_cf, ly_word);
  lyap->add_option("--n", ly_n, "Path length")->check(CLI::PositiveNumber)->capture_default_str();
  lyap->add_option("--exact-period", ly_exact, "Also evaluate the exact value for this period");
  lyap->add_option("--mobius", ly_mobius, "Compare with the image under a,b,c,d (det ±1)");
  lyap->add_option("--format", ly_format, "json, or csv for the series")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  lyap->footer("CSV columns: step,value with value = ln(a_k)/k along the path.");
  lyap->callback([&] {
    action = [&] {
      const PathSpec spec = path_from(ly_path, ly_cf, ly_word);
      Report report{"lyapunov"};
      report.parameters["path"] = spec.str();
      report.parameters["n"] = ly_n;
      const auto est = lyapunov_estimate(spec, ly_n);
      report.outputs["estimate"] = est.value;
      report.outputs["window"] = {window_start(ly_n), ly_n};
      if (!ly_exact.empty()) {
        report.outputs["exact_period"] = ly_exact;
        report.outputs["exact"] = lyapunov_exact_periodic(PathWord::parse(ly_exact));
      } else if (auto w = spec.period_word()) {
        report.outputs["exact_period"] = w->str();
        report.outputs["exact"] = lyapunov_exact_periodic(*w);
      }
      if (!ly_mobius.empty()) {
        const auto v = parse_ints(ly_mobius, 4, "--mobius");
        const auto g = gl2_invariance_check(spec, {v[0], v[1], v[2], v[3]}, ly_n);
        json gl2{{"estimate", g.image.value}};
        gl2["image_cf"] = g.image_cf ? json(g.image_cf->str()) : json("infinity");
        if (g.exact_image) gl2["exact"] = *g.exact_image;
        report.outputs["image"] = gl2;
      }
      if (ly_n >= 40) {
        const double bound = std::log(std::numbers::phi) + 0.02;
        report.checks.push_back({"estimate within the spectrum bound", est.value <= bound, 1,
                                 fmt_double(est.value) + " <= " + fmt_double(bound)});
      }
      std::optional<std::string> body;
      if (ly_format == "csv") body = series_csv(lyapunov_series(spec, ly_n));
      return Outcome{std::move(report), body};
    };
  });

  // growth
  std::string gr_form, gr_path, gr_cf, gr_word, gr_format = "json";
  std::int64_t gr_n = 40;
  auto* growth = app.add_subcommand("growth", "Growth exponent of |Q| along a path");
  growth->add_option("--form", gr_form, "Coefficients a,h,b")->required();
  add_path_flags(growth, gr_path, gr_cf, gr_word);
  growth->add_option("--n", gr_n, "Path length")->check(CLI::PositiveNumber)->capture_default_str();
  growth->add_option("--format", gr_format, "json, or csv for the series")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  growth->footer("CSV columns: step,value with value = ln|z_k|/k, z_k the value created at step k.");
  growth->callback([&] {
    action = [&] {
      const QuadForm q = parse_form(gr_form);
      const PathSpec spec = path_from(gr_path, gr_cf, gr_word);
      Report report{"growth"};
      report.parameters["form"] = {to_string(q.a), to_string(q.h), to_string(q.b)};
      report.parameters["path"] = spec.str();
      report.parameters["n"] = gr_n;
      report.outputs["exponent"] = topograph_growth_exponent(q, spec, gr_n);
      report.outputs["window"] = {window_start(gr_n), gr_n};
      std::optional<std::string> body;
      if (gr_format == "csv") {
        body = series_csv(growth_series(root_triple(q), spec.word(static_cast<std::size_t>(gr_n))));
      }
      return Outcome{std::move(report), body};
    };
  });

  // relative-growth
  std::string rg_d, rg_m = "1", rg_path, rg_cf, rg_word, rg_format = "json";
  std::int64_t rg_n = 30;
  auto* rel = app.add_subcommand("relative-growth", "Growth of x̃/x for principal shadows");
  rel->add_option("--d", rg_d, "Pell parameter d")->required();
  rel->add_option("--m", rg_m, "Shadow scale m")->capture_default_str();
  add_path_flags(rel, rg_path, rg_cf, rg_word);
  rel->add_option("--n", rg_n, "Path length")->check(CLI::PositiveNumber)->capture_default_str();
  rel->add_option("--format", rg_format, "json, or csv for the series")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  rel->footer("CSV columns: step,value with value = ln|x̃_k/x_k|/k along the Euclid path.");
  rel->callback([&] {
    action = [&] {
      const PellContext ctx = PellContext::for_d(parse_bigint(rg_d), parse_bigint(rg_m));
      const PathSpec spec = path_from(rg_path, rg_cf, rg_word);
      Report report{"relative-growth"};
      report.parameters["d"] = to_string(ctx.pell.d);
      report.parameters["m"] = to_string(ctx.m);
      report.parameters["path"] = spec.str();
      report.parameters["n"] = rg_n;
      report.outputs["estimate"] = relative_shadow_growth(ctx, spec, rg_n);
      report.outputs["window"] = {window_start(rg_n), rg_n};
      std::optional<std::string> body;
      if (rg_format == "csv") body = series_csv(relative_growth_series(ctx, spec, rg_n));
      return Outcome{std::move(report), body};
    };
  });

  // river
  std::string river_form;
  auto* river = app.add_subcommand("river", "Conway river of an indefinite form");
  river->add_option("--form", river_form, "Coefficients a,h,b")->required();
  river->callback([&] {
    action = [&] {
      const QuadForm q = parse_form(river_form);
      Report report{"river"};
      report.parameters["form"] = {to_string(q.a), to_string(q.h), to_string(q.b)};
      const auto r = find_river(q);
      report.outputs["river"] = river_json(r);
      report.checks.push_back(check_river(r));
      return Outcome{std::move(report), std::nullopt};
    };
  });

  // sequence
  std::string seq_name, seq_d = "2", seq_m = "1", seq_format = "csv";
  std::int64_t seq_n = 10;
  auto* seq = app.add_subcommand("sequence", "Branch sequences of the shadow trees");
  seq->add_option("name", seq_name, "shadow-fibonacci or mordell-branch")
      ->required()
      ->check(CLI::IsMember({"shadow-fibonacci", "mordell-branch"}));
  seq->add_option("--n", seq_n, "Number of terms")->check(CLI::NonNegativeNumber)->capture_default_str();
  seq->add_option("--d", seq_d, "Pell parameter d (mordell-branch)")->capture_default_str();
  seq->add_option("--m", seq_m, "Shadow scale m (mordell-branch)")->capture_default_str();
  seq->add_option("--format", seq_format, "csv (one comma-separated line) or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  seq->callback([&] {
    action = [&] {
      Report report{"sequence"};
      report.parameters["name"] = seq_name;
      report.parameters["n"] = seq_n;
      std::vector<BigInt> values;
      if (seq_name == "shadow-fibonacci") {
        check_depth(static_cast<int>(std::min<std::int64_t>(seq_n, 1 << 20)), 1 << 20);
        values = fibonacci_branch_shadow(static_cast<int>(seq_n));
      } else {
        const PellContext ctx = PellContext::for_d(parse_bigint(seq_d), parse_bigint(seq_m));
        report.parameters["d"] = to_string(ctx.pell.d);
        values = mordell_branch(ctx, seq_n);
      }
      json list = json::array();
      for (const auto& v : values) list.push_back(to_string(v));
      report.outputs["values"] = list;
      std::optional<std::string> body;
      if (seq_format == "csv") {
        std::string line;
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (i > 0) line += ',';
          line += to_string(values[i]);
        }
        body = values.empty() ? "" : line + "\n";
      }
      return Outcome{std::move(report), body};
    };
  });

  // verify
  std::string v_suite = "all", v_ds, v_ms;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run exact and numerical invariant suites");
  verify->add_option("--suite", v_suite, "Suite to run")
      ->check(CLI::IsMember({"all", "markov", "mordell", "topograph", "growth"}))
      ->capture_default_str();
  verify->add_option("--depth", vopts.depth, "Tree depth")->capture_default_str();
  verify->add_option("--d", v_ds, "Comma-separated Pell parameters (default 2,3,5,6,7,13)");
  verify->add_option("--m", v_ms, "Comma-separated shadow scales (default -2,1,3)");
  verify->add_option("--range", vopts.range, "Euclid triples with |a|,|b| <= range")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--threads", vopts.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->callback([&] {
    action = [&] {
      if (!v_ds.empty()) {
        vopts.ds.clear();
        for (const auto& d : parse_ints(v_ds, 0, "--d")) vopts.ds.push_back(to_int64(d));
      }
      if (!v_ms.empty()) {
        vopts.ms.clear();
        for (const auto& m : parse_ints(v_ms, 0, "--m")) vopts.ms.push_back(to_int64(m));
      }
      Report report{"verify"};
      report.parameters["suite"] = v_suite;
      report.parameters["depth"] = vopts.depth;
      report.parameters["d"] = vopts.ds;
      report.parameters["m"] = vopts.ms;
      report.parameters["range"] = vopts.range;
      report.checks = run_suite(v_suite, vopts);
      return Outcome{std::move(report), std::nullopt};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome result = action();
    if (result.body) {
      out << *result.body;
    } else {
      out << result.report.to_json().dump(2) << '\n';
    }
    for (const auto& c : result.report.checks) {
      if (!c.passed) err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
    return result.report.failures() == 0 ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Parse || e.code() == Errc::InvalidArgument ? kExitUsage : kExitDomain;
  }
}

}  // namespace shadowdyn::cli
