#include "shadowdyn/euclid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "shadowdyn/error.hpp"

namespace shadowdyn {

EuclidTriple euclid_step(const EuclidTriple& t, Turn turn) {
  if (turn == Turn::L) return {t.a, t.c, BigInt(t.a + t.c)};
  return {t.c, t.b, BigInt(t.c + t.b)};
}

std::vector<EuclidTriple> euclid_path(const PathWord& word) {
  std::vector<EuclidTriple> out;
  out.reserve(word.size() + 1);
  out.push_back(EuclidTriple::root());
  for (Turn t : word) out.push_back(euclid_step(out.back(), t));
  return out;
}

Tree<EuclidTriple> euclid_tree(int depth, int depth_limit) {
  return grow_tree(EuclidTriple::root(), depth, euclid_step, 1, depth_limit);
}

PathWord word_from_cf(const ContinuedFraction& cf, std::size_t n) {
  PathWord word;
  Turn letter = Turn::L;
  for (std::size_t i = 1; word.size() < n; ++i) {
    auto term = cf.term(i);
    if (!term) break;
    letter = (i % 2 == 1) ? Turn::L : Turn::R;
    BigInt left = *term;
    while (left > 0 && word.size() < n) {
      word.push_back(letter);
      left -= 1;
    }
  }
  while (word.size() < n) word.push_back(letter);
  return word;
}

PathSpec PathSpec::golden() {
  ContinuedFraction cf;
  cf.head = 1;
  cf.period = {BigInt(1)};
  return from_cf(std::move(cf));
}

PathSpec PathSpec::parse(std::string_view text) {
  if (text == "golden") return golden();
  if (text.substr(0, 3) == "cf:") return from_cf(ContinuedFraction::parse(text.substr(3)));
  if (text.substr(0, 5) == "word:") {
    std::string_view body = text.substr(5);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) return from_word(PathWord::parse(body));
    return from_word(PathWord::parse(body.substr(0, slash)),
                     PathWord::parse(body.substr(slash + 1)));
  }
  const bool letters = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c == 'L' || c == 'R' || c == 'l' || c == 'r';
  });
  if (letters) return periodic(PathWord::parse(text));
  return from_cf(ContinuedFraction::parse(text));
}

PathWord PathSpec::word(std::size_t n) const {
  if (const auto* cf = std::get_if<ContinuedFraction>(&source_)) return word_from_cf(*cf, n);
  const auto& w = std::get<Word>(source_);
  PathWord out;
  for (std::size_t i = 0; i < n && i < w.prefix.size(); ++i) out.push_back(w.prefix[i]);
  if (w.period.empty()) {
    Turn last = w.prefix.empty() ? Turn::L : w.prefix[w.prefix.size() - 1];
    while (out.size() < n) out.push_back(last);
  } else {
    for (std::size_t i = 0; out.size() < n; ++i) out.push_back(w.period[i % w.period.size()]);
  }
  return out;
}

std::optional<PathWord> PathSpec::period_word() const {
  if (const auto* cf = std::get_if<ContinuedFraction>(&source_)) {
    if (cf->is_finite()) return std::nullopt;
    const std::size_t blocks =
        cf->period.size() % 2 == 1 ? 2 * cf->period.size() : cf->period.size();
    PathWord out;
    // first period term sits at index preperiod.size() + 1
    for (std::size_t j = 0; j < blocks; ++j) {
      const std::size_t idx = cf->preperiod.size() + 1 + j;
      const Turn letter = idx % 2 == 1 ? Turn::L : Turn::R;
      const BigInt& count = cf->period[j % cf->period.size()];
      for (BigInt k = 0; k < count; ++k) out.push_back(letter);
    }
    return out;
  }
  const auto& w = std::get<Word>(source_);
  if (w.period.empty()) return std::nullopt;
  return w.period;
}

std::string PathSpec::str() const {
  if (const auto* cf = std::get_if<ContinuedFraction>(&source_)) return "cf:" + cf->str();
  const auto& w = std::get<Word>(source_);
  return "word:" + w.prefix.str() + "/" + w.period.str();
}

std::int64_t window_start(std::int64_t n) {
  const std::int64_t width = std::max<std::int64_t>(1, n / 4);
  return n - width + 1;
}

LyapunovEstimate lyapunov_estimate(const PathSpec& spec, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "lyapunov estimate needs n >= 1");
  const auto path = euclid_path(spec.word(static_cast<std::size_t>(n)));
  double best = 0.0;
  for (std::int64_t k = window_start(n); k <= n; ++k) {
    best = std::max(best, log_abs(path[static_cast<std::size_t>(k)].a) / static_cast<double>(k));
  }
  return {n, best, LyapunovEstimate::Method::WindowedLimsup};
}

std::vector<double> lyapunov_series(const PathSpec& spec, std::int64_t n) {
  std::vector<double> out;
  if (n < 1) return out;
  const auto path = euclid_path(spec.word(static_cast<std::size_t>(n)));
  for (std::int64_t k = 1; k <= n; ++k) {
    out.push_back(log_abs(path[static_cast<std::size_t>(k)].a) / static_cast<double>(k));
  }
  return out;
}

std::array<BigInt, 4> word_matrix(const PathWord& word) {
  std::array<BigInt, 4> m{1, 0, 0, 1};
  for (Turn t : word) {
    // right-multiply by L = [[1,0],[1,1]] or R = [[1,1],[0,1]]
    if (t == Turn::L) {
      m[0] += m[1];
      m[2] += m[3];
    } else {
      m[1] += m[0];
      m[3] += m[2];
    }
  }
  return m;
}

double log_spectral_radius(const BigInt& trace) {
  BigInt t = abs(trace);
  if (t < 2) throw Error(Errc::InvalidArgument, "elliptic trace has no growth");
  if (t == 2) return 0.0;
  if (t.fits_slong_p() && t < (BigInt(1) << 52)) {
    return std::acosh(t.get_d() / 2.0);
  }
  // ρ = t·(1 + sqrt(1 − 4/t²))/2 and 4/t² is below double resolution here
  return log_abs(t);
}

double lyapunov_exact_periodic(const PathWord& period) {
  if (period.empty()) throw Error(Errc::InvalidArgument, "period word must be nonempty");
  const auto m = word_matrix(period);
  return log_spectral_radius(BigInt(m[0] + m[3])) / static_cast<double>(period.size());
}

}  // namespace shadowdyn
