#include "shadowdyn/contfrac.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "shadowdyn/error.hpp"

namespace shadowdyn {

std::optional<BigInt> ContinuedFraction::term(std::size_t i) const {
  if (i == 0) return head;
  const std::size_t k = i - 1;
  if (k < preperiod.size()) return preperiod[k];
  if (period.empty()) return std::nullopt;
  return period[(k - preperiod.size()) % period.size()];
}

std::string ContinuedFraction::str() const {
  std::string out = to_string(head);
  if (preperiod.empty() && period.empty()) return out;
  out += ";";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ",";
    first = false;
  };
  for (const auto& t : preperiod) {
    sep();
    out += to_string(t);
  }
  if (!period.empty()) {
    sep();
    out += "(";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(period[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == delim) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Shortest period, started as early as possible: "1;1,1,(1)" becomes "1;(1)".
void tidy(ContinuedFraction& cf) {
  auto& p = cf.period;
  for (std::size_t len = 1; len < p.size(); ++len) {
    if (p.size() % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < p.size() && repeats; ++i) repeats = p[i] == p[i - len];
    if (repeats) {
      p.resize(len);
      break;
    }
  }
  while (!p.empty() && !cf.preperiod.empty() && cf.preperiod.back() == p.back()) {
    std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
    cf.preperiod.pop_back();
  }
}

void check_tail_term(const BigInt& t) {
  if (t < 1) throw Error(Errc::Parse, "partial quotients after the head must be >= 1");
}

}  // namespace

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  ContinuedFraction cf;
  std::string s(text);
  if (s.empty()) throw Error(Errc::Parse, "empty continued fraction");

  const auto semi = s.find(';');
  if (semi == std::string::npos) {
    // shorthand "c0,c1,...,ck,..."
    auto parts = split(s, ',');
    bool repeat_last = false;
    if (!parts.empty() && parts.back() == "...") {
      repeat_last = true;
      parts.pop_back();
    }
    if (parts.empty()) throw Error(Errc::Parse, "continued fraction has no terms");
    cf.head = parse_bigint(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) cf.preperiod.push_back(parse_bigint(parts[i]));
    if (repeat_last) {
      if (cf.preperiod.empty()) throw Error(Errc::Parse, "'...' needs a term to repeat");
      cf.period.push_back(cf.preperiod.back());
      cf.preperiod.pop_back();
    }
  } else {
    cf.head = parse_bigint(s.substr(0, semi));
    std::string rest = s.substr(semi + 1);
    const auto open = rest.find('(');
    std::string pre = rest.substr(0, open);
    for (const auto& p : split(pre, ',')) {
      if (!p.empty()) cf.preperiod.push_back(parse_bigint(p));
    }
    if (open != std::string::npos) {
      const auto close = rest.find(')', open);
      if (close == std::string::npos || close != rest.size() - 1) {
        throw Error(Errc::Parse, "unbalanced period in '" + s + "'");
      }
      for (const auto& p : split(rest.substr(open + 1, close - open - 1), ',')) {
        cf.period.push_back(parse_bigint(p));
      }
    }
  }
  for (const auto& t : cf.preperiod) check_tail_term(t);
  for (const auto& t : cf.period) check_tail_term(t);
  tidy(cf);
  return cf;
}

ContinuedFraction sqrt_cf(const BigInt& d) {
  if (d <= 0 || is_perfect_square(d)) {
    throw Error(Errc::SquareInput, to_string(d) + " is not a positive non-square");
  }
  ContinuedFraction cf;
  BigInt a0;
  mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
  cf.head = a0;
  BigInt m = 0;
  BigInt den = 1;
  BigInt a = a0;
  // the period of √d ends with the term 2·a0
  do {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    cf.period.push_back(a);
  } while (a != 2 * a0);
  return cf;
}

ContinuedFraction rational_cf(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  ContinuedFraction cf;
  BigInt n = num;
  BigInt d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  cf.head = q;
  BigInt r = n - q * d;
  while (r != 0) {
    n = d;
    d = r;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    cf.preperiod.push_back(q);
    r = n - q * d;
  }
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Convergent> out;
  BigInt p_prev = 1, q_prev = 0;
  BigInt p = cf.head, q = 1;
  out.push_back({p, q});
  for (std::size_t i = 1; i <= count; ++i) {
    auto t = cf.term(i);
    if (!t) break;
    BigInt p_next = *t * p + p_prev;
    BigInt q_next = *t * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q});
  }
  return out;
}

namespace {

// floor(n / d) for d != 0
BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

constexpr std::size_t kMaxTransformSteps = 100'000;

}  // namespace

std::optional<ContinuedFraction> mobius_transform(const ContinuedFraction& x, const Mobius& g) {
  if (g.det() == 0) throw Error(Errc::DegenerateImage, "matrix is singular");

  // state: z = (a·t + b)/(c·t + d) where t is the unread tail of x
  BigInt a = g.a, b = g.b, c = g.c, d = g.d;
  std::vector<BigInt> out;
  std::size_t next = 0;  // index of the next input term
  bool tail_at_least_one = false;

  using Key = std::tuple<BigInt, BigInt, BigInt, BigInt, std::size_t>;
  std::map<Key, std::size_t> seen;  // state after an emission -> output length

  const std::size_t pre_len = 1 + x.preperiod.size();

  for (std::size_t guard = 0; guard < kMaxTransformSteps; ++guard) {
    // emit while the whole range t ∈ [1, ∞] maps into one unit interval
    if (tail_at_least_one && c != 0 && sgn(c) == sgn(BigInt(c + d)) && c + d != 0) {
      BigInt lo = floor_div(a, c);
      BigInt hi = floor_div(BigInt(a + b), BigInt(c + d));
      if (lo == hi) {
        out.push_back(lo);
        BigInt na = c, nb = d, nc = a - lo * c, nd = b - lo * d;
        a = std::move(na);
        b = std::move(nb);
        c = std::move(nc);
        d = std::move(nd);
        if (!x.is_finite() && next >= pre_len) {
          const std::size_t phase = (next - pre_len) % x.period.size();
          Key key{a, b, c, d, phase};
          auto [it, inserted] = seen.emplace(key, out.size());
          if (!inserted) {
            ContinuedFraction res;
            res.head = out.front();
            const std::size_t start = it->second;  // out[start..] repeats, start >= 1
            for (std::size_t i = 1; i < start; ++i) res.preperiod.push_back(out[i]);
            for (std::size_t i = start; i < out.size(); ++i) res.period.push_back(out[i]);
            tidy(res);
            return res;
          }
        }
        continue;
      }
    }

    auto t = x.term(next);
    if (!t) {
      // input exhausted: t = ∞, z = a/c
      if (c == 0) {
        if (out.empty()) return std::nullopt;
        break;
      }
      ContinuedFraction rest = rational_cf(a, c);
      if (out.empty()) return rest;
      out.push_back(rest.head);
      for (auto& v : rest.preperiod) out.push_back(v);
      break;
    }
    // t = term + 1/t'
    BigInt na = a * *t + b, nc = c * *t + d;
    b = std::move(a);
    d = std::move(c);
    a = std::move(na);
    c = std::move(nc);
    ++next;
    tail_at_least_one = true;
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "continued fraction transform did not converge");
  ContinuedFraction res;
  res.head = out.front();
  for (std::size_t i = 1; i < out.size(); ++i) res.preperiod.push_back(out[i]);
  if (!x.is_finite()) {
    throw Error(Errc::InvalidArgument, "continued fraction transform did not find a period");
  }
  return res;
}

}  // namespace shadowdyn
