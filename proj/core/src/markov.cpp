#include "shadowdyn/markov.hpp"

#include "shadowdyn/error.hpp"

namespace shadowdyn {

namespace {

const DualInt& shadow_coefficient() {
  static const DualInt k(BigInt(3), BigInt(-2));
  return k;
}

std::string describe(const MarkovTriple& t) {
  return "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ")";
}

std::string describe(const ShadowMarkovTriple& t) {
  return "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ")";
}

}  // namespace

bool satisfies_markov(const MarkovTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z == 3 * t.x * t.y * t.z;
}

bool satisfies_shadow_markov(const ShadowMarkovTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z == shadow_coefficient() * t.x * t.y * t.z;
}

MarkovTriple vieta_markov(const MarkovTriple& t) {
  if (!satisfies_markov(t)) throw Error(Errc::InvalidTriple, describe(t) + " is not a Markov triple");
  return {t.x, t.y, BigInt(3 * t.x * t.y - t.z)};
}

ShadowMarkovTriple shadow_vieta(const ShadowMarkovTriple& t) {
  if (!satisfies_shadow_markov(t)) {
    throw Error(Errc::InvalidTriple, describe(t) + " is not a shadow Markov triple");
  }
  return {t.x, t.y, shadow_coefficient() * t.x * t.y - t.z};
}

MarkovTriple markov_step(const MarkovTriple& t, Turn turn) {
  if (turn == Turn::L) return {t.x, t.z, BigInt(3 * t.x * t.z - t.y)};
  return {t.z, t.y, BigInt(3 * t.z * t.y - t.x)};
}

ShadowMarkovTriple shadow_markov_step(const ShadowMarkovTriple& t, Turn turn) {
  if (turn == Turn::L) return {t.x, t.z, shadow_coefficient() * t.x * t.z - t.y};
  return {t.z, t.y, shadow_coefficient() * t.z * t.y - t.x};
}

MarkovTriple markov_root() { return {1, 1, 1}; }

ShadowMarkovTriple shadow_markov_root() {
  const DualInt unit(BigInt(1), BigInt(1));
  return {unit, DualInt(BigInt(1)), unit};
}

Tree<MarkovTriple> markov_tree(int depth, int depth_limit, unsigned threads) {
  return grow_tree(markov_root(), depth, markov_step, threads, depth_limit);
}

Tree<ShadowMarkovTriple> shadow_markov_tree(int depth, int depth_limit, unsigned threads) {
  return grow_tree(shadow_markov_root(), depth, shadow_markov_step, threads, depth_limit);
}

MarkovTriple real_part(const ShadowMarkovTriple& t) { return {t.x.re, t.y.re, t.z.re}; }

std::vector<BigInt> fibonacci_branch_shadow(int n) {
  std::vector<BigInt> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  ShadowMarkovTriple t = shadow_markov_root();
  for (int i = 0; i < n; ++i) {
    out.push_back(t.z.sh);
    t = shadow_markov_step(t, Turn::L);
  }
  return out;
}

std::vector<BigInt> fibonacci_branch_values(int n) {
  std::vector<BigInt> out;
  if (n <= 0) return out;
  MarkovTriple t = markov_root();
  for (int i = 0; i < n; ++i) {
    out.push_back(t.z);
    t = markov_step(t, Turn::L);
  }
  return out;
}

}  // namespace shadowdyn
