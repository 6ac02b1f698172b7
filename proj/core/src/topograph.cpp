#include "shadowdyn/topograph.hpp"

#include "shadowdyn/error.hpp"

namespace shadowdyn {

RegionVector RegionVector::normalized(BigInt u, BigInt v) {
  if (v < 0 || (v == 0 && u < 0)) {
    u = -u;
    v = -v;
  }
  return {std::move(u), std::move(v)};
}

EdgeFrame EdgeFrame::step(Turn t) const {
  if (t == Turn::L) return {lu, lv, BigInt(lu + ru), BigInt(lv + rv)};
  return {BigInt(lu + ru), BigInt(lv + rv), ru, rv};
}

EdgeFrame EdgeFrame::reversed() const { return {ru, rv, BigInt(-lu), BigInt(-lv)}; }

RegionVector EdgeFrame::region(Region which) const {
  switch (which) {
    case Region::X: return RegionVector::normalized(lu, lv);
    case Region::Y: return RegionVector::normalized(ru, rv);
    case Region::Z: break;
  }
  return RegionVector::normalized(BigInt(lu + ru), BigInt(lv + rv));
}

FaceTriple<BigInt> root_triple(const QuadForm& q) {
  return {q.a, q.b, BigInt(q.a + q.b + q.h)};
}

std::vector<FaceTriple<BigInt>> values_along_path(const QuadForm& q, const PathWord& word) {
  std::vector<FaceTriple<BigInt>> out;
  out.reserve(word.size() + 1);
  out.push_back(root_triple(q));
  for (Turn t : word) out.push_back(ap_step(out.back(), t));
  return out;
}

EdgeFrame frame_at(const PathWord& word) {
  EdgeFrame f = EdgeFrame::root();
  for (Turn t : word) f = f.step(t);
  return f;
}

RegionVector region_vector(const PathWord& word, Region which) {
  return frame_at(word).region(which);
}

Tree<FaceTriple<BigInt>> enumerate(const QuadForm& q, int depth, int depth_limit,
                                   unsigned threads) {
  return grow_tree(
      root_triple(q), depth,
      [](const FaceTriple<BigInt>& t, Turn turn) { return ap_step(t, turn); }, threads,
      depth_limit);
}

Tree<EdgeFrame> enumerate_frames(int depth, int depth_limit) {
  return grow_tree(
      EdgeFrame::root(), depth, [](const EdgeFrame& f, Turn turn) { return f.step(turn); }, 1,
      depth_limit);
}

FaceTriple<BigInt> river_step(const FaceTriple<BigInt>& t, Turn* taken) {
  if (t.z == 0) throw Error(Errc::ZeroValueEncountered, "form represents zero");
  Turn turn = sgn(t.z) == sgn(t.x) ? Turn::R : Turn::L;
  if (taken != nullptr) *taken = turn;
  return ap_step(t, turn);
}

namespace {

void require_nonzero(const FaceTriple<BigInt>& t) {
  if (t.x == 0 || t.y == 0 || t.z == 0) {
    throw Error(Errc::ZeroValueEncountered, "form represents zero");
  }
}

}  // namespace

RiverDescription find_river(const QuadForm& q, std::int64_t step_limit) {
  const BigInt disc = q.discriminant();
  if (disc <= 0) {
    throw Error(Errc::NotIndefinite, "discriminant " + to_string(disc) + " is not positive");
  }
  if (is_perfect_square(disc)) {
    throw Error(Errc::SquareDiscriminant, "discriminant " + to_string(disc) + " is a square");
  }

  FaceTriple<BigInt> state = root_triple(q);
  EdgeFrame frame = EdgeFrame::root();
  std::int64_t steps = 0;

  auto advance = [&](Turn turn) {
    state = ap_step(state, turn);
    frame = frame.step(turn);
    if (++steps > step_limit) {
      throw Error(Errc::InvalidArgument, "river not reached within step limit");
    }
  };

  // Descend. Values are compared after scaling by the common sign s of the
  // flanks, so "smaller" means closer to the river.
  require_nonzero(state);
  while (sgn(state.x) == sgn(state.y)) {
    const int s = sgn(state.x);
    BigInt behind = 2 * (state.x + state.y) - state.z;
    if (behind == 0) throw Error(Errc::ZeroValueEncountered, "form represents zero");
    if (s * sgn(BigInt(behind - state.z)) < 0) {
      state = ap_reverse(state);
      frame = frame.reversed();
    }
    require_nonzero(state);
    if (sgn(state.z) != s) {
      advance(Turn::L);
      break;
    }
    // both forward edges: the arrow points downhill when the new value is
    // smaller than the value it replaces
    BigInt via_l = 2 * (state.x + state.z) - state.y;
    BigInt via_r = 2 * (state.y + state.z) - state.x;
    const bool down_l = s * sgn(BigInt(via_l - state.y)) < 0;
    const bool down_r = s * sgn(BigInt(via_r - state.x)) < 0;
    if (!down_l && !down_r) {
      throw Error(Errc::InvalidArgument, "descent reached a well; form is not indefinite");
    }
    Turn turn = Turn::L;
    if (!down_l || (down_r && s * sgn(BigInt(via_r - via_l)) < 0)) turn = Turn::R;
    advance(turn);
    require_nonzero(state);
  }

  RiverDescription river;
  river.start = state;
  river.start_frame = frame;
  river.approach_steps = steps;

  FaceTriple<BigInt> cur = state;
  std::int64_t walked = 0;
  do {
    river.period_states.push_back(cur);
    Turn turn{};
    cur = river_step(cur, &turn);
    river.period.push_back(turn);
    if (++walked > step_limit) {
      throw Error(Errc::InvalidArgument, "river period exceeds step limit");
    }
  } while (!(cur == state));
  return river;
}

std::int64_t jacobi_two_squares(std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  std::int64_t d1 = 0;
  std::int64_t d3 = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (std::int64_t e : {d, n / d}) {
      if (e % 4 == 1) ++d1;
      if (e % 4 == 3) ++d3;
      if (d * d == n) break;
    }
  }
  return 4 * (d1 - d3);
}

std::int64_t brute_force_two_squares(std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  std::int64_t count = 0;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (x * x + y * y == n) ++count;
    }
  }
  return count;
}

}  // namespace shadowdyn
