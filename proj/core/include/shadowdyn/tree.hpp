#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "shadowdyn/error.hpp"

namespace shadowdyn {

/// One step away from the root. At a vertex whose parent edge is flanked by
/// regions x (left) and y (right), with z the region ahead:
///   L crosses the x|z edge, keeping x on the left and z on the right;
///   R crosses the z|y edge, keeping z on the left and y on the right.
/// This is the single orientation convention shared by every tree in the
/// library (topograph, Markov, Mordell, Euclid).
enum class Turn : char { L = 'L', R = 'R' };

inline Turn opposite(Turn t) { return t == Turn::L ? Turn::R : Turn::L; }

/// Word over {L, R} addressing a vertex from the root; empty = root.
class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<Turn> turns) : turns_(std::move(turns)) {}

  static PathWord parse(std::string_view text);

  std::size_t size() const { return turns_.size(); }
  bool empty() const { return turns_.empty(); }
  Turn operator[](std::size_t i) const { return turns_[i]; }
  void push_back(Turn t) { turns_.push_back(t); }

  auto begin() const { return turns_.begin(); }
  auto end() const { return turns_.end(); }

  std::string str() const {
    std::string out;
    out.reserve(turns_.size());
    for (Turn t : turns_) out.push_back(static_cast<char>(t));
    return out;
  }

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  std::vector<Turn> turns_;
};

inline PathWord PathWord::parse(std::string_view text) {
  std::vector<Turn> turns;
  turns.reserve(text.size());
  for (char c : text) {
    if (c == 'L' || c == 'l') {
      turns.push_back(Turn::L);
    } else if (c == 'R' || c == 'r') {
      turns.push_back(Turn::R);
    } else {
      throw Error(Errc::Parse, "path words use only L and R, got '" + std::string(text) + "'");
    }
  }
  return PathWord(std::move(turns));
}

inline constexpr int kDefaultDepthLimit = 24;

inline void check_depth(int depth, int limit = kDefaultDepthLimit) {
  if (depth < 0 || depth > limit) {
    throw Error(Errc::DepthLimit,
                "depth " + std::to_string(depth) + " outside [0, " + std::to_string(limit) + "]");
  }
}

/// Complete binary tree stored breadth-first: node i has children 2i+1 (L)
/// and 2i+2 (R).
template <class T>
class Tree {
 public:
  Tree() = default;
  Tree(int depth, std::vector<T> nodes) : depth_(depth), nodes_(std::move(nodes)) {}

  int depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  const T& root() const { return nodes_.front(); }
  const T& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<T>& nodes() const { return nodes_; }

  const T& at(const PathWord& word) const { return nodes_.at(index_of(word)); }

  static std::size_t index_of(const PathWord& word) {
    std::size_t i = 0;
    for (Turn t : word) i = 2 * i + (t == Turn::L ? 1 : 2);
    return i;
  }

  static PathWord word_of(std::size_t index) {
    std::vector<Turn> rev;
    while (index > 0) {
      rev.push_back(index % 2 == 1 ? Turn::L : Turn::R);
      index = (index - 1) / 2;
    }
    return PathWord(std::vector<Turn>(rev.rbegin(), rev.rend()));
  }

  static int level_of(std::size_t index) {
    int level = 0;
    while (index > 0) {
      index = (index - 1) / 2;
      ++level;
    }
    return level;
  }

  template <class F>
  auto map(F&& f) const -> Tree<decltype(f(std::declval<const T&>()))> {
    std::vector<decltype(f(std::declval<const T&>()))> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(f(n));
    return {depth_, std::move(out)};
  }

 private:
  int depth_ = 0;
  std::vector<T> nodes_;
};

/// Materializes the complete tree of the given depth, `step(node, turn)`
/// producing each child. With threads > 1 the subtrees below a split level are
/// filled concurrently; the result is identical to the sequential one.
template <class T, class Step>
Tree<T> grow_tree(T root, int depth, Step step, unsigned threads = 1,
                  int depth_limit = kDefaultDepthLimit) {
  check_depth(depth, depth_limit);
  const std::size_t count = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<T> nodes(count);
  nodes[0] = std::move(root);

  auto fill = [&](std::size_t from_level_start, int from_level, std::size_t offset,
                  std::size_t width) {
    // Fill levels below `from_level` restricted to the block of `width` nodes
    // starting at `offset` within that level.
    std::size_t start = from_level_start + offset;
    for (int level = from_level; level < depth; ++level) {
      std::size_t child_start = 2 * start + 1;
      for (std::size_t i = 0; i < width; ++i) {
        const T& parent = nodes[start + i];
        nodes[child_start + 2 * i] = step(parent, Turn::L);
        nodes[child_start + 2 * i + 1] = step(parent, Turn::R);
      }
      start = child_start;
      width *= 2;
    }
  };

  int split = 0;
  while (split < depth && (1u << split) < threads) ++split;
  if (threads <= 1 || split == 0) {
    fill(0, 0, 0, 1);
    return Tree<T>(depth, std::move(nodes));
  }

  // sequential top part, then one worker per block of the split level
  for (int level = 0; level < split; ++level) {
    std::size_t start = (std::size_t{1} << level) - 1;
    for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) {
      const T& parent = nodes[start + i];
      nodes[2 * (start + i) + 1] = step(parent, Turn::L);
      nodes[2 * (start + i) + 2] = step(parent, Turn::R);
    }
  }
  const std::size_t level_start = (std::size_t{1} << split) - 1;
  const std::size_t level_width = std::size_t{1} << split;
  const std::size_t per = (level_width + threads - 1) / threads;
  std::vector<std::thread> workers;
  for (std::size_t off = 0; off < level_width; off += per) {
    std::size_t w = std::min(per, level_width - off);
    workers.emplace_back([&, off, w] {
      // each block owns a disjoint set of descendants
      for (std::size_t j = 0; j < w; ++j) fill(level_start, split, off + j, 1);
    });
  }
  for (auto& t : workers) t.join();
  return Tree<T>(depth, std::move(nodes));
}

}  // namespace shadowdyn
