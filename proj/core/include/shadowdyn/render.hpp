#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowdyn/bigint.hpp"
#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/dual.hpp"
#include "shadowdyn/topograph.hpp"
#include "shadowdyn/tree.hpp"

namespace shadowdyn {

enum class Format { Json, Csv, Dot, Svg };
enum class Labels { Values, Farey, Both };

Format parse_format(std::string_view text);
Labels parse_labels(std::string_view text);
const char* format_name(Format f);

/// Decimal strings throughout; values outgrow 64 bits quickly.
nlohmann::json to_json(const BigInt& x);
/// {"re": "...", "sh": "..."}
nlohmann::json to_json(const DualInt& x);
nlohmann::json to_json(const RegionVector& v);
nlohmann::json to_json(const ContinuedFraction& cf);

template <class T>
nlohmann::json to_json(const FaceTriple<T>& t) {
  return nlohmann::json::array({to_json(t.x), to_json(t.y), to_json(t.z)});
}

/// Tree flattened for the emitters: region values as text and JSON, plus the
/// primitive vector of each region.
struct RenderNode {
  PathWord word;
  std::array<std::string, 3> text;
  std::array<nlohmann::json, 3> values;
  std::array<RegionVector, 3> vectors;
};

struct RenderTree {
  std::string title;
  int depth = 0;
  std::vector<RenderNode> nodes;  // breadth-first, as in Tree
};

inline std::string value_text(const BigInt& x) { return to_string(x); }
inline std::string value_text(const DualInt& x) { return to_string(x); }

template <class T>
RenderTree make_render_tree(const Tree<FaceTriple<T>>& tree, std::string title) {
  RenderTree out;
  out.title = std::move(title);
  out.depth = tree.depth();
  const auto frames = enumerate_frames(tree.depth(), tree.depth());
  out.nodes.reserve(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto& t = tree[i];
    const auto& f = frames[i];
    out.nodes.push_back(RenderNode{
        Tree<FaceTriple<T>>::word_of(i),
        {value_text(t.x), value_text(t.y), value_text(t.z)},
        {to_json(t.x), to_json(t.y), to_json(t.z)},
        {f.region(Region::X), f.region(Region::Y), f.region(Region::Z)},
    });
  }
  return out;
}

/// [{"word": "LR", "triple": [...], "vectors": [[u, v], ...]}, ...]
nlohmann::json tree_json(const RenderTree& tree);

/// word,x,y,z,vx,vy,vz
std::string render_csv(const RenderTree& tree);

std::string render_dot(const RenderTree& tree, Labels labels);

/// Levels as rows, each vertex labelled with the region it creates.
std::string render_svg(const RenderTree& tree, Labels labels);

nlohmann::json river_json(const RiverDescription& river);

}  // namespace shadowdyn
