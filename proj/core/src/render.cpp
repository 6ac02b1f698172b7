#include "shadowdyn/render.hpp"

#include <algorithm>
#include <sstream>

#include "shadowdyn/contfrac.hpp"
#include "shadowdyn/error.hpp"

namespace shadowdyn {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "dot") return Format::Dot;
  if (text == "svg") return Format::Svg;
  throw Error(Errc::Parse, "unknown format '" + std::string(text) + "'");
}

Labels parse_labels(std::string_view text) {
  if (text == "values") return Labels::Values;
  if (text == "farey") return Labels::Farey;
  if (text == "both") return Labels::Both;
  throw Error(Errc::Parse, "unknown label mode '" + std::string(text) + "'");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
    case Format::Svg: return "svg";
  }
  return "json";
}

nlohmann::json to_json(const BigInt& x) { return to_string(x); }

nlohmann::json to_json(const DualInt& x) {
  return nlohmann::json{{"re", to_string(x.re)}, {"sh", to_string(x.sh)}};
}

nlohmann::json to_json(const RegionVector& v) {
  return nlohmann::json::array({to_string(v.u), to_string(v.v)});
}

nlohmann::json to_json(const ContinuedFraction& cf) {
  nlohmann::json pre = nlohmann::json::array();
  for (const auto& t : cf.preperiod) pre.push_back(to_string(t));
  nlohmann::json per = nlohmann::json::array();
  for (const auto& t : cf.period) per.push_back(to_string(t));
  return {{"head", to_string(cf.head)}, {"preperiod", pre}, {"period", per}, {"text", cf.str()}};
}

nlohmann::json tree_json(const RenderTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : tree.nodes) {
    nodes.push_back({
        {"word", n.word.str()},
        {"triple", nlohmann::json::array({n.values[0], n.values[1], n.values[2]})},
        {"vectors", nlohmann::json::array({to_json(n.vectors[0]), to_json(n.vectors[1]),
                                           to_json(n.vectors[2])})},
    });
  }
  return nodes;
}

std::string render_csv(const RenderTree& tree) {
  std::ostringstream out;
  out << "word,x,y,z,vx,vy,vz\n";
  for (const auto& n : tree.nodes) {
    out << n.word.str() << ',' << n.text[0] << ',' << n.text[1] << ',' << n.text[2];
    for (const auto& v : n.vectors) out << ',' << v.farey();
    out << '\n';
  }
  return out.str();
}

namespace {

std::string label_for(const RenderNode& n, int which, Labels labels) {
  switch (labels) {
    case Labels::Values: return n.text[which];
    case Labels::Farey: return n.vectors[which].farey();
    case Labels::Both: return n.text[which] + " [" + n.vectors[which].farey() + "]";
  }
  return n.text[which];
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_id(const RenderNode& n) { return n.word.empty() ? "root" : "n" + n.word.str(); }

}  // namespace

std::string render_dot(const RenderTree& tree, Labels labels) {
  std::ostringstream out;
  out << "digraph topograph {\n";
  out << "  label=\"" << escape_dot(tree.title) << "\";\n";
  out << "  node [shape=box, fontsize=10];\n";
  out << "  edge [fontsize=9];\n";
  for (const auto& n : tree.nodes) {
    // root shows all three regions; below it each vertex adds one region
    const std::string label =
        n.word.empty() ? escape_dot(label_for(n, 0, labels) + " | " + label_for(n, 1, labels)) +
                             "\\n" + escape_dot(label_for(n, 2, labels))
                       : escape_dot(label_for(n, 2, labels));
    out << "  " << node_id(n) << " [label=\"" << label << "\"";
    if (!n.word.empty()) out << ", tooltip=\"" << n.word.str() << "\"";
    out << "];\n";
  }
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    const auto& parent = tree.nodes[(i - 1) / 2];
    out << "  " << node_id(parent) << " -> " << node_id(n) << " [label=\""
        << static_cast<char>(n.word[n.word.size() - 1]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const RenderTree& tree, Labels labels) {
  constexpr int kSlot = 110;
  constexpr int kRow = 70;
  constexpr int kMargin = 40;
  const std::size_t leaves = std::size_t{1} << tree.depth;
  const std::size_t width = leaves * kSlot + 2 * kMargin;
  const std::size_t height = static_cast<std::size_t>(tree.depth + 1) * kRow + 2 * kMargin;

  auto position = [&](std::size_t index) {
    const int level = Tree<int>::level_of(index);
    const std::size_t first = (std::size_t{1} << level) - 1;
    const std::size_t span = leaves >> level;  // slots per node on this level
    const std::size_t x = kMargin + (index - first) * span * kSlot + span * kSlot / 2;
    const std::size_t y = kMargin + static_cast<std::size_t>(level) * kRow + kRow / 2;
    return std::pair{x, y};
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  out << "<title>" << escape_xml(tree.title) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    auto [x1, y1] = position((i - 1) / 2);
    auto [x2, y2] = position(i);
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"#888\"/>\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    auto [x, y] = position(i);
    out << "<g><title>" << (n.word.empty() ? std::string("root") : n.word.str()) << "</title>";
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>";
    if (n.word.empty()) {
      out << "<text x=\"" << x << "\" y=\"" << y - 10 << "\" text-anchor=\"middle\">"
          << escape_xml(label_for(n, 0, labels) + " | " + label_for(n, 1, labels)) << "</text>";
    }
    out << "<text x=\"" << x << "\" y=\"" << y + 16 << "\" text-anchor=\"middle\">"
        << escape_xml(label_for(n, 2, labels)) << "</text></g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

nlohmann::json river_json(const RiverDescription& river) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : river.period_states) states.push_back(to_json(s));
  const auto& f = river.start_frame;
  return {
      {"start", to_json(river.start)},
      {"start_vectors", nlohmann::json::array({to_json(f.region(Region::X)),
                                               to_json(f.region(Region::Y)),
                                               to_json(f.region(Region::Z))})},
      {"period", river.period.str()},
      {"period_length", river.period.size()},
      {"period_states", states},
      {"approach_steps", river.approach_steps},
  };
}

}  // namespace shadowdyn
