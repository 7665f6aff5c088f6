#pragma once

#include <string>
#include <vector>

#include "corepath/gap_poset.hpp"

namespace corepath {

namespace detail {

struct HasseNode {
  Int gap = 0;
  Int col = 0;   // diagonal coordinate, with a two-column break at a == b
  Int row = 0;   // depth from the top element
  bool white = false;
};

inline std::vector<HasseNode> hasse_layout(const CoprimePair& pair, const GapIdeal& ideal) {
  for (Int x : ideal.elements())
    if (!is_gap(x, pair))
      raise(errc::not_a_gap, "ideal contains " + std::to_string(x) + ", which is not a gap");
  const std::vector<Int> all = gaps(pair);
  std::vector<HasseNode> nodes;
  nodes.reserve(all.size());
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const PlaneCoord c = to_plane(*it, pair);
    HasseNode node;
    node.gap = *it;
    node.col = c.b - c.a + (c.a <= c.b ? 1 : 0);
    node.row = c.a + c.b;
    node.white = ideal.contains(*it);
    nodes.push_back(node);
  }
  return nodes;
}

}  // namespace detail

/// Hasse diagram of the gap poset as neato-style DOT with pinned positions.
/// Ideal members are white, the rest black; edges join gaps differing by s
/// or t. Output is byte-stable.
inline std::string render_hasse_dot(const CoprimePair& pair, const GapIdeal& ideal) {
  const auto nodes = detail::hasse_layout(pair, ideal);
  std::string out = "graph hasse {\n";
  out += "  node [shape=circle, style=filled, fixedsize=true, width=0.4];\n";
  for (const auto& node : nodes) {
    out += "  \"" + std::to_string(node.gap) + "\" [pos=\"" + std::to_string(node.col * 40) +
           "," + std::to_string(-node.row * 40) + "!\", fillcolor=\"" +
           (node.white ? "white" : "black") + "\", fontcolor=\"" +
           (node.white ? "black" : "white") + "\"];\n";
  }
  for (const auto& node : nodes) {
    for (Int d : {pair.s, pair.t}) {
      const Int below = node.gap - d;
      if (below >= 1 && is_gap(below, pair))
        out += "  \"" + std::to_string(node.gap) + "\" -- \"" + std::to_string(below) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

/// Same diagram as TikZ.
inline std::string render_hasse_tikz(const CoprimePair& pair, const GapIdeal& ideal) {
  const auto nodes = detail::hasse_layout(pair, ideal);
  std::string out = "\\begin{tikzpicture}[x=0.8cm,y=0.8cm,"
                    "gap/.style={circle,draw=black,minimum size=6.5mm,inner sep=0pt}]\n";
  for (const auto& node : nodes) {
    out += "  \\node[gap,fill=" + std::string(node.white ? "white" : "black") +
           ",text=" + (node.white ? "black" : "white") + "] (n" + std::to_string(node.gap) +
           ") at (" + std::to_string(node.col) + "," + std::to_string(-node.row) + ") {" +
           std::to_string(node.gap) + "};\n";
  }
  for (const auto& node : nodes) {
    for (Int d : {pair.s, pair.t}) {
      const Int below = node.gap - d;
      if (below >= 1 && is_gap(below, pair))
        out += "  \\draw (n" + std::to_string(node.gap) + ") -- (n" + std::to_string(below) +
               ");\n";
    }
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace corepath
