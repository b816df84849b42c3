#include "brauer/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace brauer {

std::string render_tree_dot(const BrauerTree& tree) {
  tree.validate();
  std::ostringstream out;
  out << "digraph T {\n";
  out << "  edge [dir=none];\n";
  if (!tree.real_stem.empty()) {
    out << "  { rank=same;";
    for (const VertexId& v : tree.real_stem) out << " \"" << v << "\";";
    out << " }\n";
  }
  for (const VertexId& v : tree.vertex_ids()) {
    out << "  \"" << v << "\" [shape=circle";
    if (v == tree.exceptional) {
      out << ", style=filled, fillcolor=black";
    }
    out << "];\n";
  }
  std::vector<TreeEdge> edges = tree.edges;
  std::sort(edges.begin(), edges.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.id < b.id; });
  for (const TreeEdge& e : edges) {
    out << "  \"" << e.ends[0] << "\" -> \"" << e.ends[1] << "\" [label=\""
        << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_tube_dot(const StarParams& p) {
  p.validate();
  SelfDualCensus census = self_dual_census(p);
  const int em = p.max_length();
  std::ostringstream out;
  out << "digraph Tube {\n";
  out << "  node [shape=circle];\n";
  for (int level = em; level >= 1; --level) {
    const std::vector<int>& cols = census.columns[level - 1];
    out << "  { rank=same;";
    for (int c = 0; c < p.e; ++c) {
      out << " \"" << c << "," << level << "\";";
    }
    out << " }\n";
    for (int c = 0; c < p.e; ++c) {
      TubePosition pos = make_position(p, c, level);
      bool self_dual = std::find(cols.begin(), cols.end(), c) != cols.end();
      bool hook = pos == census.hooks[0] || pos == census.hooks[1];
      out << "  \"" << c << "," << level << "\" [label=\"(" << c << ","
          << level << ")\"";
      if (hook) {
        out << ", shape=doublecircle, style=filled, fillcolor=gray";
      } else if (self_dual) {
        out << ", style=filled, fillcolor=gray";
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_tube_ascii(const StarParams& p) {
  p.validate();
  SelfDualCensus census = self_dual_census(p);
  const int em = p.max_length();
  size_t width = std::to_string(em).size();
  std::ostringstream out;
  out << std::string(width, ' ') << "  ";
  for (int c = 0; c < p.e; ++c) out << " " << c % 10;
  out << "\n";
  for (int level = em; level >= 1; --level) {
    const std::vector<int>& cols = census.columns[level - 1];
    std::string label = std::to_string(level);
    out << std::string(width - label.size(), ' ') << label << " |";
    for (int c = 0; c < p.e; ++c) {
      TubePosition pos = make_position(p, c, level);
      char mark = '.';
      if (pos == census.hooks[0] || pos == census.hooks[1]) {
        mark = 'H';
      } else if (std::find(cols.begin(), cols.end(), c) != cols.end()) {
        mark = '*';
      }
      out << ' ' << mark;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace brauer
