#include "ctw/dot_export.hpp"

#include <ostream>
#include <stdexcept>

namespace ctw {

namespace {

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void decomposition_to_dot(const Graph& g, const Decomposition& d, std::ostream& out,
                          const std::vector<VertexSet>* grown) {
  if (grown && static_cast<int>(grown->size()) != d.node_count())
    throw std::invalid_argument("one grown set per tree node expected");

  out << "graph decomposition {\n"
      << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int t = 0; t < d.node_count(); ++t) {
    out << "  n" << t << " [label=<t" << t << "<br/>{";
    bool first = true;
    for (int v : d.bag(t).vertices()) {
      if (!first) out << ", ";
      first = false;
      bool added = grown && (*grown)[static_cast<size_t>(t)].contains(v);
      if (added) out << "<font color=\"red\">";
      out << html_escape(g.label(v));
      if (added) out << "</font>";
    }
    out << "}>];\n";
  }
  for (auto [u, v] : d.tree_edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
}

void graph_to_dot(const Graph& g, std::ostream& out) {
  out << "graph g {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
}

}  // namespace ctw
