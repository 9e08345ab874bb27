#include "hamfold/dot.hpp"

#include <sstream>

namespace hamfold {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string graph_to_dot(const GeneralGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << quoted(g.label(v)) << ";\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w)
        os << "  " << quoted(g.label(v)) << " -- " << quoted(g.label(w)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const GraphRef& g, const std::string& name, long long max_vertices) {
  if (const HammingGraph* h = g.hamming()) return graph_to_dot(materialize(*h, max_vertices), name);
  return graph_to_dot(g.general(), name);
}

std::string cover_to_dot(const CoverGraph& c) {
  const GeneralGraph& g = *c.graph;
  const long long n = c.base.vertex_count();
  std::ostringstream os;
  os << "graph cover {\n";
  for (std::size_t li = 0; li < c.labels.size(); ++li) {
    os << "  subgraph cluster_" << li << " {\n";
    os << "    label=" << quoted(label_to_string(c.labels[li])) << ";\n";
    for (long long b = 0; b < n; ++b)
      os << "    " << quoted(g.label(static_cast<VertexId>(li) * n + b)) << ";\n";
    os << "  }\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w)
        os << "  " << quoted(g.label(v)) << " -- " << quoted(g.label(w)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hamfold
