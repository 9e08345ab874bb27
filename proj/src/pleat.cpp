#include "hamfold/pleat.hpp"

#include <algorithm>

namespace hamfold {

std::vector<std::pair<VertexId, VertexId>> dominated_pairs(const GeneralGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const VertexId n = static_cast<VertexId>(g.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    const auto& nv = g.neighbors(v);
    for (VertexId w = 0; w < n; ++w) {
      if (v == w) continue;
      const auto& nw = g.neighbors(w);
      if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) out.emplace_back(v, w);
    }
  }
  return out;
}

bool is_pleat(const GeneralGraph& g) { return dominated_pairs(g).empty(); }

FoldResult fold_to_pleat(const GeneralGraph& g) {
  // Work on label sets; rebuilding the graph per step keeps indices stable.
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w) edges.emplace_back(g.label(v), g.label(w));

  FoldResult result{make_general_graph(labels, edges), {}};
  for (;;) {
    auto pairs = dominated_pairs(result.graph);
    if (pairs.empty()) break;
    std::pair<std::string, std::string> pick{"", ""};
    for (const auto& [v, w] : pairs) {
      std::pair<std::string, std::string> cand{result.graph.label(v), result.graph.label(w)};
      if (pick.first.empty() || cand < pick) pick = cand;
    }
    result.log.push_back({pick.first, pick.second});
    std::vector<std::string> next_labels;
    for (const auto& l : labels)
      if (l != pick.first) next_labels.push_back(l);
    std::vector<std::pair<std::string, std::string>> next_edges;
    for (const auto& [a, b] : edges)
      if (a != pick.first && b != pick.first) next_edges.emplace_back(a, b);
    labels = std::move(next_labels);
    edges = std::move(next_edges);
    result.graph = make_general_graph(labels, edges);
  }
  return result;
}

}  // namespace hamfold
