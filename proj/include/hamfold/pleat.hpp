#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamfold/graph.hpp"

namespace hamfold {

/// All ordered pairs (v, w), v != w, with N(v) contained in N(w). Open
/// neighborhoods throughout.
std::vector<std::pair<VertexId, VertexId>> dominated_pairs(const GeneralGraph& g);

/// A graph is stiff (a pleat) when it has no dominated pair.
bool is_pleat(const GeneralGraph& g);

struct FoldStep {
  std::string removed;
  std::string dominated_by;
};

struct FoldResult {
  GeneralGraph graph;
  std::vector<FoldStep> log;
};

/// Repeatedly deletes the lexicographically smallest dominated vertex (ties
/// on the dominator broken the same way) until the graph is stiff.
FoldResult fold_to_pleat(const GeneralGraph& g);

}  // namespace hamfold
