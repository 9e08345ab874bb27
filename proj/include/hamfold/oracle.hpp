#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hamfold/walk.hpp"

namespace hamfold {

struct SearchBudget {
  std::size_t max_walk_length = 12;  // anti-prune cap, in edges
  long long max_states = 1'000'000;  // distinct walks discovered
  long long max_depth = std::numeric_limits<long long>::max();  // moves from a seed

  void validate() const;
};

/// Outcome of a reachability search. NotFoundWithinBudget is a semi-decision:
/// it is consistent with inequivalence, never a proof of it.
struct Verdict {
  bool equivalent = false;
  std::optional<MoveCertificate> certificate;  // present iff equivalent
  long long states_explored = 0;
};

/// Breadth-first search over the move graph from w1 towards w2. Certificates
/// are re-verified before being returned. Deterministic: successors are
/// generated prunes first, then spiders by position and target, then
/// anti-prunes by position and neighbor.
Verdict bfs_equivalent(const Walk& w1, const Walk& w2, const SearchBudget& b);

/// All closed walks at `base` of length <= max_len, grouped by mutual move
/// reachability within the budget. Classes are unions of true homotopy
/// classes: a tight budget may fail to merge, but never over-merges. The
/// flood is best-first by walk length (ties by discovery order), so walks
/// that reduce without growing merge before any anti-prune expansion.
std::vector<std::vector<Walk>> enumerate_classes(const GraphRef& g, VertexId base,
                                                 std::size_t max_len, const SearchBudget& b);

}  // namespace hamfold
