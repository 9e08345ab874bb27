#pragma once

#include <optional>
#include <utility>

#include "hamfold/group.hpp"
#include "hamfold/walk.hpp"

namespace hamfold {

/// Swaps the coordinates changed by edges k and k+1 (which must differ) via
/// the unique corner spider at position k+1. Applying it twice at the same
/// position restores the walk.
std::pair<Walk, ElementaryMove> reorder_changes(const Walk& w, std::size_t k);

struct RetractResult {
  Walk walk;
  std::vector<ElementaryMove> moves;
  std::optional<GroupElement> factor;
};

/// Collapses two consecutive changes in the same coordinate (edges k, k+1).
/// A cancelling pair (a -> b -> a) is pruned. Otherwise the triple must close
/// at the walk's basepoint (v_k is the basepoint and a third coordinate-i
/// edge returns to it); the ground-walk factor's class is split off and the
/// returned walk is the remainder after the factor.
RetractResult retract_triple(const Walk& w, std::size_t k);

/// Rewrites two adjacent based ground-walk factors (coordinates i at edges
/// k..k+2, then j at edges k+3..k+5, with v_k the shared basepoint) into the
/// opposite order through nine corner spiders, each the unique option at its
/// position.
std::vector<ElementaryMove> commute_ground_factors(Walk& w, std::size_t k);

/// Drives a closed based walk in H(d,2) to the length-0 walk: for each
/// coordinate from the last down, the first vertex carrying a 1 there is
/// pruned away or spidered into the lower subcube, then the remaining
/// single-coordinate walk is pruned flat.
MoveCertificate reduce_q2(const Walk& w);

struct ReduceResult {
  GroupElement cls;
  MoveCertificate certificate;
};

/// Normal-form reduction of a closed walk based at the origin: emits a
/// verified move sequence from w to canonical_walk(class_of(w)).
///
/// Pipeline: corner spiders (reorder_changes) bubble-sort the edges by
/// coordinate, splitting the walk into based single-coordinate blocks in
/// ascending order; within each block backtracks are pruned, long excursions
/// are folded back through the base value, and for q >= 4 leftover factor
/// pairs annihilate while a final odd factor is spidered onto the canonical
/// values. Moves never lengthen the walk.
ReduceResult reduce(const Walk& w);

/// Class only, skipping certificate construction.
GroupElement reduce_class_only(const Walk& w);

}  // namespace hamfold
