#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamfold/graph.hpp"

namespace hamfold {

/// A finite vertex sequence v0..vn over a graph; n edges. Walks are values:
/// moves return fresh walks and never mutate their input.
class Walk {
 public:
  Walk(GraphRef graph, std::vector<VertexId> vertices);

  static Walk from_coords(const HammingGraph& g, const std::vector<HVertex>& coords);
  static Walk from_labels(std::shared_ptr<const GeneralGraph> g,
                          const std::vector<std::string>& labels);
  static Walk trivial(GraphRef graph, VertexId at);

  const GraphRef& graph() const { return graph_; }
  const std::vector<VertexId>& vertices() const { return verts_; }
  std::size_t length() const { return verts_.size() - 1; }  // edge count
  VertexId front() const { return verts_.front(); }
  VertexId back() const { return verts_.back(); }
  VertexId at(std::size_t i) const { return verts_[i]; }
  bool closed() const { return verts_.front() == verts_.back(); }

  std::string to_string() const;

  bool operator==(const Walk& o) const {
    return graph_.same_graph(o.graph_) && verts_ == o.verts_;
  }
  bool operator!=(const Walk& o) const { return !(*this == o); }

 private:
  GraphRef graph_;
  std::vector<VertexId> verts_;
};

enum class MoveKind { Prune, AntiPrune, Spider };

/// One elementary homotopy step.
///   Prune at k:      requires v_k = v_{k+2}; deletes v_{k+1}, v_{k+2}.
///   AntiPrune at k:  inserts (vertex, v_k) after v_k, vertex ~ v_k.
///   Spider at k:     0 < k < n; replaces v_k by vertex, adjacent to both
///                    walk-neighbors. Endpoints are never moved.
struct ElementaryMove {
  MoveKind kind;
  std::size_t pos = 0;
  VertexId vertex = -1;  // AntiPrune and Spider only

  static ElementaryMove prune(std::size_t k) { return {MoveKind::Prune, k, -1}; }
  static ElementaryMove anti_prune(std::size_t k, VertexId w) {
    return {MoveKind::AntiPrune, k, w};
  }
  static ElementaryMove spider(std::size_t k, VertexId w) { return {MoveKind::Spider, k, w}; }

  bool operator==(const ElementaryMove& o) const {
    return kind == o.kind && pos == o.pos && (kind == MoveKind::Prune || vertex == o.vertex);
  }
};

/// A replayable, locally checkable move sequence from an initial walk.
struct MoveCertificate {
  Walk initial;
  std::vector<ElementaryMove> moves;
};

/// Result of replaying a certificate with full validity checks.
struct ReplayResult {
  bool ok = false;
  Walk final;
  std::size_t failed_at = 0;  // index of the first invalid move when !ok
  std::string reason;
};

/// One edge's coordinate change in a Hamming walk.
struct ChangeRecord {
  int coordinate;
  int from_value;
  int to_value;

  bool operator==(const ChangeRecord& o) const {
    return coordinate == o.coordinate && from_value == o.from_value && to_value == o.to_value;
  }
};

/// True iff consecutive vertices are adjacent.
bool validate_walk(const Walk& w);

Walk concat(const Walk& a, const Walk& b);
Walk inverse(const Walk& w);

/// Spider targets at interior position k: vertices x != v_k adjacent to both
/// v_{k-1} and v_{k+1}. On Hamming graphs a same-coordinate triple keeps the
/// replacement inside that coordinate's fiber; a cross-fiber replacement at a
/// backtrack factors as a prune plus an anti-prune, so the generated
/// equivalence is unchanged while per-coordinate change counts stay conserved.
std::vector<VertexId> spider_options(const Walk& w, std::size_t k);

Walk apply_move(const Walk& w, const ElementaryMove& m);

/// All moves valid on w, in the canonical order: prunes, then spiders by
/// position then target, then anti-prunes by position then neighbor.
std::vector<ElementaryMove> enumerate_moves(const Walk& w, std::size_t max_walk_length);

ReplayResult verify_certificate(const MoveCertificate& c);

/// Per-edge coordinate changes; Hamming walks only.
std::vector<ChangeRecord> change_sequence(const Walk& w);
/// Number of changes per coordinate; entries sum to length(w).
std::vector<long long> change_counts(const Walk& w);

/// The based closed walk 0 -> a_i -> b_i -> 0 moving only in coordinate i.
Walk ground_walk(const HammingGraph& g, int i, int a = 1, int b = 2);

}  // namespace hamfold
