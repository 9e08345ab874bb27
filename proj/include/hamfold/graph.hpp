#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "hamfold/errors.hpp"

namespace hamfold {

using VertexId = std::int64_t;

/// Coordinate tuple of a Hamming-graph vertex.
using HVertex = std::vector<int>;

std::string coords_to_string(const HVertex& v);

/// Default cap on explicit vertex enumeration (materialize, covers).
inline constexpr long long kDefaultMaxVertices = 1'000'000;

/// H(d,q): vertices are the length-d tuples over {0,...,q-1}; two tuples are
/// adjacent when they differ in exactly one coordinate. Vertex ids are the
/// little-endian base-q encoding of the tuple (coordinate 0 least
/// significant), which fixes hashing and file formats.
class HammingGraph {
 public:
  HammingGraph(int d, int q);

  int dimension() const { return d_; }
  int alphabet() const { return q_; }
  long long vertex_count() const { return n_; }
  int degree() const { return d_ * (q_ - 1); }
  VertexId origin() const { return 0; }

  HVertex coords_of(VertexId v) const;
  VertexId index_of(const HVertex& c) const;
  bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }

  bool adjacent(VertexId u, VertexId v) const;
  bool adjacent_coords(const HVertex& u, const HVertex& v) const;

  /// Index of the single differing coordinate of an edge; throws when the
  /// pair is not an edge.
  int edge_coordinate(VertexId u, VertexId v) const;

  std::vector<VertexId> neighbors(VertexId v) const;

  int coordinate_value(VertexId v, int i) const;
  /// Vertex equal to v except coordinate i set to value.
  VertexId with_coordinate(VertexId v, int i, int value) const;

  bool operator==(const HammingGraph& o) const { return d_ == o.d_ && q_ == o.q_; }
  bool operator!=(const HammingGraph& o) const { return !(*this == o); }

 private:
  int d_;
  int q_;
  long long n_;
  std::vector<long long> pow_;  // pow_[i] = q^i
};

/// Finite simple graph: string-labelled vertices, symmetric irreflexive
/// adjacency, neighbor lists kept sorted.
class GeneralGraph {
 public:
  GeneralGraph() = default;

  VertexId add_vertex(std::string label);
  void add_edge(VertexId u, VertexId v);
  void add_edge(const std::string& u, const std::string& v);
  /// Sorts neighbor lists; called automatically by the factory helpers.
  void finalize();

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const;
  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  const std::string& label(VertexId v) const;
  VertexId index_of_label(const std::string& label) const;
  bool has_label(const std::string& label) const;
  bool valid_vertex(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < labels_.size();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
  std::unordered_map<std::string, VertexId> by_label_;
};

GeneralGraph make_general_graph(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges);

/// Non-owning view over either graph kind, used by walks. Hamming graphs are
/// copied by value (two ints); general graphs are shared.
class GraphRef {
 public:
  GraphRef(HammingGraph g) : g_(std::move(g)) {}
  GraphRef(std::shared_ptr<const GeneralGraph> g);

  bool is_hamming() const { return std::holds_alternative<HammingGraph>(g_); }
  const HammingGraph* hamming() const { return std::get_if<HammingGraph>(&g_); }
  const GeneralGraph& general() const;
  std::shared_ptr<const GeneralGraph> general_ptr() const;

  long long vertex_count() const;
  bool valid_vertex(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Common neighbors of u and v, sorted.
  std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const;
  std::string vertex_name(VertexId v) const;

  /// Same underlying graph: Hamming graphs compare by (d,q), general graphs
  /// by object identity.
  bool same_graph(const GraphRef& o) const;

 private:
  std::variant<HammingGraph, std::shared_ptr<const GeneralGraph>> g_;
};

/// N(v): the adjacency set.
std::vector<VertexId> neighborhood(const GeneralGraph& g, VertexId v);

/// N2(v): all length-2 walks (v, w, x) with v ~ w, w ~ x.
std::vector<std::array<VertexId, 3>> extended_neighborhood(const GeneralGraph& g, VertexId v);

/// Explicit vertex/edge lists for H(d,q). Labels are the printed tuples,
/// ids coincide with the Hamming ids.
GeneralGraph materialize(const HammingGraph& g, long long max_vertices = kDefaultMaxVertices);

}  // namespace hamfold
