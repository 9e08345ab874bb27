#include "hamfold/graph.hpp"

#include <algorithm>
#include <sstream>

namespace hamfold {

std::string coords_to_string(const HVertex& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

HammingGraph::HammingGraph(int d, int q) : d_(d), q_(q) {
  if (d < 1 || q < 1) throw DomainError("HammingGraph requires d >= 1 and q >= 1");
  pow_.resize(d + 1);
  pow_[0] = 1;
  for (int i = 0; i < d; ++i) {
    if (pow_[i] > (1LL << 62) / q) throw DomainError("HammingGraph: q^d overflows");
    pow_[i + 1] = pow_[i] * q;
  }
  n_ = pow_[d];
}

HVertex HammingGraph::coords_of(VertexId v) const {
  if (!valid_vertex(v)) throw DomainError("vertex id out of range");
  HVertex c(d_);
  for (int i = 0; i < d_; ++i) {
    c[i] = static_cast<int>(v % q_);
    v /= q_;
  }
  return c;
}

VertexId HammingGraph::index_of(const HVertex& c) const {
  if (static_cast<int>(c.size()) != d_)
    throw DomainError("vertex has wrong dimension for H(" + std::to_string(d_) + "," +
                      std::to_string(q_) + ")");
  VertexId v = 0;
  for (int i = d_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= q_) throw DomainError("coordinate out of range [0,q)");
    v = v * q_ + c[i];
  }
  return v;
}

bool HammingGraph::adjacent(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) throw DomainError("vertex id out of range");
  int differing = 0;
  for (int i = 0; i < d_ && differing < 2; ++i) {
    if (u % q_ != v % q_) ++differing;
    u /= q_;
    v /= q_;
  }
  return differing == 1;
}

bool HammingGraph::adjacent_coords(const HVertex& u, const HVertex& v) const {
  return adjacent(index_of(u), index_of(v));
}

int HammingGraph::edge_coordinate(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) throw DomainError("vertex id out of range");
  int coord = -1;
  for (int i = 0; i < d_; ++i) {
    if (u % q_ != v % q_) {
      if (coord >= 0) throw DomainError("vertices differ in more than one coordinate");
      coord = i;
    }
    u /= q_;
    v /= q_;
  }
  if (coord < 0) throw DomainError("vertices are equal, not an edge");
  return coord;
}

std::vector<VertexId> HammingGraph::neighbors(VertexId v) const {
  if (!valid_vertex(v)) throw DomainError("vertex id out of range");
  std::vector<VertexId> out;
  out.reserve(degree());
  for (int i = 0; i < d_; ++i) {
    int cur = coordinate_value(v, i);
    for (int x = 0; x < q_; ++x) {
      if (x == cur) continue;
      out.push_back(v + static_cast<long long>(x - cur) * pow_[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int HammingGraph::coordinate_value(VertexId v, int i) const {
  return static_cast<int>((v / pow_[i]) % q_);
}

VertexId HammingGraph::with_coordinate(VertexId v, int i, int value) const {
  if (i < 0 || i >= d_ || value < 0 || value >= q_) throw DomainError("bad coordinate");
  return v + static_cast<long long>(value - coordinate_value(v, i)) * pow_[i];
}

VertexId GeneralGraph::add_vertex(std::string label) {
  if (by_label_.count(label)) throw DomainError("duplicate vertex label: " + label);
  VertexId id = static_cast<VertexId>(labels_.size());
  by_label_.emplace(label, id);
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return id;
}

void GeneralGraph::add_edge(VertexId u, VertexId v) {
  if (!valid_vertex(u) || !valid_vertex(v)) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loops are not allowed");
  if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void GeneralGraph::add_edge(const std::string& u, const std::string& v) {
  add_edge(index_of_label(u), index_of_label(v));
}

void GeneralGraph::finalize() {
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::size_t GeneralGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return twice / 2;
}

bool GeneralGraph::adjacent(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) throw DomainError("vertex id out of range");
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<VertexId>& GeneralGraph::neighbors(VertexId v) const {
  if (!valid_vertex(v)) throw DomainError("vertex id out of range");
  return adj_[v];
}

const std::string& GeneralGraph::label(VertexId v) const {
  if (!valid_vertex(v)) throw DomainError("vertex id out of range");
  return labels_[v];
}

VertexId GeneralGraph::index_of_label(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw DomainError("unknown vertex label: " + label);
  return it->second;
}

bool GeneralGraph::has_label(const std::string& label) const { return by_label_.count(label) > 0; }

GeneralGraph make_general_graph(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GeneralGraph g;
  for (auto& l : labels) g.add_vertex(std::move(l));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

GraphRef::GraphRef(std::shared_ptr<const GeneralGraph> g) : g_(std::move(g)) {
  if (!std::get<std::shared_ptr<const GeneralGraph>>(g_))
    throw DomainError("null graph reference");
}

const GeneralGraph& GraphRef::general() const {
  auto p = std::get_if<std::shared_ptr<const GeneralGraph>>(&g_);
  if (!p) throw DomainError("expected a general graph");
  return **p;
}

std::shared_ptr<const GeneralGraph> GraphRef::general_ptr() const {
  auto p = std::get_if<std::shared_ptr<const GeneralGraph>>(&g_);
  if (!p) throw DomainError("expected a general graph");
  return *p;
}

long long GraphRef::vertex_count() const {
  if (auto* h = hamming()) return h->vertex_count();
  return static_cast<long long>(general().vertex_count());
}

bool GraphRef::valid_vertex(VertexId v) const {
  if (auto* h = hamming()) return h->valid_vertex(v);
  return general().valid_vertex(v);
}

bool GraphRef::adjacent(VertexId u, VertexId v) const {
  if (auto* h = hamming()) return h->adjacent(u, v);
  return general().adjacent(u, v);
}

std::vector<VertexId> GraphRef::neighbors(VertexId v) const {
  if (auto* h = hamming()) return h->neighbors(v);
  return general().neighbors(v);
}

std::vector<VertexId> GraphRef::common_neighbors(VertexId u, VertexId v) const {
  std::vector<VertexId> nu = neighbors(u);
  std::vector<VertexId> nv = neighbors(v);
  std::vector<VertexId> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

std::string GraphRef::vertex_name(VertexId v) const {
  if (auto* h = hamming()) return coords_to_string(h->coords_of(v));
  return general().label(v);
}

bool GraphRef::same_graph(const GraphRef& o) const {
  if (is_hamming() != o.is_hamming()) return false;
  if (auto* h = hamming()) return *h == *o.hamming();
  return general_ptr().get() == o.general_ptr().get();
}

std::vector<VertexId> neighborhood(const GeneralGraph& g, VertexId v) { return g.neighbors(v); }

std::vector<std::array<VertexId, 3>> extended_neighborhood(const GeneralGraph& g, VertexId v) {
  std::vector<std::array<VertexId, 3>> out;
  for (VertexId w : g.neighbors(v))
    for (VertexId x : g.neighbors(w)) out.push_back({v, w, x});
  return out;
}

GeneralGraph materialize(const HammingGraph& g, long long max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw DomainError("materialize: vertex count " + std::to_string(g.vertex_count()) +
                      " exceeds bound " + std::to_string(max_vertices));
  GeneralGraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out.add_vertex(coords_to_string(g.coords_of(v)));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(v))
      if (v < w) out.add_edge(v, w);
  out.finalize();
  return out;
}

}  // namespace hamfold
