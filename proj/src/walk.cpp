#include "hamfold/walk.hpp"

#include <algorithm>
#include <sstream>

namespace hamfold {

Walk::Walk(GraphRef graph, std::vector<VertexId> vertices)
    : graph_(std::move(graph)), verts_(std::move(vertices)) {
  if (verts_.empty()) throw DomainError("a walk needs at least one vertex");
  for (VertexId v : verts_)
    if (!graph_.valid_vertex(v)) throw DomainError("walk vertex out of range");
}

Walk Walk::from_coords(const HammingGraph& g, const std::vector<HVertex>& coords) {
  std::vector<VertexId> ids;
  ids.reserve(coords.size());
  for (const auto& c : coords) ids.push_back(g.index_of(c));
  return Walk(GraphRef(g), std::move(ids));
}

Walk Walk::from_labels(std::shared_ptr<const GeneralGraph> g,
                       const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(g->index_of_label(l));
  return Walk(GraphRef(std::move(g)), std::move(ids));
}

Walk Walk::trivial(GraphRef graph, VertexId at) { return Walk(std::move(graph), {at}); }

std::string Walk::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ' ';
    os << graph_.vertex_name(verts_[i]);
  }
  return os.str();
}

bool validate_walk(const Walk& w) {
  const auto& v = w.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!w.graph().adjacent(v[i], v[i + 1])) return false;
  return true;
}

Walk concat(const Walk& a, const Walk& b) {
  if (!a.graph().same_graph(b.graph())) throw DomainError("concat: walks on different graphs");
  if (a.back() != b.front()) throw DomainError("concat: endpoint mismatch");
  std::vector<VertexId> v = a.vertices();
  v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
  return Walk(a.graph(), std::move(v));
}

Walk inverse(const Walk& w) {
  std::vector<VertexId> v(w.vertices().rbegin(), w.vertices().rend());
  return Walk(w.graph(), std::move(v));
}

std::vector<VertexId> spider_options(const Walk& w, std::size_t k) {
  if (k == 0 || k >= w.length()) throw DomainError("spider position must be interior");
  const VertexId prev = w.at(k - 1);
  const VertexId cur = w.at(k);
  const VertexId next = w.at(k + 1);
  if (const HammingGraph* h = w.graph().hamming()) {
    int ci = h->edge_coordinate(prev, cur);
    int cj = h->edge_coordinate(cur, next);
    if (ci == cj) {
      // Same-coordinate triple: replacements stay in the fiber and avoid the
      // values of all three vertices (two values when prev == next).
      std::vector<VertexId> out;
      int a = h->coordinate_value(prev, ci);
      int b = h->coordinate_value(cur, ci);
      int c = h->coordinate_value(next, ci);
      for (int x = 0; x < h->alphabet(); ++x) {
        if (x == a || x == b || x == c) continue;
        out.push_back(h->with_coordinate(cur, ci, x));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  std::vector<VertexId> out = w.graph().common_neighbors(prev, next);
  out.erase(std::remove(out.begin(), out.end(), cur), out.end());
  return out;
}

Walk apply_move(const Walk& w, const ElementaryMove& m) {
  std::vector<VertexId> v = w.vertices();
  const std::size_t n = w.length();
  switch (m.kind) {
    case MoveKind::Prune: {
      if (m.pos + 2 > n) throw DomainError("prune position out of range");
      if (v[m.pos] != v[m.pos + 2]) throw DomainError("prune requires v_k = v_{k+2}");
      v.erase(v.begin() + m.pos + 1, v.begin() + m.pos + 3);
      break;
    }
    case MoveKind::AntiPrune: {
      if (m.pos > n) throw DomainError("anti-prune position out of range");
      if (!w.graph().valid_vertex(m.vertex) || !w.graph().adjacent(m.vertex, v[m.pos]))
        throw DomainError("anti-prune vertex must be adjacent to v_k");
      v.insert(v.begin() + m.pos + 1, {m.vertex, v[m.pos]});
      break;
    }
    case MoveKind::Spider: {
      if (m.pos == 0 || m.pos >= n) throw DomainError("spider position must be interior");
      auto opts = spider_options(w, m.pos);
      if (!std::binary_search(opts.begin(), opts.end(), m.vertex))
        throw DomainError("spider target is not an allowed replacement");
      v[m.pos] = m.vertex;
      break;
    }
  }
  return Walk(w.graph(), std::move(v));
}

std::vector<ElementaryMove> enumerate_moves(const Walk& w, std::size_t max_walk_length) {
  std::vector<ElementaryMove> out;
  const auto& v = w.vertices();
  const std::size_t n = w.length();
  for (std::size_t k = 0; k + 2 <= n; ++k)
    if (v[k] == v[k + 2]) out.push_back(ElementaryMove::prune(k));
  for (std::size_t k = 1; k < n; ++k)
    for (VertexId x : spider_options(w, k)) out.push_back(ElementaryMove::spider(k, x));
  if (n + 2 <= max_walk_length) {
    for (std::size_t k = 0; k <= n; ++k)
      for (VertexId x : w.graph().neighbors(v[k]))
        out.push_back(ElementaryMove::anti_prune(k, x));
  }
  return out;
}

ReplayResult verify_certificate(const MoveCertificate& c) {
  ReplayResult r{true, c.initial, 0, ""};
  if (!validate_walk(r.final)) {
    return {false, c.initial, 0, "initial walk is not a walk"};
  }
  const VertexId start = c.initial.front();
  const VertexId end = c.initial.back();
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    try {
      r.final = apply_move(r.final, c.moves[i]);
    } catch (const DomainError& e) {
      return {false, r.final, i, e.what()};
    }
    if (r.final.front() != start || r.final.back() != end)
      return {false, r.final, i, "endpoints changed"};
  }
  return r;
}

std::vector<ChangeRecord> change_sequence(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("change_sequence requires a Hamming-graph walk");
  std::vector<ChangeRecord> out;
  out.reserve(w.length());
  for (std::size_t i = 0; i + 1 < w.vertices().size(); ++i) {
    int c = h->edge_coordinate(w.at(i), w.at(i + 1));
    out.push_back({c, h->coordinate_value(w.at(i), c), h->coordinate_value(w.at(i + 1), c)});
  }
  return out;
}

std::vector<long long> change_counts(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("change_counts requires a Hamming-graph walk");
  std::vector<long long> counts(h->dimension(), 0);
  for (const auto& rec : change_sequence(w)) ++counts[rec.coordinate];
  return counts;
}

Walk ground_walk(const HammingGraph& g, int i, int a, int b) {
  if (i < 0 || i >= g.dimension()) throw DomainError("ground walk coordinate out of range");
  if (g.alphabet() < 3)
    throw DomainError("ground walks need q >= 3: no closed walk of length 3 exists");
  if (a == b || a <= 0 || b <= 0 || a >= g.alphabet() || b >= g.alphabet())
    throw DomainError("ground walk values must be distinct, nonzero, and below q");
  VertexId o = g.origin();
  return Walk(GraphRef(g),
              {o, g.with_coordinate(o, i, a), g.with_coordinate(o, i, b), o});
}

}  // namespace hamfold
