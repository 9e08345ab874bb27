#include "hamfold/cover.hpp"

#include <algorithm>
#include <sstream>

namespace hamfold {

namespace {

long long floor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Row-style Hermite normal form: echelon rows, positive pivots, entries above
// each pivot reduced into [0, pivot).
void hermite_normal_form(std::vector<Label>& rows, int d, std::vector<int>& pivot_cols) {
  std::size_t r = 0;
  for (int c = 0; c < d && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        long long q = rows[r][c] / rows[i][c];
        for (int t = 0; t < d; ++t) rows[r][t] -= q * rows[i][t];
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] < 0)
      for (int t = 0; t < d; ++t) rows[r][t] = -rows[r][t];
    for (std::size_t i = 0; i < r; ++i) {
      long long q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (int t = 0; t < d; ++t) rows[i][t] -= q * rows[r][t];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
}

void gf2_rref(std::vector<Label>& rows, int d, std::vector<int>& pivot_cols) {
  for (auto& row : rows)
    for (auto& x : row) x = ((x % 2) + 2) % 2;
  std::size_t r = 0;
  for (int c = 0; c < d && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] == 1)
        for (int t = 0; t < d; ++t) rows[i][t] ^= rows[r][t];
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  // drop all-zero rows left by cancellation
  std::vector<Label> kept;
  for (auto& row : rows)
    if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; }))
      kept.push_back(row);
  rows = std::move(kept);
}

Label add_labels(Label a, const Label& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

std::string label_to_string(const Label& l) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) os << ',';
    os << l[i];
  }
  os << ')';
  return os.str();
}

Subgroup::Subgroup(GroupPresentation p, std::vector<GroupElement> generators)
    : pres_(p), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.presentation != pres_) throw DomainError("generator presentation mismatch");
  if (pres_.kind == GroupKind::Trivial) {
    index_ = 1;
    return;
  }
  const int d = pres_.rank;
  std::vector<Label> rows;
  for (const auto& g : gens_) rows.push_back(g.vector);
  if (pres_.kind == GroupKind::FreeAbelian) {
    hermite_normal_form(rows, d, pivot_cols_);
    basis_ = std::move(rows);
    if (static_cast<int>(pivot_cols_.size()) == d) {
      long long idx = 1;
      for (std::size_t r = 0; r < basis_.size(); ++r) idx *= basis_[r][pivot_cols_[r]];
      index_ = idx;
    }
  } else {
    gf2_rref(rows, d, pivot_cols_);
    basis_ = std::move(rows);
    if (d - static_cast<int>(pivot_cols_.size()) > 62) throw DomainError("rank too large");
    index_ = 1LL << (d - static_cast<int>(pivot_cols_.size()));
  }
}

long long Subgroup::index() const {
  if (!index_) throw DomainError("subgroup has infinite index");
  return *index_;
}

Label Subgroup::reduce(Label v) const {
  if (pres_.kind == GroupKind::Trivial) return {};
  if (static_cast<int>(v.size()) != pres_.rank) throw DomainError("label has wrong rank");
  if (pres_.kind == GroupKind::ElemAbelian2) {
    for (auto& x : v) x = ((x % 2) + 2) % 2;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (v[pivot_cols_[r]] == 1)
        for (int t = 0; t < pres_.rank; ++t) v[t] ^= basis_[r][t];
    return v;
  }
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    long long q = floor_div(v[pivot_cols_[r]], basis_[r][pivot_cols_[r]]);
    if (q != 0)
      for (int t = 0; t < pres_.rank; ++t) v[t] -= q * basis_[r][t];
  }
  return v;
}

bool Subgroup::contains(const GroupElement& e) const {
  if (e.presentation != pres_) throw DomainError("presentation mismatch");
  if (pres_.kind == GroupKind::Trivial) return true;
  Label r = reduce(e.vector);
  return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

std::vector<Label> Subgroup::cosets() const {
  if (!finite_index()) throw DomainError("subgroup has infinite index; supply a window");
  return cosets_windowed(0);
}

std::vector<Label> Subgroup::cosets_windowed(int window) const {
  if (window < 0) throw DomainError("window must be nonnegative");
  if (pres_.kind == GroupKind::Trivial) return {Label{}};
  const int d = pres_.rank;
  // Per-column value ranges: pivot columns run below their pivot, free
  // columns over the window box. Every vector of the box is canonical.
  std::vector<long long> lo(d), hi(d);
  for (int c = 0; c < d; ++c) {
    lo[c] = -window;
    hi[c] = window;
  }
  if (pres_.kind == GroupKind::ElemAbelian2)
    for (int c = 0; c < d; ++c) {
      lo[c] = 0;
      hi[c] = 1;
    }
  for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
    lo[pivot_cols_[r]] = 0;
    hi[pivot_cols_[r]] = (pres_.kind == GroupKind::ElemAbelian2)
                             ? 0
                             : basis_[r][pivot_cols_[r]] - 1;
  }
  long long total = 1;
  for (int c = 0; c < d; ++c) {
    total *= hi[c] - lo[c] + 1;
    if (total > 4'000'000) throw DomainError("coset enumeration too large");
  }
  std::vector<Label> out;
  out.reserve(total);
  Label cur(d);
  for (int c = 0; c < d; ++c) cur[c] = lo[c];
  for (;;) {
    out.push_back(cur);
    int c = 0;
    while (c < d && cur[c] == hi[c]) {
      cur[c] = lo[c];
      ++c;
    }
    if (c == d) break;
    ++cur[c];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup subgroup_from_generators(const GroupPresentation& p,
                                  const std::vector<GroupElement>& gens) {
  return Subgroup(p, gens);
}

Label gauge_step(const HammingGraph& g, VertexId u, VertexId v) {
  GroupPresentation p = group_of(g);
  if (p.kind == GroupKind::Trivial) return {};
  Label step(g.dimension(), 0);
  int i = g.edge_coordinate(u, v);
  if (p.kind == GroupKind::FreeAbelian) {
    int from = g.coordinate_value(u, i);
    int to = g.coordinate_value(v, i);
    if (from == 2 && to == 0)
      step[i] = 1;
    else if (from == 0 && to == 2)
      step[i] = -1;
  } else {
    step[i] = 1;
  }
  return step;
}

VertexId CoverGraph::vertex(VertexId base_vertex, const Label& label) const {
  long long li = label_index(subgroup.reduce(label));
  if (li < 0) throw DomainError("label is not part of the cover");
  return li * base.vertex_count() + base_vertex;
}

const Label& CoverGraph::label_of(VertexId cover_vertex) const {
  return labels[cover_vertex / base.vertex_count()];
}

long long CoverGraph::label_index(const Label& l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) return -1;
  return it - labels.begin();
}

CoverGraph build_cover(const HammingGraph& g, const Subgroup& s, std::optional<int> window,
                       long long max_vertices) {
  if (s.presentation() != group_of(g))
    throw DomainError("subgroup presentation does not match the graph");
  std::vector<Label> labels;
  if (s.finite_index())
    labels = s.cosets();
  else {
    if (!window) throw DomainError("infinite-index subgroup requires a window");
    labels = s.cosets_windowed(*window);
  }
  const long long n = g.vertex_count();
  const long long total = n * static_cast<long long>(labels.size());
  if (total > max_vertices)
    throw DomainError("cover has " + std::to_string(total) + " vertices, exceeding bound " +
                      std::to_string(max_vertices));

  auto graph = std::make_shared<GeneralGraph>();
  for (const Label& l : labels)
    for (VertexId b = 0; b < n; ++b)
      graph->add_vertex(coords_to_string(g.coords_of(b)) + "@" + label_to_string(l));

  auto find_label = [&](const Label& l) -> long long {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) return -1;
    return it - labels.begin();
  };

  std::vector<int> incident(total, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v < u) continue;
      Label step = gauge_step(g, u, v);
      for (std::size_t li = 0; li < labels.size(); ++li) {
        Label target = s.reduce(add_labels(labels[li], step));
        long long lj = find_label(target);
        if (lj < 0) continue;
        VertexId cu = static_cast<long long>(li) * n + u;
        VertexId cv = lj * n + v;
        graph->add_edge(cu, cv);
        ++incident[cu];
        ++incident[cv];
      }
    }
  }
  graph->finalize();

  CoverGraph c{g, s, window, std::move(labels), graph, {}, {}};
  c.projection.resize(total);
  c.complete.resize(total);
  const bool windowed = !s.finite_index();
  for (long long cv = 0; cv < total; ++cv) {
    c.projection[cv] = cv % n;
    // Only windows clip lifts; finite covers always claim completeness so
    // verification never skips a vertex.
    c.complete[cv] = !windowed || incident[cv] == g.degree() ? 1 : 0;
  }
  return c;
}

VerifyReport verify_cover(const GeneralGraph& cover, const GeneralGraph& base,
                          std::span<const VertexId> projection, std::span<const char> check) {
  if (projection.size() != cover.vertex_count()) return {false, "projection size mismatch"};
  std::vector<char> hit(base.vertex_count(), 0);
  for (std::size_t cv = 0; cv < cover.vertex_count(); ++cv) {
    VertexId bv = projection[cv];
    if (!base.valid_vertex(bv)) return {false, "projection target out of range"};
    hit[bv] = 1;
    for (VertexId cw : cover.neighbors(static_cast<VertexId>(cv))) {
      if (projection[cv] == projection[cw])
        return {false, "edge collapses onto a vertex: " + cover.label(cv)};
      if (!base.adjacent(projection[cv], projection[cw]))
        return {false, "edge does not project to a base edge: " + cover.label(cv)};
    }
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    return {false, "projection is not onto the base vertices"};
  std::size_t checked = 0;
  for (std::size_t cv = 0; cv < cover.vertex_count(); ++cv) {
    if (!check.empty() && !check[cv]) continue;
    ++checked;
    std::vector<VertexId> projected;
    for (VertexId cw : cover.neighbors(static_cast<VertexId>(cv)))
      projected.push_back(projection[cw]);
    std::sort(projected.begin(), projected.end());
    if (std::adjacent_find(projected.begin(), projected.end()) != projected.end())
      return {false, "neighborhood map not injective at " + cover.label(cv)};
    if (projected != base.neighbors(projection[cv]))
      return {false, "neighborhood map not onto at " + cover.label(cv)};
  }
  return {true, "checked " + std::to_string(checked) + " of " +
                    std::to_string(cover.vertex_count()) + " vertices"};
}

VerifyReport verify_homotopy_cover(const GeneralGraph& cover, const GeneralGraph& base,
                                   std::span<const VertexId> projection,
                                   std::span<const char> check) {
  VerifyReport cov = verify_cover(cover, base, projection, check);
  if (!cov.ok) return cov;
  std::size_t checked = 0;
  for (std::size_t cv = 0; cv < cover.vertex_count(); ++cv) {
    if (!check.empty() && !check[cv]) continue;
    ++checked;
    auto lifted = extended_neighborhood(cover, static_cast<VertexId>(cv));
    // The projected length-2 walks must be exactly N2 of the base vertex.
    std::vector<std::pair<VertexId, VertexId>> projected;
    std::vector<VertexId> endpoints;
    for (const auto& walk2 : lifted) {
      projected.emplace_back(projection[walk2[1]], projection[walk2[2]]);
      endpoints.push_back(walk2[2]);
    }
    std::sort(projected.begin(), projected.end());
    if (std::adjacent_find(projected.begin(), projected.end()) != projected.end())
      return {false, "length-2 walk map not injective at " + cover.label(cv)};
    std::vector<std::pair<VertexId, VertexId>> expected;
    for (const auto& walk2 : extended_neighborhood(base, projection[cv]))
      expected.emplace_back(walk2[1], walk2[2]);
    std::sort(expected.begin(), expected.end());
    if (projected != expected)
      return {false, "length-2 walk map not onto at " + cover.label(cv)};
    // Endpoint respect: distinct lifted endpoints must project to distinct
    // base vertices.
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    std::vector<VertexId> images;
    for (VertexId x : endpoints) images.push_back(projection[x]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      return {false, "same-endpoint structure collapses at " + cover.label(cv)};
  }
  return {true, "checked " + std::to_string(checked) + " of " +
                    std::to_string(cover.vertex_count()) + " vertices"};
}

VerifyReport verify_cover(const CoverGraph& c) {
  GeneralGraph base = materialize(c.base);
  return verify_cover(*c.graph, base, c.projection, c.complete);
}

VerifyReport verify_homotopy_cover(const CoverGraph& c) {
  GeneralGraph base = materialize(c.base);
  // Length-2 walks need complete lifts one step out as well.
  std::vector<char> check(c.complete.begin(), c.complete.end());
  for (std::size_t cv = 0; cv < check.size(); ++cv) {
    if (!check[cv]) continue;
    for (VertexId cw : c.graph->neighbors(static_cast<VertexId>(cv)))
      if (!c.complete[cw]) {
        check[cv] = 0;
        break;
      }
  }
  return verify_homotopy_cover(*c.graph, base, c.projection, check);
}

Walk lift_walk(const CoverGraph& c, const Walk& w, const Label& start_label) {
  const HammingGraph* h = w.graph().hamming();
  if (!h || *h != c.base) throw DomainError("walk is not over the cover's base graph");
  if (!validate_walk(w)) throw DomainError("lift_walk: not a walk");
  Label cur = c.subgroup.reduce(start_label);
  long long li = c.label_index(cur);
  if (li < 0) throw BudgetError("start label lies outside the cover window");
  std::vector<VertexId> verts{li * h->vertex_count() + w.at(0)};
  for (std::size_t k = 0; k < w.length(); ++k) {
    cur = c.subgroup.reduce(add_labels(cur, gauge_step(*h, w.at(k), w.at(k + 1))));
    li = c.label_index(cur);
    if (li < 0) throw BudgetError("cover window exhausted during lift");
    verts.push_back(li * h->vertex_count() + w.at(k + 1));
  }
  return Walk(GraphRef(c.graph), std::move(verts));
}

Label monodromy(const CoverGraph& c, const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h || *h != c.base) throw DomainError("walk is not over the cover's base graph");
  if (!w.closed()) throw DomainError("monodromy requires a closed walk");
  GroupPresentation p = group_of(*h);
  Label disp = p.kind == GroupKind::Trivial ? Label{} : Label(h->dimension(), 0);
  for (std::size_t k = 0; k < w.length(); ++k)
    disp = add_labels(std::move(disp), gauge_step(*h, w.at(k), w.at(k + 1)));
  return c.subgroup.reduce(disp);
}

}  // namespace hamfold
