#include "hamfold/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hamfold {

namespace {

int edge_coord(const HammingGraph& h, const Walk& w, std::size_t k) {
  return h.edge_coordinate(w.at(k), w.at(k + 1));
}

int cyclic_step(int from, int to) { return (to - from + 3) % 3 == 1 ? 1 : -1; }

struct Rewriter {
  Walk cur;
  std::vector<ElementaryMove> moves;

  void apply(const ElementaryMove& m) {
    cur = apply_move(cur, m);
    moves.push_back(m);
  }
};

struct PairStep {
  int position;  // 0 = first interior vertex of the factor, 1 = second
  int value;
};

// Shortest spider path between the interior value pairs of a based fiber
// factor (0, x, y, 0): each step retargets one interior vertex to a value
// outside {0, x, y}. Needs q >= 4; the state graph is connected there.
std::vector<PairStep> fiber_pair_path(int q, std::pair<int, int> from, std::pair<int, int> to) {
  auto encode = [q](std::pair<int, int> s) { return s.first * q + s.second; };
  std::map<int, std::pair<int, PairStep>> parent;  // state -> (prev state, step)
  std::deque<std::pair<int, int>> queue{from};
  parent.emplace(encode(from), std::make_pair(-1, PairStep{0, 0}));
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (std::make_pair(x, y) == to) break;
    for (int position = 0; position < 2; ++position) {
      for (int value = 1; value < q; ++value) {
        if (value == x || value == y) continue;
        std::pair<int, int> next = position == 0 ? std::make_pair(value, y)
                                                 : std::make_pair(x, value);
        if (parent.emplace(encode(next), std::make_pair(encode({x, y}), PairStep{position, value}))
                .second)
          queue.push_back(next);
      }
    }
  }
  if (!parent.count(encode(to)))
    throw Error("fiber factor values unreachable; requires q >= 4");
  std::vector<PairStep> path;
  for (int s = encode(to); parent.at(s).first >= 0; s = parent.at(s).first)
    path.push_back(parent.at(s).second);
  std::reverse(path.begin(), path.end());
  return path;
}

// Number of consecutive coordinate-i edges starting at vertex position p.
std::size_t block_run(const HammingGraph& h, const Walk& w, std::size_t p, int i) {
  std::size_t len = 0;
  while (p + len < w.length() && edge_coord(h, w, p + len) == i) ++len;
  return len;
}

// Rewrites the coordinate-i block starting at vertex position p (a based
// closed excursion in the K_q fiber through the origin) into canonical form:
// a stack of canonical ground walks for q = 3, at most one for q >= 4.
void normalize_block(Rewriter& rw, const HammingGraph& h, int i, std::size_t p) {
  const int q = h.alphabet();
  const VertexId base = rw.cur.at(p);
  auto value_at = [&](std::size_t t) { return h.coordinate_value(rw.cur.at(p + t), i); };
  auto vertex_of = [&](int value) { return h.with_coordinate(base, i, value); };
  for (;;) {
    std::size_t len = block_run(h, rw.cur, p, i);
    bool acted = false;
    for (std::size_t j = 0; j + 2 <= len; ++j) {
      if (rw.cur.at(p + j) == rw.cur.at(p + j + 2)) {
        rw.apply(ElementaryMove::prune(p + j));
        acted = true;
        break;
      }
    }
    if (acted) continue;
    if (len == 0 || q == 3) break;  // q = 3 blocks are backtrack-free rotations
    // Fold a long excursion (> 3 edges between returns to the base value)
    // back through the base; the resulting backtrack is pruned next round.
    std::size_t seg_start = 0;
    for (std::size_t t = 1; t <= len && !acted; ++t) {
      if (value_at(t) != 0) continue;
      if (t - seg_start >= 4) {
        rw.apply(ElementaryMove::spider(p + seg_start + 2, base));
        acted = true;
      }
      seg_start = t;
    }
    if (acted) continue;
    // Only 3-edge factors remain. Adjacent pairs annihilate: the second
    // factor is spidered into the reverse of the first, then pruned away.
    std::size_t factors = len / 3;
    if (factors >= 2) {
      std::pair<int, int> first{value_at(1), value_at(2)};
      std::pair<int, int> second{value_at(4), value_at(5)};
      for (const PairStep& s :
           fiber_pair_path(q, second, {first.second, first.first}))
        rw.apply(ElementaryMove::spider(p + 4 + s.position, vertex_of(s.value)));
      rw.apply(ElementaryMove::prune(p + 2));
      rw.apply(ElementaryMove::prune(p + 1));
      rw.apply(ElementaryMove::prune(p));
      continue;
    }
    if (factors == 1) {
      std::pair<int, int> vals{value_at(1), value_at(2)};
      for (const PairStep& s : fiber_pair_path(q, vals, {1, 2}))
        rw.apply(ElementaryMove::spider(p + 1 + s.position, vertex_of(s.value)));
    }
    break;
  }
}

}  // namespace

std::pair<Walk, ElementaryMove> reorder_changes(const Walk& w, std::size_t k) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("reorder_changes requires a Hamming-graph walk");
  if (k + 1 >= w.length()) throw DomainError("reorder_changes: edge index out of range");
  int i = edge_coord(*h, w, k);
  int j = edge_coord(*h, w, k + 1);
  if (i == j) throw DomainError("reorder_changes: edges change the same coordinate");
  VertexId target = h->with_coordinate(w.at(k), j, h->coordinate_value(w.at(k + 2), j));
  ElementaryMove m = ElementaryMove::spider(k + 1, target);
  return {apply_move(w, m), m};
}

RetractResult retract_triple(const Walk& w, std::size_t k) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("retract_triple requires a Hamming-graph walk");
  if (k + 1 >= w.length()) throw DomainError("retract_triple: edge index out of range");
  int i = edge_coord(*h, w, k);
  if (i != edge_coord(*h, w, k + 1))
    throw DomainError("retract_triple: edges change different coordinates");
  if (w.at(k) == w.at(k + 2)) {
    ElementaryMove m = ElementaryMove::prune(k);
    return {apply_move(w, m), {m}, std::nullopt};
  }
  if (w.at(k) != w.front() || k + 2 >= w.length() || w.at(k + 3) != w.at(k) ||
      edge_coord(*h, w, k + 2) != i)
    throw DomainError("retract_triple: non-cancelling triple must close at the basepoint");
  GroupElement factor = identity(group_of(*h));
  if (factor.presentation.kind == GroupKind::FreeAbelian) {
    int a = h->coordinate_value(w.at(k), i);
    int b = h->coordinate_value(w.at(k + 1), i);
    int c = h->coordinate_value(w.at(k + 2), i);
    factor.vector[i] = (cyclic_step(a, b) + cyclic_step(b, c) + cyclic_step(c, a)) / 3;
  } else if (factor.presentation.kind == GroupKind::ElemAbelian2) {
    factor.vector[i] = 1;
  }
  std::vector<VertexId> v = w.vertices();
  v.erase(v.begin() + k + 1, v.begin() + k + 4);
  return {Walk(w.graph(), std::move(v)), {}, factor};
}

std::vector<ElementaryMove> commute_ground_factors(Walk& w, std::size_t k) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("commute_ground_factors requires a Hamming-graph walk");
  if (k + 6 > w.length()) throw DomainError("commute_ground_factors: range out of bounds");
  if (w.at(k) != w.at(k + 3) || w.at(k + 3) != w.at(k + 6))
    throw DomainError("commute_ground_factors: expected two based factors");
  int i = edge_coord(*h, w, k);
  int j = edge_coord(*h, w, k + 3);
  if (i == j || edge_coord(*h, w, k + 1) != i || edge_coord(*h, w, k + 2) != i ||
      edge_coord(*h, w, k + 4) != j || edge_coord(*h, w, k + 5) != j)
    throw DomainError("commute_ground_factors: expected single-coordinate factors");
  // Each step is the unique corner spider at its position.
  static constexpr std::size_t kOffsets[9] = {3, 2, 4, 1, 5, 3, 2, 4, 3};
  std::vector<ElementaryMove> out;
  for (std::size_t off : kOffsets) {
    auto opts = spider_options(w, k + off);
    if (opts.size() != 1) throw Error("commute_ground_factors: corner spider not unique");
    ElementaryMove m = ElementaryMove::spider(k + off, opts[0]);
    w = apply_move(w, m);
    out.push_back(m);
  }
  return out;
}

MoveCertificate reduce_q2(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h || h->alphabet() != 2) throw DomainError("reduce_q2 requires a walk in H(d,2)");
  if (!w.closed() || w.front() != h->origin())
    throw DomainError("reduce_q2 requires a closed walk at the origin");
  if (!validate_walk(w)) throw DomainError("reduce_q2: not a walk");
  Rewriter rw{w, {}};
  for (int c = h->dimension() - 1; c >= 1; --c) {
    for (;;) {
      std::size_t idx = 0;
      for (std::size_t t = 1; t < rw.cur.vertices().size(); ++t) {
        if (h->coordinate_value(rw.cur.at(t), c) == 1) {
          idx = t;
          break;
        }
      }
      if (idx == 0) break;
      if (h->coordinate_value(rw.cur.at(idx + 1), c) == 0) {
        // the neighbors of the crossing agree, back out of the subcube
        rw.apply(ElementaryMove::prune(idx - 1));
      } else {
        rw.apply(ElementaryMove::spider(idx, h->with_coordinate(rw.cur.at(idx + 1), c, 0)));
      }
    }
  }
  while (rw.cur.length() > 0) rw.apply(ElementaryMove::prune(0));
  return {w, std::move(rw.moves)};
}

ReduceResult reduce(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("reduce requires a Hamming-graph walk");
  if (!w.closed() || w.front() != h->origin())
    throw DomainError("reduce requires a closed walk at the origin");
  if (!validate_walk(w)) throw DomainError("reduce: not a walk");
  GroupElement cls = class_of(w);
  if (h->alphabet() == 1) return {cls, {w, {}}};
  if (h->alphabet() == 2) return {cls, reduce_q2(w)};

  Rewriter rw{w, {}};
  // Sort edges by coordinate with corner spiders; stable, so the per-fiber
  // value sequences are preserved.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < rw.cur.length(); ++k) {
      if (edge_coord(*h, rw.cur, k) > edge_coord(*h, rw.cur, k + 1)) {
        auto [next, m] = reorder_changes(rw.cur, k);
        rw.cur = next;
        rw.moves.push_back(m);
        swapped = true;
      }
    }
  }
  // The sorted walk is a concatenation of based single-coordinate blocks in
  // ascending order; normalize each in place.
  std::size_t p = 0;
  for (int i = 0; i < h->dimension(); ++i) {
    if (p < rw.cur.length() && edge_coord(*h, rw.cur, p) == i) {
      normalize_block(rw, *h, i, p);
      p += block_run(*h, rw.cur, p, i);
    }
  }
  if (rw.cur != canonical_walk(*h, cls))
    throw Error("reduce: result is not the canonical walk");
  return {cls, {w, std::move(rw.moves)}};
}

GroupElement reduce_class_only(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("reduce requires a Hamming-graph walk");
  if (!w.closed() || w.front() != h->origin())
    throw DomainError("reduce requires a closed walk at the origin");
  return class_of(w);
}

}  // namespace hamfold
