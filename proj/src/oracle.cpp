#include "hamfold/oracle.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_map>

namespace hamfold {

namespace {

using Seq = std::vector<std::int32_t>;

Seq to_seq(const Walk& w) {
  Seq s;
  s.reserve(w.vertices().size());
  for (VertexId v : w.vertices()) s.push_back(static_cast<std::int32_t>(v));
  return s;
}

Walk to_walk(const GraphRef& g, const Seq& s) {
  return Walk(g, std::vector<VertexId>(s.begin(), s.end()));
}

// Walks pack into one word as a base-V number with a leading sentinel digit,
// so variable lengths stay injective. Requires 2 * V^(maxVertices) < 2^63.
bool packable(long long v_count, std::size_t max_vertices) {
  if (v_count < 2) return false;
  unsigned long long limit = 1ULL << 62;
  unsigned long long x = 2;
  for (std::size_t i = 0; i < max_vertices; ++i) {
    if (x > limit / static_cast<unsigned long long>(v_count)) return false;
    x *= static_cast<unsigned long long>(v_count);
  }
  return true;
}

std::uint64_t pack(const Seq& s, std::uint64_t v_count) {
  std::uint64_t key = 1;
  for (std::int32_t v : s) key = key * v_count + static_cast<std::uint64_t>(v);
  return key;
}

Seq unpack(std::uint64_t key, std::uint64_t v_count) {
  Seq s;
  while (key > 1) {
    s.push_back(static_cast<std::int32_t>(key % v_count));
    key /= v_count;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// Open-addressed uint64 -> uint32 map; key 0 is the empty slot (real packed
// keys are always >= 2).
class PackedMap {
 public:
  explicit PackedMap(std::size_t initial = 1 << 16) { rehash(initial); }

  std::uint32_t* find(std::uint64_t key) {
    std::size_t i = mix(key) & mask_;
    while (keys_[i]) {
      if (keys_[i] == key) return &vals_[i];
      i = (i + 1) & mask_;
    }
    return nullptr;
  }

  std::pair<std::uint32_t*, bool> insert(std::uint64_t key, std::uint32_t val) {
    if ((size_ + 1) * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
    std::size_t i = mix(key) & mask_;
    while (keys_[i]) {
      if (keys_[i] == key) return {&vals_[i], false};
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
    vals_[i] = val;
    ++size_;
    return {&vals_[i], true};
  }

  std::size_t size() const { return size_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }

  void rehash(std::size_t capacity) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_vals = std::move(vals_);
    keys_.assign(capacity, 0);
    vals_.assign(capacity, 0);
    mask_ = capacity - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i]) insert(old_keys[i], old_vals[i]);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

struct SeqHash {
  std::size_t operator()(const Seq& s) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Successors in the canonical order, each paired with the generating move.
template <typename F>
void for_each_successor(const GraphRef& g, const Seq& w, std::size_t max_walk_length, F&& emit) {
  const std::size_t n = w.size() - 1;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    if (w[k] == w[k + 2]) {
      Seq next(w);
      next.erase(next.begin() + k + 1, next.begin() + k + 3);
      emit(next, ElementaryMove::prune(k));
    }
  }
  if (n >= 2) {
    Walk cur = to_walk(g, w);
    for (std::size_t k = 1; k < n; ++k) {
      for (VertexId x : spider_options(cur, k)) {
        Seq next(w);
        next[k] = static_cast<std::int32_t>(x);
        emit(next, ElementaryMove::spider(k, x));
      }
    }
  }
  if (n + 2 <= max_walk_length) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (VertexId x : g.neighbors(w[k])) {
        Seq next;
        next.reserve(w.size() + 2);
        next.insert(next.end(), w.begin(), w.begin() + k + 1);
        next.push_back(static_cast<std::int32_t>(x));
        next.push_back(w[k]);
        next.insert(next.end(), w.begin() + k + 1, w.end());
        emit(next, ElementaryMove::anti_prune(k, x));
      }
    }
  }
}

// All closed walks at base with at most max_len edges, in lexicographic
// order of their vertex sequences.
void enumerate_closed_walks(const GraphRef& g, VertexId base, std::size_t max_len,
                            std::vector<Seq>& out) {
  Seq cur{static_cast<std::int32_t>(base)};
  auto rec = [&](auto&& self) -> void {
    if (cur.back() == static_cast<std::int32_t>(base)) out.push_back(cur);
    if (cur.size() - 1 == max_len) return;
    for (VertexId x : g.neighbors(cur.back())) {
      cur.push_back(static_cast<std::int32_t>(x));
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

void SearchBudget::validate() const {
  if (max_walk_length == 0 || max_states <= 0 || max_depth <= 0)
    throw DomainError("search budget fields must be positive");
}

Verdict bfs_equivalent(const Walk& w1, const Walk& w2, const SearchBudget& b) {
  b.validate();
  if (!w1.graph().same_graph(w2.graph()))
    throw DomainError("bfs_equivalent: walks on different graphs");
  if (w1.front() != w2.front() || w1.back() != w2.back())
    throw DomainError("bfs_equivalent: endpoint mismatch");
  if (w1.length() > b.max_walk_length || w2.length() > b.max_walk_length)
    throw DomainError("bfs_equivalent: walk longer than the anti-prune cap");
  if (!validate_walk(w1) || !validate_walk(w2)) throw DomainError("bfs_equivalent: not a walk");

  const GraphRef& g = w1.graph();
  struct Node {
    Seq walk;
    std::uint32_t parent;
    ElementaryMove move;
    long long depth;
  };
  std::vector<Node> arena;
  std::unordered_map<Seq, std::uint32_t, SeqHash> visited;
  const Seq start = to_seq(w1);
  const Seq target = to_seq(w2);
  arena.push_back({start, 0, ElementaryMove::prune(0), 0});
  visited.emplace(start, 0);

  auto make_certificate = [&](std::uint32_t idx) {
    std::vector<ElementaryMove> moves;
    for (std::uint32_t i = idx; i != 0; i = arena[i].parent) moves.push_back(arena[i].move);
    std::reverse(moves.begin(), moves.end());
    MoveCertificate cert{w1, std::move(moves)};
    ReplayResult replay = verify_certificate(cert);
    if (!replay.ok || replay.final != w2) throw Error("bfs_equivalent: certificate replay failed");
    return cert;
  };

  if (start == target) return {true, make_certificate(0), 1};

  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t idx = queue.front();
    queue.pop_front();
    if (arena[idx].depth >= b.max_depth) continue;
    const Seq cur = arena[idx].walk;  // arena may reallocate during expansion
    bool found = false;
    std::uint32_t found_idx = 0;
    for_each_successor(g, cur, b.max_walk_length,
                       [&](const Seq& next, const ElementaryMove& m) {
                         if (found) return;
                         if (static_cast<long long>(visited.size()) >= b.max_states &&
                             !visited.count(next))
                           return;
                         auto [it, inserted] =
                             visited.emplace(next, static_cast<std::uint32_t>(arena.size()));
                         if (!inserted) return;
                         arena.push_back({next, idx, m, arena[idx].depth + 1});
                         if (next == target) {
                           found = true;
                           found_idx = it->second;
                         } else {
                           queue.push_back(it->second);
                         }
                       });
    if (found)
      return {true, make_certificate(found_idx), static_cast<long long>(visited.size())};
    if (static_cast<long long>(visited.size()) >= b.max_states) break;
  }
  return {false, std::nullopt, static_cast<long long>(visited.size())};
}

std::vector<std::vector<Walk>> enumerate_classes(const GraphRef& g, VertexId base,
                                                 std::size_t max_len, const SearchBudget& b) {
  b.validate();
  if (!g.valid_vertex(base)) throw DomainError("enumerate_classes: unknown base vertex");
  if (max_len > b.max_walk_length)
    throw DomainError("enumerate_classes: max_len exceeds the anti-prune cap");

  std::vector<Seq> seeds;
  enumerate_closed_walks(g, base, max_len, seeds);
  if (static_cast<long long>(seeds.size()) > b.max_states)
    throw BudgetError("enumerate_classes: " + std::to_string(seeds.size()) +
                      " closed walks exceed the state budget");
  UnionFind uf(seeds.size());

  struct Entry {
    std::uint32_t length;
    std::uint32_t seq;
    std::uint32_t depth;
    std::uint64_t key;   // packed mode; fallback arena index otherwise
    bool operator>(const Entry& o) const {
      return length != o.length ? length > o.length : seq > o.seq;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::uint32_t seq = 0;

  const bool use_packed = packable(g.vertex_count(), b.max_walk_length + 1);
  const std::uint64_t v_count = static_cast<std::uint64_t>(g.vertex_count());
  PackedMap packed_visited;
  std::unordered_map<Seq, std::uint32_t, SeqHash> plain_visited;
  std::vector<Seq> plain_arena;  // fallback only

  long long states = 0;
  constexpr std::uint32_t kInserted = UINT32_MAX;
  constexpr std::uint32_t kBudget = UINT32_MAX - 1;
  // Records s with class cls; returns kInserted for a fresh state, kBudget
  // when the state budget blocks it, and the stored class otherwise.
  auto visit = [&](const Seq& s, std::uint32_t cls, std::uint32_t depth) -> std::uint32_t {
    if (use_packed) {
      std::uint64_t key = pack(s, v_count);
      if (std::uint32_t* old = packed_visited.find(key)) return *old;
      if (states >= b.max_states) return kBudget;
      packed_visited.insert(key, cls);
      ++states;
      frontier.push({static_cast<std::uint32_t>(s.size()), seq++, depth, key});
      return kInserted;
    }
    auto it = plain_visited.find(s);
    if (it != plain_visited.end()) return it->second;
    if (states >= b.max_states) return kBudget;
    std::uint64_t node = plain_arena.size();
    plain_visited.emplace(s, cls);
    plain_arena.push_back(s);
    ++states;
    frontier.push({static_cast<std::uint32_t>(s.size()), seq++, depth, node});
    return kInserted;
  };

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::uint32_t prior = visit(seeds[i], static_cast<std::uint32_t>(i), 0);
    if (prior != kInserted && prior != kBudget)
      uf.unite(static_cast<std::uint32_t>(i), prior);
  }

  while (!frontier.empty()) {
    Entry e = frontier.top();
    frontier.pop();
    Seq cur = use_packed ? unpack(e.key, v_count) : plain_arena[e.key];
    std::uint32_t cls;
    if (use_packed)
      cls = uf.find(*packed_visited.find(e.key));
    else
      cls = uf.find(plain_visited.at(cur));
    if (static_cast<long long>(e.depth) >= b.max_depth) continue;
    for_each_successor(g, cur, b.max_walk_length,
                       [&](const Seq& next, const ElementaryMove&) {
                         std::uint32_t prior = visit(next, cls, e.depth + 1);
                         if (prior != kInserted && prior != kBudget) uf.unite(cls, prior);
                       });
  }

  std::vector<std::vector<Walk>> classes;
  std::unordered_map<std::uint32_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
    auto [it, inserted] = root_to_class.emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(to_walk(g, seeds[i]));
  }
  return classes;
}

}  // namespace hamfold
