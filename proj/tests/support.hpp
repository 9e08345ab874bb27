#pragma once

#include <memory>
#include <random>
#include <vector>

#include "hamfold/graph.hpp"
#include "hamfold/walk.hpp"

namespace hamfold::testsupport {

/// Exact uniform sampling of closed walks at a basepoint: counts_[t][v] is
/// the number of length-t walks from v back to the basepoint, so stepping
/// proportionally to the remaining counts draws uniformly.
class ClosedWalkSampler {
 public:
  ClosedWalkSampler(GraphRef g, VertexId base, std::size_t max_len)
      : g_(std::move(g)), base_(base) {
    const long long n = g_.vertex_count();
    counts_.assign(max_len + 1, std::vector<long long>(n, 0));
    counts_[0][base_] = 1;
    for (std::size_t t = 1; t <= max_len; ++t)
      for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g_.neighbors(v)) counts_[t][v] += counts_[t - 1][w];
  }

  long long count(std::size_t length) const { return counts_[length][base_]; }

  Walk sample(std::size_t length, std::mt19937_64& rng) const {
    if (count(length) == 0) throw DomainError("no closed walk of that length");
    std::vector<VertexId> verts{base_};
    VertexId cur = base_;
    for (std::size_t remaining = length; remaining > 0; --remaining) {
      std::uniform_int_distribution<long long> dist(0, counts_[remaining][cur] - 1);
      long long pick = dist(rng);
      for (VertexId w : g_.neighbors(cur)) {
        long long c = counts_[remaining - 1][w];
        if (pick < c) {
          cur = w;
          break;
        }
        pick -= c;
      }
      verts.push_back(cur);
    }
    return Walk(g_, std::move(verts));
  }

  /// A closed walk of uniformly chosen feasible length in [0, max_len].
  Walk sample_any(std::size_t max_len, std::mt19937_64& rng) const {
    std::vector<std::size_t> feasible;
    for (std::size_t l = 0; l <= max_len; ++l)
      if (count(l) > 0) feasible.push_back(l);
    std::uniform_int_distribution<std::size_t> dist(0, feasible.size() - 1);
    return sample(feasible[dist(rng)], rng);
  }

 private:
  GraphRef g_;
  VertexId base_;
  std::vector<std::vector<long long>> counts_;
};

/// The five-vertex graph of the prune-and-spider walk example: a diamond
/// a-c-e-d with hub c, plus the pendant b on c.
inline std::shared_ptr<const GeneralGraph> prune_example_graph() {
  return std::make_shared<GeneralGraph>(make_general_graph(
      {"a", "b", "c", "d", "e"},
      {{"d", "a"}, {"a", "c"}, {"c", "e"}, {"e", "d"}, {"c", "b"}}));
}

/// Pentagon b-c-d-e-a with an inner vertex b' adjacent to a and c.
inline std::shared_ptr<const GeneralGraph> pentagon_graph() {
  return std::make_shared<GeneralGraph>(make_general_graph(
      {"a", "b", "c", "d", "e", "b'"},
      {{"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"a", "b"}, {"b'", "a"}, {"b'", "c"}}));
}

/// The 12-vertex double cover of the pentagon example: a 10-cycle plus two
/// inner vertices. projection[i] gives the base vertex of cover vertex i.
inline std::shared_ptr<const GeneralGraph> pentagon_double_cover(
    const GeneralGraph& base, std::vector<VertexId>& projection) {
  auto cover = std::make_shared<GeneralGraph>(make_general_graph(
      {"a1", "b1", "c1", "d1", "e1", "b'1", "a2", "b2", "c2", "d2", "e2", "b'2"},
      {{"b1", "c1"},
       {"c1", "d1"},
       {"d1", "e1"},
       {"e1", "a2"},
       {"a2", "b2"},
       {"b2", "c2"},
       {"c2", "d2"},
       {"d2", "e2"},
       {"e2", "a1"},
       {"a1", "b1"},
       {"b'1", "a1"},
       {"b'1", "c1"},
       {"b'2", "a2"},
       {"b'2", "c2"}}));
  projection.clear();
  for (std::size_t v = 0; v < cover->vertex_count(); ++v) {
    std::string l = cover->label(v);
    projection.push_back(base.index_of_label(l.substr(0, l.size() - 1)));
  }
  return cover;
}

/// Cycle graph on n vertices labelled v0..v{n-1}.
inline std::shared_ptr<const GeneralGraph> cycle_graph(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  return std::make_shared<GeneralGraph>(make_general_graph(labels, edges));
}

inline unsigned long long test_seed() {
  if (const char* env = std::getenv("HAMFOLD_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240817ULL;
}

}  // namespace hamfold::testsupport
