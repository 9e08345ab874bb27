#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "hamfold/graph.hpp"
#include "support.hpp"

using namespace hamfold;

namespace {

// Independent edge count: enumerate all tuple pairs and count single-
// coordinate differences directly.
long long brute_edge_count(int d, int q) {
  HammingGraph g(d, q);
  long long edges = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      HVertex cu = g.coords_of(u), cv = g.coords_of(v);
      int diff = 0;
      for (int i = 0; i < d; ++i) diff += cu[i] != cv[i];
      edges += diff == 1;
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("build_hamming basics") {
  HammingGraph g23(2, 3);
  CHECK(g23.vertex_count() == 9);
  for (VertexId v = 0; v < 9; ++v) CHECK(g23.neighbors(v).size() == 4);

  HammingGraph g11(1, 1);
  CHECK(g11.vertex_count() == 1);
  CHECK(g11.neighbors(0).empty());

  HammingGraph g32(3, 2);
  CHECK(g32.vertex_count() == 8);
  for (VertexId v = 0; v < 8; ++v) CHECK(g32.neighbors(v).size() == 3);
  CHECK(brute_edge_count(3, 2) == 8 * 3 / 2);

  CHECK_THROWS_AS(HammingGraph(0, 3), DomainError);
  CHECK_THROWS_AS(HammingGraph(2, 0), DomainError);
}

TEST_CASE("vertex index bijection is little-endian base q") {
  HammingGraph g(2, 3);
  CHECK(g.index_of({1, 0}) == 1);
  CHECK(g.index_of({0, 1}) == 3);
  CHECK(g.index_of({2, 2}) == 8);
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.index_of(g.coords_of(v)) == v);
}

TEST_CASE("adjacency") {
  HammingGraph g23(2, 3);
  CHECK(g23.adjacent_coords({0, 0}, {0, 1}));
  CHECK_FALSE(g23.adjacent(4, 4));

  HammingGraph g22(2, 2);
  CHECK_FALSE(g22.adjacent_coords({0, 0}, {1, 1}));

  CHECK_THROWS_AS(g23.index_of({0, 0, 0}), DomainError);
  CHECK_THROWS_AS(g23.index_of({0, 5}), DomainError);

  std::mt19937_64 rng(testsupport::test_seed());
  for (int trial = 0; trial < 200; ++trial) {
    HammingGraph g(2 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 3));
    VertexId u = static_cast<VertexId>(rng() % g.vertex_count());
    VertexId v = static_cast<VertexId>(rng() % g.vertex_count());
    CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    CHECK_FALSE(g.adjacent(u, u));
  }
}

TEST_CASE("neighborhood") {
  GeneralGraph h22 = materialize(HammingGraph(2, 2));
  auto nb = neighborhood(h22, h22.index_of_label("(0,0)"));
  std::set<std::string> names;
  for (VertexId v : nb) names.insert(h22.label(v));
  CHECK(names == std::set<std::string>{"(0,1)", "(1,0)"});

  GeneralGraph isolated = make_general_graph({"x"}, {});
  CHECK(neighborhood(isolated, 0).empty());

  GeneralGraph h23 = materialize(HammingGraph(2, 3));
  auto nb23 = neighborhood(h23, h23.index_of_label("(0,0)"));
  names.clear();
  for (VertexId v : nb23) names.insert(h23.label(v));
  CHECK(names == std::set<std::string>{"(1,0)", "(2,0)", "(0,1)", "(0,2)"});
}

TEST_CASE("extended_neighborhood") {
  GeneralGraph k2 = make_general_graph({"a", "b"}, {{"a", "b"}});
  auto walks = extended_neighborhood(k2, 0);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0] == std::array<VertexId, 3>{0, 1, 0});

  GeneralGraph h22 = materialize(HammingGraph(2, 2));
  CHECK(extended_neighborhood(h22, 0).size() == 4);

  auto pentagon = testsupport::pentagon_graph();
  VertexId b = pentagon->index_of_label("b");
  auto from_b = extended_neighborhood(*pentagon, b);
  auto has = [&](const char* w, const char* x) {
    std::array<VertexId, 3> want{b, pentagon->index_of_label(w), pentagon->index_of_label(x)};
    return std::find(from_b.begin(), from_b.end(), want) != from_b.end();
  };
  CHECK(has("c", "b'"));
  CHECK(has("a", "b'"));
}

TEST_CASE("materialize") {
  GeneralGraph h22 = materialize(HammingGraph(2, 2));
  CHECK(h22.vertex_count() == 4);
  CHECK(h22.edge_count() == 4);

  GeneralGraph k4 = materialize(HammingGraph(1, 4));
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) CHECK(k4.adjacent(u, v));

  GeneralGraph h23 = materialize(HammingGraph(2, 3));
  CHECK(h23.vertex_count() == 9);
  CHECK(h23.edge_count() == 18);
  CHECK(static_cast<long long>(h23.edge_count()) == brute_edge_count(2, 3));

  CHECK_THROWS_AS(materialize(HammingGraph(2, 3), 5), DomainError);
}

TEST_CASE("materialized graphs agree with hamming adjacency") {
  for (auto [d, q] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
    HammingGraph g(d, q);
    GeneralGraph m = materialize(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(m.adjacent(u, v) == (u != v && g.adjacent(u, v)));
  }
}

TEST_CASE("fibers induce complete graphs") {
  for (auto [d, q] : {std::pair{2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    HammingGraph g(d, q);
    for (int i = 0; i < d; ++i) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.coordinate_value(v, i) != 0) continue;  // one representative per fiber
        for (int a = 0; a < q; ++a)
          for (int b = a + 1; b < q; ++b)
            CHECK(g.adjacent(g.with_coordinate(v, i, a), g.with_coordinate(v, i, b)));
      }
    }
  }
}

TEST_CASE("extended neighborhood size identity") {
  for (auto [d, q] : {std::pair{2, 3}, {2, 2}, {3, 2}}) {
    GeneralGraph m = materialize(HammingGraph(d, q));
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      std::size_t expected = 0;
      for (VertexId w : m.neighbors(static_cast<VertexId>(v))) expected += m.neighbors(w).size();
      CHECK(extended_neighborhood(m, static_cast<VertexId>(v)).size() == expected);
    }
  }
}
