#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "hamfold/cover.hpp"
#include "support.hpp"

using namespace hamfold;

namespace {

Subgroup make_subgroup(const HammingGraph& g, const std::vector<std::vector<long long>>& gens) {
  GroupPresentation p = group_of(g);
  std::vector<GroupElement> elems;
  for (const auto& v : gens) elems.push_back(make_element(p, v));
  return subgroup_from_generators(p, elems);
}

}  // namespace

TEST_CASE("subgroup normalization and index") {
  HammingGraph g23(2, 3);
  Subgroup two_h = make_subgroup(g23, {{2, 0}, {0, 1}});
  CHECK(two_h.finite_index());
  CHECK(two_h.index() == 2);

  Subgroup trivial3 = make_subgroup(g23, {});
  CHECK_FALSE(trivial3.finite_index());

  HammingGraph g24(2, 4);
  Subgroup trivial4 = make_subgroup(g24, {});
  CHECK(trivial4.index() == 4);

  Subgroup six = make_subgroup(g23, {{3, 0}, {0, 2}});
  CHECK(six.index() == 6);

  // normalized basis spans the generators
  Subgroup messy = make_subgroup(g23, {{2, 2}, {4, 2}, {0, 2}});
  CHECK(messy.contains(make_element(group_of(g23), {2, 2})));
  CHECK(messy.contains(make_element(group_of(g23), {4, 2})));
  CHECK(messy.contains(make_element(group_of(g23), {2, 0})));
  CHECK_FALSE(messy.contains(make_element(group_of(g23), {1, 0})));
  CHECK(messy.index() == 4);

  CHECK_THROWS_AS(
      subgroup_from_generators(group_of(g23),
                               {make_element(group_of(g24), {1, 0})}),
      DomainError);
}

TEST_CASE("coset reduction is canonical") {
  HammingGraph g23(2, 3);
  Subgroup s = make_subgroup(g23, {{3, 0}, {0, 2}});
  std::mt19937_64 rng(testsupport::test_seed() + 7);
  for (int trial = 0; trial < 200; ++trial) {
    Label v{static_cast<long long>(rng() % 21) - 10, static_cast<long long>(rng() % 21) - 10};
    Label r = s.reduce(v);
    CHECK(s.reduce(r) == r);
    CHECK(r[0] >= 0);
    CHECK(r[0] < 3);
    CHECK(r[1] >= 0);
    CHECK(r[1] < 2);
    // v and r differ by a subgroup element
    CHECK(s.contains(make_element(group_of(g23), {v[0] - r[0], v[1] - r[1]})));
  }
  CHECK(s.cosets().size() == 6);
}

TEST_CASE("subgroup arithmetic on random generator sets") {
  std::mt19937_64 rng(testsupport::test_seed() + 17);
  for (int trial = 0; trial < 150; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    int q = rng() % 2 == 0 ? 3 : 4;
    HammingGraph g(d, q);
    GroupPresentation p = group_of(g);
    std::vector<std::vector<long long>> gens;
    int n_gens = static_cast<int>(rng() % 4);
    for (int k = 0; k < n_gens; ++k) {
      std::vector<long long> v(d);
      for (auto& x : v) x = static_cast<long long>(rng() % 9) - 4;
      gens.push_back(v);
    }
    Subgroup s = make_subgroup(g, gens);
    for (const auto& v : gens) CHECK(s.contains(make_element(p, v)));
    Label v(d);
    for (auto& x : v) x = static_cast<long long>(rng() % 15) - 7;
    if (p.kind == GroupKind::ElemAbelian2)
      for (auto& x : v) x = ((x % 2) + 2) % 2;
    Label r = s.reduce(v);
    CHECK(s.reduce(r) == r);
    Label diff(d);
    for (int i = 0; i < d; ++i) diff[i] = v[i] - r[i];
    CHECK(s.contains(make_element(p, diff)));
    if (s.finite_index()) {
      auto cosets = s.cosets();
      CHECK(static_cast<long long>(cosets.size()) == s.index());
      CHECK(std::adjacent_find(cosets.begin(), cosets.end()) == cosets.end());
      for (const auto& c : cosets) CHECK(s.reduce(c) == c);
    }
  }
}

TEST_CASE("build_cover sizes") {
  HammingGraph g24(2, 4);
  CoverGraph uc = build_cover(g24, make_subgroup(g24, {}));
  CHECK(uc.graph->vertex_count() == 64);
  CHECK(uc.fibre() == 4);

  HammingGraph g23(2, 3);
  CoverGraph two_h = build_cover(g23, make_subgroup(g23, {{2, 0}, {0, 1}}));
  CHECK(two_h.graph->vertex_count() == 18);
  CHECK(two_h.fibre() == 2);

  CoverGraph identity_cover = build_cover(g23, make_subgroup(g23, {{1, 0}, {0, 1}}));
  CHECK(identity_cover.graph->vertex_count() == 9);
  CHECK(identity_cover.fibre() == 1);
  CHECK(verify_cover(identity_cover).ok);
  CHECK(verify_homotopy_cover(identity_cover).ok);

  CHECK_THROWS_AS(build_cover(g23, make_subgroup(g23, {})), DomainError);
}

TEST_CASE("fibre sizes equal the subgroup index at every base vertex") {
  HammingGraph g23(2, 3);
  CoverGraph c = build_cover(g23, make_subgroup(g23, {{3, 0}, {0, 2}}));
  CHECK(c.graph->vertex_count() == 54);
  CHECK(c.fibre() == 6);
  std::map<VertexId, int> fibre_count;
  for (VertexId cv = 0; cv < static_cast<VertexId>(c.graph->vertex_count()); ++cv)
    ++fibre_count[c.projection[cv]];
  for (auto [bv, n] : fibre_count) CHECK(n == 6);
  CHECK(verify_cover(c).ok);
  CHECK(verify_homotopy_cover(c).ok);
}

TEST_CASE("finite quotient covers pass both verifiers") {
  HammingGraph g24(2, 4);
  for (auto gens : {std::vector<std::vector<long long>>{},
                    {{1, 0}},
                    {{1, 1}},
                    {{1, 0}, {0, 1}}}) {
    CoverGraph c = build_cover(g24, make_subgroup(g24, gens));
    CHECK(verify_cover(c).ok);
    CHECK(verify_homotopy_cover(c).ok);
  }
}

TEST_CASE("windowed universal cover of H(2,3)") {
  HammingGraph g23(2, 3);
  CoverGraph uc = build_cover(g23, make_subgroup(g23, {}), 2);
  CHECK(uc.graph->vertex_count() == 9 * 25);
  CHECK(verify_cover(uc).ok);
  CHECK(verify_homotopy_cover(uc).ok);
  // interior vertices exist and boundary vertices are flagged
  long long complete = 0;
  for (char f : uc.complete) complete += f;
  CHECK(complete > 0);
  CHECK(complete < static_cast<long long>(uc.complete.size()));

  Walk u1 = ground_walk(g23, 0);
  Walk lifted = lift_walk(uc, u1, Label{0, 0});
  CHECK_FALSE(lifted.closed());
  CHECK(monodromy(uc, u1) == Label{1, 0});

  Walk u2 = ground_walk(g23, 1);
  CHECK(monodromy(uc, u2) == Label{0, 1});
}

TEST_CASE("the strip cover: one generator killed, one free") {
  HammingGraph g23(2, 3);
  CoverGraph strip = build_cover(g23, make_subgroup(g23, {{0, 1}}), 3);
  CHECK(verify_cover(strip).ok);
  CHECK(verify_homotopy_cover(strip).ok);
  Walk u1 = ground_walk(g23, 0);
  Walk u2 = ground_walk(g23, 1);
  CHECK_FALSE(lift_walk(strip, u1, Label{0, 0}).closed());
  CHECK(lift_walk(strip, u2, Label{0, 0}).closed());
}

TEST_CASE("lifting over the two-block cover") {
  HammingGraph g23(2, 3);
  CoverGraph c = build_cover(g23, make_subgroup(g23, {{2, 0}, {0, 1}}));
  Walk u1 = ground_walk(g23, 0);
  CHECK_FALSE(lift_walk(c, u1, Label{0, 0}).closed());
  CHECK(lift_walk(c, concat(u1, u1), Label{0, 0}).closed());
  Walk trivial = Walk::trivial(GraphRef(g23), g23.origin());
  CHECK(lift_walk(c, trivial, Label{0, 0}).length() == 0);
}

TEST_CASE("lift closure iff the class lies in the subgroup") {
  std::mt19937_64 rng(testsupport::test_seed() + 8);
  for (auto [d, q] : {std::pair{2, 3}, {2, 4}}) {
    HammingGraph g(d, q);
    testsupport::ClosedWalkSampler sampler(GraphRef(g), g.origin(), 9);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::vector<long long>> gens;
      int n_gens = static_cast<int>(rng() % 3);
      for (int i = 0; i < n_gens; ++i) {
        std::vector<long long> v(d);
        for (auto& x : v) x = static_cast<long long>(rng() % 7) - 3;
        gens.push_back(v);
      }
      Subgroup s = make_subgroup(g, gens);
      CoverGraph c = s.finite_index() ? build_cover(g, s)
                                      : build_cover(g, s, 12, 4'000'000);
      Walk w = sampler.sample_any(9, rng);
      bool closed = lift_walk(c, w, s.reduce(Label(d, 0))).closed();
      CHECK(closed == s.contains(class_of(w)));
    }
  }
}

TEST_CASE("monodromy is invariant under elementary moves") {
  std::mt19937_64 rng(testsupport::test_seed() + 9);
  HammingGraph g(2, 3);
  CoverGraph c = build_cover(g, make_subgroup(g, {{2, 0}, {0, 1}}));
  testsupport::ClosedWalkSampler sampler(GraphRef(g), g.origin(), 8);
  for (int trial = 0; trial < 60; ++trial) {
    Walk w = sampler.sample_any(8, rng);
    Label m = monodromy(c, w);
    for (int step = 0; step < 15; ++step) {
      auto moves = enumerate_moves(w, 12);
      if (moves.empty()) break;
      w = apply_move(w, moves[rng() % moves.size()]);
      CHECK(monodromy(c, w) == m);
    }
  }
}

TEST_CASE("gauge cocycle over fiber triangles and cross 4-cycles") {
  for (auto [d, q] : {std::pair{2, 3}, {2, 4}}) {
    HammingGraph g(d, q);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (int i = 0; i < d; ++i) {
        int vi = g.coordinate_value(v, i);
        // triangles inside the coordinate-i fiber through v
        for (int a = 0; a < q; ++a) {
          for (int b = 0; b < q; ++b) {
            if (a == vi || b == vi || a == b) continue;
            VertexId x = g.with_coordinate(v, i, a);
            VertexId y = g.with_coordinate(v, i, b);
            Label sum(d, 0);
            for (auto [s, t] : {std::pair{v, x}, {x, y}, {y, v}}) {
              Label step = gauge_step(g, s, t);
              for (int k = 0; k < d; ++k) sum[k] += step[k];
            }
            if (q == 3) {
              CHECK((sum[i] == 1 || sum[i] == -1));
            } else {
              CHECK(((sum[i] % 2) + 2) % 2 == 1);
            }
            for (int k = 0; k < d; ++k)
              if (k != i) CHECK(sum[k] == 0);
          }
        }
        // 4-cycles spanning two coordinates
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          int vj = g.coordinate_value(v, j);
          VertexId a = g.with_coordinate(v, i, (vi + 1) % q);
          VertexId b = g.with_coordinate(a, j, (vj + 1) % q);
          VertexId cvert = g.with_coordinate(v, j, (vj + 1) % q);
          Label sum(d, 0);
          for (auto [s, t] :
               {std::pair{v, a}, {a, b}, {b, cvert}, {cvert, v}}) {
            Label step = gauge_step(g, s, t);
            for (int k = 0; k < d; ++k) sum[k] += step[k];
          }
          for (int k = 0; k < d; ++k)
            if (q == 3)
              CHECK(sum[k] == 0);
            else
              CHECK(sum[k] % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("the pentagon double cover is a homotopy cover") {
  auto base = testsupport::pentagon_graph();
  std::vector<VertexId> projection;
  auto cover = testsupport::pentagon_double_cover(*base, projection);
  CHECK(cover->vertex_count() == 12);
  CHECK(verify_cover(*cover, *base, projection).ok);
  CHECK(verify_homotopy_cover(*cover, *base, projection).ok);
}

TEST_CASE("a cover that is not a homotopy cover: C8 over C4") {
  auto base = testsupport::cycle_graph(4);
  auto cover = testsupport::cycle_graph(8);
  std::vector<VertexId> projection;
  for (int i = 0; i < 8; ++i) projection.push_back(i % 4);
  CHECK(verify_cover(*cover, *base, projection).ok);
  VerifyReport hr = verify_homotopy_cover(*cover, *base, projection);
  CHECK_FALSE(hr.ok);
  CHECK(hr.detail.find("endpoint") != std::string::npos);
}

TEST_CASE("the mod-2 double cover of K3 is the homotopy double cover") {
  // Applying the order-2 gauge to K3 (every edge flips the bit) yields the
  // 6-cycle; both predicates come out true, matching the quotient by the
  // squared generator.
  auto base = std::make_shared<GeneralGraph>(
      make_general_graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}}));
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s)
    for (int v = 0; v < 3; ++v) labels.push_back(std::to_string(v) + "@" + std::to_string(s));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int s = 0; s < 2; ++s)
    for (int v = 0; v < 3; ++v)
      for (int w = v + 1; w < 3; ++w)
        edges.emplace_back(std::to_string(v) + "@" + std::to_string(s),
                           std::to_string(w) + "@" + std::to_string(1 - s));
  auto cover = std::make_shared<GeneralGraph>(make_general_graph(labels, edges));
  std::vector<VertexId> projection;
  for (std::size_t cv = 0; cv < cover->vertex_count(); ++cv)
    projection.push_back(base->index_of_label(cover->label(cv).substr(0, 1)));
  CHECK(verify_cover(*cover, *base, projection).ok);
  CHECK(verify_homotopy_cover(*cover, *base, projection).ok);
}

TEST_CASE("structurally broken covers are rejected") {
  HammingGraph g23(2, 3);
  CoverGraph c = build_cover(g23, make_subgroup(g23, {{2, 0}, {0, 1}}));
  GeneralGraph base = materialize(g23);

  // rebuild the cover graph minus one edge
  auto copy_minus_edge = [&](std::size_t skip) {
    GeneralGraph out;
    for (std::size_t v = 0; v < c.graph->vertex_count(); ++v)
      out.add_vertex(c.graph->label(v));
    std::size_t edge_index = 0;
    for (std::size_t v = 0; v < c.graph->vertex_count(); ++v)
      for (VertexId w : c.graph->neighbors(static_cast<VertexId>(v)))
        if (static_cast<VertexId>(v) < w && edge_index++ != skip)
          out.add_edge(static_cast<VertexId>(v), w);
    out.finalize();
    return out;
  };
  GeneralGraph broken = copy_minus_edge(0);
  CHECK_FALSE(verify_cover(broken, base, c.projection).ok);

  // doubled lift: an extra edge makes two neighbors project to one vertex
  GeneralGraph doubled;
  for (std::size_t v = 0; v < c.graph->vertex_count(); ++v)
    doubled.add_vertex(c.graph->label(v));
  for (std::size_t v = 0; v < c.graph->vertex_count(); ++v)
    for (VertexId w : c.graph->neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w) doubled.add_edge(static_cast<VertexId>(v), w);
  VertexId u0 = c.vertex(g23.index_of({0, 0}), Label{0, 0});
  VertexId v1 = c.vertex(g23.index_of({1, 0}), Label{1, 0});
  doubled.add_edge(u0, v1);
  doubled.finalize();
  CHECK_FALSE(verify_cover(doubled, base, c.projection).ok);

  // a non-morphism: projection collapses an edge
  std::vector<VertexId> bad_projection = c.projection;
  bad_projection[v1] = 0;
  CHECK_FALSE(verify_cover(*c.graph, base, bad_projection).ok);
}

TEST_CASE("window exhaustion raises a budget error") {
  HammingGraph g23(2, 3);
  CoverGraph uc = build_cover(g23, make_subgroup(g23, {}), 1);
  Walk u1 = ground_walk(g23, 0);
  Walk far = concat(concat(u1, u1), u1);
  CHECK_THROWS_AS(lift_walk(uc, far, Label{0, 0}), BudgetError);
}
