#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hamfold/group.hpp"
#include "hamfold/oracle.hpp"
#include "support.hpp"

using namespace hamfold;

TEST_CASE("group_of classification") {
  CHECK(group_of(HammingGraph(3, 2)) == GroupPresentation{GroupKind::Trivial, 3});
  CHECK(group_of(HammingGraph(1, 3)) == GroupPresentation{GroupKind::FreeAbelian, 1});
  CHECK(group_of(HammingGraph(2, 4)) == GroupPresentation{GroupKind::ElemAbelian2, 2});
  // d = 1 agrees with the complete-graph groups.
  CHECK(group_of(HammingGraph(1, 2)).kind == GroupKind::Trivial);
  CHECK(group_of(HammingGraph(1, 4)).kind == GroupKind::ElemAbelian2);
  CHECK(group_of(HammingGraph(1, 5)).kind == GroupKind::ElemAbelian2);
  CHECK(group_of(HammingGraph(2, 1)).kind == GroupKind::Trivial);
}

TEST_CASE("class_of") {
  HammingGraph g23(2, 3);
  Walk w = Walk::from_coords(
      g23, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}, {0, 1}, {0, 0}});
  CHECK(class_of(w).vector == std::vector<long long>{1, 0});

  CHECK(is_identity(class_of(Walk::from_coords(g23, {{0, 0}}))));

  HammingGraph g24(2, 4);
  Walk u1_24 = ground_walk(g24, 0);
  CHECK(is_identity(class_of(concat(u1_24, u1_24))));
  Walk u1_23 = ground_walk(g23, 0);
  CHECK(class_of(concat(u1_23, u1_23)).vector == std::vector<long long>{2, 0});

  CHECK_THROWS_AS(class_of(Walk::from_coords(g23, {{0, 0}, {1, 0}})), DomainError);
}

TEST_CASE("group operations") {
  GroupPresentation z2{GroupKind::FreeAbelian, 2};
  GroupElement a = make_element(z2, {1, 0});
  GroupElement b = make_element(z2, {0, 1});
  CHECK(compose(a, b).vector == std::vector<long long>{1, 1});
  CHECK(is_identity(compose(a, invert(a))));

  HammingGraph g23(2, 3);
  CHECK(compose(a, b) == class_of(concat(ground_walk(g23, 0), ground_walk(g23, 1))));

  GroupPresentation e2{GroupKind::ElemAbelian2, 2};
  CHECK(compose(make_element(e2, {1, 1}), make_element(e2, {1, 0})).vector ==
        std::vector<long long>{0, 1});

  CHECK_THROWS_AS(compose(a, make_element(e2, {1, 0})), DomainError);
}

TEST_CASE("canonical_walk") {
  HammingGraph g23(2, 3);
  GroupPresentation p = group_of(g23);
  CHECK(canonical_walk(g23, make_element(p, {1, 0})) == ground_walk(g23, 0));
  CHECK(canonical_walk(g23, identity(p)).length() == 0);

  GroupElement e = make_element(p, {-1, 1});
  Walk w = canonical_walk(g23, e);
  CHECK(w.length() == 6);
  CHECK(w == concat(inverse(ground_walk(g23, 0)), ground_walk(g23, 1)));
  CHECK(class_of(w) == e);

  CHECK_THROWS_AS(canonical_walk(g23, make_element(GroupPresentation{GroupKind::ElemAbelian2, 2},
                                                   {1, 0})),
                  DomainError);
}

TEST_CASE("equivalent") {
  HammingGraph g23(2, 3);
  Walk w = Walk::from_coords(
      g23, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}, {0, 1}, {0, 0}});
  Walk u1 = ground_walk(g23, 0);
  Walk u2 = ground_walk(g23, 1);
  CHECK(equivalent(w, concat(u1, Walk::trivial(GraphRef(g23), g23.origin()))));
  CHECK(equivalent(w, w));
  CHECK_FALSE(equivalent(u1, u2));
  CHECK_THROWS_AS(equivalent(u1, Walk::from_coords(g23, {{1, 0}, {2, 0}, {0, 0}, {1, 0}})),
                  DomainError);
}

TEST_CASE("class_of is a homomorphism on random closed walks") {
  std::mt19937_64 rng(testsupport::test_seed() + 2);
  for (auto [d, q] : {std::pair{2, 3}, {2, 4}}) {
    HammingGraph g(d, q);
    testsupport::ClosedWalkSampler sampler(GraphRef(g), g.origin(), 10);
    for (int trial = 0; trial < 150; ++trial) {
      Walk w1 = sampler.sample_any(10, rng);
      Walk w2 = sampler.sample_any(10, rng);
      CHECK(class_of(concat(w1, w2)) == compose(class_of(w1), class_of(w2)));
      CHECK(class_of(inverse(w1)) == invert(class_of(w1)));
    }
  }
}

TEST_CASE("class_of is invariant under elementary moves") {
  std::mt19937_64 rng(testsupport::test_seed() + 3);
  for (auto [d, q] : {std::pair{2, 3}, {2, 4}, {3, 2}}) {
    HammingGraph g(d, q);
    testsupport::ClosedWalkSampler sampler(GraphRef(g), g.origin(), 8);
    for (int trial = 0; trial < 100; ++trial) {
      Walk w = sampler.sample_any(8, rng);
      GroupElement cls = class_of(w);
      for (int step = 0; step < 20; ++step) {
        auto moves = enumerate_moves(w, 12);
        if (moves.empty()) break;
        w = apply_move(w, moves[rng() % moves.size()]);
        CHECK(class_of(w) == cls);
      }
    }
  }
}

TEST_CASE("q=3 windings of closed walks are divisible by 3") {
  std::mt19937_64 rng(testsupport::test_seed() + 4);
  HammingGraph g(2, 3);
  testsupport::ClosedWalkSampler sampler(GraphRef(g), g.origin(), 12);
  for (int trial = 0; trial < 200; ++trial) {
    Walk w = sampler.sample_any(12, rng);
    std::vector<long long> winding(2, 0);
    for (const auto& rec : change_sequence(w))
      winding[rec.coordinate] += (rec.to_value - rec.from_value + 3) % 3 == 1 ? 1 : -1;
    CHECK(winding[0] % 3 == 0);
    CHECK(winding[1] % 3 == 0);
  }
}

TEST_CASE("canonical round trip over a box of elements") {
  HammingGraph g23(2, 3);
  GroupPresentation p3 = group_of(g23);
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y) {
      GroupElement e = make_element(p3, {x, y});
      CHECK(class_of(canonical_walk(g23, e)) == e);
    }
  HammingGraph g24(2, 4);
  GroupPresentation p4 = group_of(g24);
  for (long long x = 0; x <= 1; ++x)
    for (long long y = 0; y <= 1; ++y) {
      GroupElement e = make_element(p4, {x, y});
      CHECK(class_of(canonical_walk(g24, e)) == e);
    }
}

TEST_CASE("ground walks commute, with an explicit certificate on H(2,3)") {
  for (auto [d, q] : {std::pair{3, 3}, {3, 4}}) {
    HammingGraph g(d, q);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        CHECK(equivalent(concat(ground_walk(g, i), ground_walk(g, j)),
                         concat(ground_walk(g, j), ground_walk(g, i))));
      }
  }
  HammingGraph g23(2, 3);
  Walk u1u2 = concat(ground_walk(g23, 0), ground_walk(g23, 1));
  Walk u2u1 = concat(ground_walk(g23, 1), ground_walk(g23, 0));
  SearchBudget budget{8, 200000, 1000};
  Verdict v = bfs_equivalent(u1u2, u2u1, budget);
  REQUIRE(v.equivalent);
  ReplayResult r = verify_certificate(*v.certificate);
  CHECK(r.ok);
  CHECK(r.final == u2u1);
}

TEST_CASE("ground walk choice does not matter for q >= 4") {
  for (int q : {4, 5}) {
    HammingGraph g(2, q);
    GroupPresentation p = group_of(g);
    for (int i = 0; i < 2; ++i) {
      GroupElement expected = identity(p);
      expected.vector[i] = 1;
      for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) {
          if (a == b) continue;
          CHECK(class_of(ground_walk(g, i, a, b)) == expected);
        }
    }
  }
}
