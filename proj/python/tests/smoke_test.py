"""Smoke tests for the python module; run directly: python smoke_test.py."""

import hamfold as hf


def test_group_classification():
    for d in range(1, 4):
        assert hf.group_of(hf.HammingGraph(d, 2)).kind == "trivial"
        assert hf.group_of(hf.HammingGraph(d, 3)).kind == "free_abelian"
        assert hf.group_of(hf.HammingGraph(d, 4)).kind == "elem_abelian_2"
        assert hf.group_of(hf.HammingGraph(d, 3)).rank == d


def test_reduction_example():
    g = hf.HammingGraph(2, 3)
    w = hf.Walk(g, [[0, 0], [1, 0], [1, 1], [2, 1], [2, 2], [0, 2], [0, 1], [0, 0]])
    r = hf.reduce(w)
    assert r.cls.vector == [1, 0]
    replay = hf.verify_certificate(r.certificate)
    assert replay.ok
    assert replay.final == hf.ground_walk(g, 0)


def test_q2_triviality():
    g = hf.HammingGraph(3, 2)
    hexagon = hf.Walk(
        g,
        [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1], [0, 1, 1], [0, 0, 1], [0, 0, 0]],
    )
    cert = hf.reduce_q2(hexagon)
    replay = hf.verify_certificate(cert)
    assert replay.ok and replay.final.length == 0


def test_covers_and_lifting():
    g = hf.HammingGraph(2, 4)
    uc = hf.build_cover(g, hf.Subgroup(g, []))
    assert uc.vertex_count == 64 and uc.fibre == 4
    assert hf.verify_cover(uc).ok
    assert hf.verify_homotopy_cover(uc).ok
    u1 = hf.ground_walk(g, 0)
    assert not hf.lift_walk(uc, u1, [0, 0]).closed
    assert hf.lift_walk(uc, hf.concat(u1, u1), [0, 0]).closed

    g3 = hf.HammingGraph(2, 3)
    two_blocks = hf.build_cover(g3, hf.Subgroup(g3, [[2, 0], [0, 1]]))
    assert two_blocks.vertex_count == 18 and two_blocks.fibre == 2
    assert hf.monodromy(two_blocks, hf.ground_walk(g3, 0)) == [1, 0]


def test_pleat():
    h22 = hf.materialize(hf.HammingGraph(2, 2))
    assert not hf.is_pleat(h22)
    assert ("(0,0)", "(1,1)") in hf.dominated_pairs(h22)
    assert hf.is_pleat(hf.materialize(hf.HammingGraph(2, 3)))
    folded, log = hf.fold_to_pleat(h22)
    assert hf.is_pleat(folded) and len(log) == 2


def test_oracle():
    g = hf.GeneralGraph(
        ["a", "b", "c", "d", "e"],
        [("d", "a"), ("a", "c"), ("c", "e"), ("e", "d"), ("c", "b")],
    )
    w1 = hf.Walk(g, ["a", "c", "b", "c", "e"])
    w2 = hf.Walk(g, ["a", "d", "e"])
    verdict = hf.bfs_equivalent(w1, w2, hf.SearchBudget(max_walk_length=8))
    assert verdict.equivalent
    assert len(verdict.certificate.moves) == 2
    assert hf.verify_certificate(verdict.certificate).final == w2

    classes = hf.enumerate_classes(hf.HammingGraph(2, 3), [0, 0], max_len=6,
                                   budget=hf.SearchBudget(max_walk_length=8,
                                                          max_states=2_000_000))
    assert len(classes) == 13


def test_json_round_trip():
    g = hf.HammingGraph(2, 3)
    w = hf.ground_walk(g, 1)
    assert hf.walk_from_json(hf.walk_to_json(w)) == w
    dot = hf.graph_to_dot(hf.HammingGraph(2, 2))
    assert dot.count("--") == 4


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"smoke: {len(tests)} tests passed")


if __name__ == "__main__":
    main()
