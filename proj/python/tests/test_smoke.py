import itertools
import random

import pytest

import tpfill

C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
P4 = [(0, 1), (1, 2), (2, 3)]


def test_min_tpc_small():
    assert len(tpfill.min_tpc(4, C4, 0)) == 1
    assert len(tpfill.min_tpc(4, P4, 0)) == 1
    assert tpfill.min_tpc(3, [(0, 1), (0, 2), (1, 2)], 1) == []


def test_min_tpc_rejects_far_instance():
    two_p4 = P4 + [(4, 5), (5, 6), (6, 7)]
    with pytest.raises(tpfill.NotOneAwayFromTP):
        tpfill.min_tpc(8, two_p4, 0)
    with pytest.raises(ValueError):
        tpfill.min_tpc(8, two_p4, 0)


def test_recognition_and_forest():
    assert tpfill.is_trivially_perfect(3, [(0, 1), (1, 2)])
    assert not tpfill.is_trivially_perfect(4, P4)
    (nodes, base), = tpfill.to_forest(3, [(0, 1), (0, 2), (1, 2)])
    assert nodes == [(0, None), (1, 0), (2, 1)]
    assert base == 0
    with pytest.raises(tpfill.NotTriviallyPerfect):
        tpfill.to_forest(4, C4)


def test_slim_and_chordal():
    assert tpfill.slim_tpc(3, [(0, 1), (1, 2)], [0]) == [(0, 2)]
    assert tpfill.is_chordal(3, [(0, 1), (1, 2)])
    assert not tpfill.is_chordal(4, C4)
    assert tpfill.brute_min_fill(4, C4, "chordal") == [(0, 2)]


def test_gadget():
    d = tpfill.build_gadget(4, C4, [0, 1], [2, 3], 1)
    assert d["K"] == 2 and d["n"] == 8 and d["v"] == 7
    assert len(d["c"]) == 3
    with pytest.raises(tpfill.InvalidGadgetInput):
        tpfill.build_gadget(4, C4, [0, 2], [1, 3], 1)


def _is_tp(n, edges):
    es = {frozenset(e) for e in edges}
    for quad in itertools.combinations(range(n), 4):
        sub = [p for p in itertools.combinations(quad, 2) if frozenset(p) in es]
        degs = sorted(sum(x in p for p in sub) for x in quad)
        if (len(sub), degs) in ((3, [1, 1, 2, 2]), (4, [2, 2, 2, 2])):
            return False
    return True


def test_random_against_oracle():
    rng = random.Random(5)
    seen = 0
    while seen < 60:
        n = rng.randint(3, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        v = n - 1
        rest = [e for e in edges if v not in e]
        if not tpfill.is_trivially_perfect(n, rest):
            continue
        fill = tpfill.min_tpc(n, edges, v)
        assert _is_tp(n, edges + fill)
        assert len(fill) == len(tpfill.brute_min_fill(n, edges, "tp"))
        seen += 1
