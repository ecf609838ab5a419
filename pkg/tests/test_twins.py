import random

import pytest

from forbpairs.canon import isomorphic
from forbpairs.expr import graph_from_expr as G
from forbpairs.graphs import build, invariants
from forbpairs.twins import blow_up, twin_collapse


def test_collapse_examples():
    tc = twin_collapse(G("K5"))
    assert tc.base.n == 1
    (cls,) = tc.classes()
    assert cls.kind == "clique" and len(cls.members) == 5

    tc = twin_collapse(G("7K1"))
    assert tc.base.n == 1 and tc.classes()[0].kind == "independent"

    # C5 with one vertex duplicated as a false twin
    g = blow_up(G("C5"), [("independent", 2)] + [("independent", 1)] * 4)
    tc = twin_collapse(g)
    assert isomorphic(tc.base, G("C5"))
    (cls,) = tc.classes()
    assert cls.kind == "independent" and len(cls.members) == 2


def test_collapse_cascade():
    # K2 u K1 collapses through 2K1 to K1; only the merge log can rebuild it
    g = G("K2+K1")
    tc = twin_collapse(g)
    assert tc.base.n == 1
    assert [m.kind for m in tc.merges] == ["clique", "independent"]
    assert tc.expand() == g


def test_collapse_round_trip_random():
    rng = random.Random(77)
    for _ in range(250):
        n = rng.randint(0, 10)
        g = build(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.random() < rng.choice([0.2, 0.5, 0.8])])
        tc = twin_collapse(g)
        assert tc.expand() == g
        assert not twin_collapse(tc.base).merges  # base is twin-free
        # uniform-kind classes are mutual twins in the input
        for cls in tc.classes():
            if cls.kind == "clique":
                assert all(
                    g.adj(u, v)
                    and g.rows[u] ^ g.rows[v] == (1 << u | 1 << v)
                    for i, u in enumerate(cls.members)
                    for v in cls.members[i + 1:]
                )
            elif cls.kind == "independent":
                assert all(
                    g.rows[u] == g.rows[v]
                    for i, u in enumerate(cls.members)
                    for v in cls.members[i + 1:]
                )


def test_blow_up_examples():
    assert blow_up(G("C5"), [("independent", 1)] * 5) == G("C5")
    assert isomorphic(blow_up(G("K1"), [("clique", 5)]), G("K5"))
    g = blow_up(G("C5"), [("independent", 2)] + [("independent", 1)] * 4)
    iv = invariants(g)
    assert g.n == 6 and iv.alpha == 3 and iv.omega == 2
    with pytest.raises(ValueError):
        blow_up(G("K1"), [("clique", 65)])
    with pytest.raises(ValueError):
        blow_up(G("K1"), [("clique", 0)])


def test_blow_up_collapse_inverse():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 5)
        base = build(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                         if rng.random() < 0.5])
        if twin_collapse(base).merges:
            continue  # only twin-free bases re-collapse to themselves
        spec = [(rng.choice(["clique", "independent"]), rng.randint(1, 3))
                for _ in range(n)]
        blown = blow_up(base, spec)
        tc = twin_collapse(blown)
        assert isomorphic(tc.base, base)
