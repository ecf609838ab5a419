"""Pair collections and the class/property characterisation tables.

A pair of forbidden induced subgraphs {X,Y} either forces every graph of a
restricted class to be perfect (omega-colourable), or it admits
counterexamples; the collections below are the exact characterisations.
Membership is a literal transcription of the defining case lists: sporadic
pairs are matched by isomorphism against the catalog, parametric families
(kK1, K_l, kK1 u K2 and complements) by shape recognition, and the
"induced subgraph of P4 / of co(K3 u P4)" clauses by the containment
tester, never by hard-coded lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import catalog
from .canon import canonical_code
from .graphs import Graph, has_independent_set, is_connected, is_cycle
from .induced import induced_closure

COLLECTIONS = (
    "P1", "O1", "P2", "P2c", "P3", "P4", "O2", "O2c", "O3", "O4",
    "P1plus", "P1cplus", "P2plus", "P2cplus", "P3plus", "P4plus",
    "O1plus", "O1cplus", "O2plus", "O2cplus", "O3plus", "O4plus",
    "I", "R", "A_P", "A_1", "A_c", "A_3", "A_Omega",
)


@dataclass(frozen=True)
class PairSpec:
    x: Graph
    y: Graph

    def display(self) -> str:
        return f"{{{catalog.recognize(self.x)}, {catalog.recognize(self.y)}}}"


@lru_cache(maxsize=1)
def _codes():
    from .graphs import disjoint_union

    g = catalog
    named = {
        "3K1": g.empty_graph(3),
        "K3": g.complete(3),
        "Z1": g.paw(),
        "Z2": g.hammer(),
        "D": g.diamond(),
        "K1_P3": disjoint_union(g.empty_graph(1), g.path(3)),
        "2K1K2": g.k_k1_plus_k2(2),
        "K13": g.claw(),
        "chair": g.chair(),
        "P5": g.path(5),
        "2K2": disjoint_union(g.complete(2), g.complete(2)),
        "K1_K3": disjoint_union(g.empty_graph(1), g.complete(3)),
        "K1_K13": disjoint_union(g.empty_graph(1), g.claw()),
        "gem": g.gem(),
    }
    codes = {name: canonical_code(gr) for name, gr in named.items()}
    p4_closure = {
        canonical_code(sub)
        for subs in induced_closure(g.path(4)).values()
        for sub in subs
    }
    cok3p4_closure = {
        canonical_code(sub)
        for subs in induced_closure(g.co_k3_p4()).values()
        for sub in subs
    }
    return codes, p4_closure, cok3p4_closure


class _Profile:
    """Cached shape facts about one pair member."""

    __slots__ = ("code", "sub_p4", "sub_cok3p4", "kk1", "kn", "kk1_k2", "co_kk1_k2")

    def __init__(self, g: Graph):
        codes, p4_closure, cok3p4_closure = _codes()
        self.code = canonical_code(g)
        self.sub_p4 = self.code in p4_closure
        self.sub_cok3p4 = self.code in cok3p4_closure
        n, ec = g.n, g.edge_count()
        self.kk1 = n if ec == 0 and n >= 1 else None
        self.kn = n if n >= 1 and ec == n * (n - 1) // 2 else None
        self.kk1_k2 = n - 2 if ec == 1 else None
        self.co_kk1_k2 = n - 2 if n >= 3 and ec == n * (n - 1) // 2 - 1 else None

    def named(self, name: str) -> bool:
        return self.code == _codes()[0][name]


def _sporadic(a: _Profile, b: _Profile, pairs) -> bool:
    return any(
        (a.named(x) and b.named(y)) or (a.named(y) and b.named(x))
        for x, y in pairs
    )


_P1_SPORADIC = (
    ("3K1", "K3"), ("3K1", "Z1"), ("3K1", "D"),
    ("K1_P3", "K3"), ("K1_P3", "Z1"), ("K1_P3", "D"),
    ("2K1K2", "K3"), ("2K1K2", "Z1"),
)


def _in_p1(a, b):
    return a.sub_p4 or b.sub_p4 or _sporadic(a, b, _P1_SPORADIC)


def _in_o1(a, b):
    return _in_p1(a, b) or _sporadic(a, b, (("2K1K2", "D"),))


def _in_i(a, b):
    return a.named("3K1") or b.named("3K1")


def _k1p3_with_cok3p4_part(a, b):
    return (a.named("K1_P3") and b.sub_cok3p4) or (b.named("K1_P3") and a.sub_cok3p4)


def _in_p2(a, b):
    return _in_p1(a, b) or _in_i(a, b) or _k1p3_with_cok3p4_part(a, b)


def _in_p2c(a, b):
    return _in_p2(a, b) or _sporadic(a, b, (("K13", "2K2"), ("K13", "P5")))


def _in_p3(a, b):
    return _in_p1(a, b) or _sporadic(
        a, b, (("K13", "K3"), ("K13", "Z1"), ("chair", "K3"), ("chair", "Z1"))
    )


def _in_p4(a, b):
    return (
        _in_p2c(a, b)
        or _in_p3(a, b)
        or _sporadic(a, b, (("K13", "K1_K3"), ("K13", "Z2")))
    )


_OMEGA_EXTRA = (("2K1K2", "D"), ("2K1K2", "gem"))


def _in_o2(a, b):
    return _in_p2(a, b) or _sporadic(a, b, _OMEGA_EXTRA)


def _in_o2c(a, b):
    return _in_p2c(a, b) or _sporadic(a, b, _OMEGA_EXTRA)


def _in_o3(a, b):
    return _in_p3(a, b) or _sporadic(a, b, (("2K1K2", "D"),))


def _in_o4(a, b):
    return _in_p4(a, b) or _sporadic(a, b, _OMEGA_EXTRA)


def _in_r(a, b):
    return (
        (a.kk1 is not None and a.kk1 >= 4 and b.kn is not None and b.kn >= 3)
        or (b.kk1 is not None and b.kk1 >= 4 and a.kn is not None and a.kn >= 3)
    )


def _in_a_p(a, b):
    if _in_r(a, b) or _sporadic(a, b, (("2K1K2", "D"),)):
        return True
    return (
        (a.kk1_k2 is not None and a.kk1_k2 >= 3 and b.named("K3"))
        or (b.kk1_k2 is not None and b.kk1_k2 >= 3 and a.named("K3"))
    )


def _in_a_1(a, b):
    def one(p, q):
        return p.named("3K1") and (
            (q.kn is not None and q.kn >= 4)
            or (q.co_kk1_k2 is not None and q.co_kk1_k2 >= 3)
        )

    return one(a, b) or one(b, a)


def _in_a_c(a, b):
    def one(p, q):
        return (
            (p.kk1 is not None and p.kk1 >= 4)
            or (p.kk1_k2 is not None and p.kk1_k2 >= 3)
        ) and q.named("Z1")

    return one(a, b) or one(b, a)


def _in_a_3(a, b):
    return _sporadic(a, b, (("K1_K13", "K3"), ("K1_K13", "Z1")))


def _in_a_omega(a, b):
    if _in_a_p(a, b) or _in_a_c(a, b):
        return True

    def d_side(p, q):
        return (
            (p.kk1 is not None and p.kk1 >= 4)
            or (p.kk1_k2 is not None and p.kk1_k2 >= 3)
        ) and q.named("D")

    def co_side(p, q):
        return (
            p.kk1 is not None
            and p.kk1 >= 4
            and q.co_kk1_k2 is not None
            and q.co_kk1_k2 >= 3
        )

    return d_side(a, b) or d_side(b, a) or co_side(a, b) or co_side(b, a)


def _in_p1plus(a, b):
    return _in_p1(a, b) or _in_a_p(a, b) or _in_a_1(a, b)


def _in_p1cplus(a, b):
    return _in_p1plus(a, b) or _in_a_c(a, b)


def _in_p2plus(a, b):
    return _in_p2(a, b) or _in_a_p(a, b)


def _in_p2cplus(a, b):
    return _in_p2c(a, b) or _in_a_p(a, b) or _in_a_c(a, b)


def _in_p3plus(a, b):
    return _in_p3(a, b) or _in_a_p(a, b) or _in_a_1(a, b) or _in_a_c(a, b) or _in_a_3(a, b)


def _in_p4plus(a, b):
    return _in_p4(a, b) or _in_a_p(a, b) or _in_a_c(a, b) or _in_a_3(a, b)


def _in_o1plus(a, b):
    return _in_o1(a, b) or _in_a_omega(a, b) or _in_a_1(a, b)


def _in_o2plus(a, b):
    return _in_o2(a, b) or _in_a_omega(a, b)


def _in_o2cplus(a, b):
    return _in_o2c(a, b) or _in_a_omega(a, b)


def _in_o3plus(a, b):
    return _in_o3(a, b) or _in_a_omega(a, b) or _in_a_1(a, b) or _in_a_3(a, b)


def _in_o4plus(a, b):
    return _in_o4(a, b) or _in_a_omega(a, b) or _in_a_3(a, b)


_PREDICATES = {
    "P1": _in_p1, "O1": _in_o1, "P2": _in_p2, "P2c": _in_p2c, "P3": _in_p3,
    "P4": _in_p4, "O2": _in_o2, "O2c": _in_o2c, "O3": _in_o3, "O4": _in_o4,
    "P1plus": _in_p1plus, "P1cplus": _in_p1cplus, "P2plus": _in_p2plus,
    "P2cplus": _in_p2cplus, "P3plus": _in_p3plus, "P4plus": _in_p4plus,
    "O1plus": _in_o1plus, "O1cplus": _in_o1plus, "O2plus": _in_o2plus,
    "O2cplus": _in_o2cplus, "O3plus": _in_o3plus, "O4plus": _in_o4plus,
    "I": _in_i, "R": _in_r, "A_P": _in_a_p, "A_1": _in_a_1, "A_c": _in_a_c,
    "A_3": _in_a_3, "A_Omega": _in_a_omega,
}


def in_collection(pair: PairSpec, collection: str) -> bool:
    try:
        pred = _PREDICATES[collection]
    except KeyError:
        raise ValueError(f"unknown collection {collection!r}") from None
    return pred(_Profile(pair.x), _Profile(pair.y))


def classify_pair(pair: PairSpec) -> dict[str, bool]:
    a, b = _Profile(pair.x), _Profile(pair.y)
    return {name: _PREDICATES[name](a, b) for name in COLLECTIONS}


@dataclass(frozen=True)
class ClassSpec:
    """A restricted graph class: the conjunction of the flags below."""

    connected: bool = False
    min_independence: int | None = None
    exclude_c5: bool = False
    exclude_odd_cycles: bool = False
    min_order: int | None = None

    def contains(self, g: Graph) -> bool:
        if self.min_order is not None and g.n < self.min_order:
            return False
        if self.exclude_odd_cycles and g.n % 2 == 1 and is_cycle(g):
            return False
        if self.exclude_c5 and g.n == 5 and is_cycle(g):
            return False
        if self.connected and not is_connected(g):
            return False
        if self.min_independence is not None and not has_independent_set(
            g, self.min_independence
        ):
            return False
        return True


NAMED_CLASSES = {
    "G": ClassSpec(),
    "G5": ClassSpec(exclude_c5=True),
    "Go": ClassSpec(exclude_odd_cycles=True),
    "Gc": ClassSpec(connected=True),
    "Gc5": ClassSpec(connected=True, exclude_c5=True),
    "Galpha": ClassSpec(min_independence=3),
    "Goalpha": ClassSpec(min_independence=3, exclude_odd_cycles=True),
    "Gcalpha": ClassSpec(connected=True, min_independence=3),
    "Gco": ClassSpec(connected=True, exclude_odd_cycles=True),
    "Gcoalpha": ClassSpec(
        connected=True, min_independence=3, exclude_odd_cycles=True
    ),
}

# class -> characterising collection, without exceptions
_NO_EXC = {
    ("G5", "perfect"): "P1", ("Go", "perfect"): "P1", ("Gc5", "perfect"): "P1",
    ("Galpha", "perfect"): "P2", ("Goalpha", "perfect"): "P2",
    ("Gcalpha", "perfect"): "P2c",
    ("Gco", "perfect"): "P3",
    ("Gcoalpha", "perfect"): "P4",
    ("G5", "omega"): "O1", ("Go", "omega"): "O1", ("Gc5", "omega"): "O1",
    ("Galpha", "omega"): "O2", ("Goalpha", "omega"): "O2",
    ("Gcalpha", "omega"): "O2c",
    ("Gco", "omega"): "O3",
    ("Gcoalpha", "omega"): "O4",
}

# class -> characterising collection, allowing finitely many exceptions
_FINITE_EXC = {
    ("G", "perfect"): "P1plus", ("Go", "perfect"): "P1plus",
    ("Gc", "perfect"): "P1cplus",
    ("Galpha", "perfect"): "P2plus", ("Goalpha", "perfect"): "P2plus",
    ("Gcalpha", "perfect"): "P2cplus",
    ("Gco", "perfect"): "P3plus",
    ("Gcoalpha", "perfect"): "P4plus",
    ("G", "omega"): "O1plus", ("Go", "omega"): "O1plus", ("Gc", "omega"): "O1plus",
    ("Galpha", "omega"): "O2plus", ("Goalpha", "omega"): "O2plus",
    ("Gcalpha", "omega"): "O2cplus",
    ("Gco", "omega"): "O3plus",
    ("Gcoalpha", "omega"): "O4plus",
}


def theorem_collection(class_name: str, prop: str, finite_exceptions: bool) -> str:
    """The collection characterising (class, property) per the main theorems."""
    if class_name not in NAMED_CLASSES:
        raise ValueError(f"unknown class {class_name!r}")
    if prop not in ("perfect", "omega"):
        raise ValueError(f"property must be 'perfect' or 'omega', not {prop!r}")
    table = _FINITE_EXC if finite_exceptions else _NO_EXC
    try:
        return table[(class_name, prop)]
    except KeyError:
        kind = "finite-exception" if finite_exceptions else "exceptionless"
        raise ValueError(
            f"class {class_name} is not covered by the {kind} characterisation"
        ) from None
