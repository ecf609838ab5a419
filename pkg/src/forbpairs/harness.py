"""Exhaustive small-graph enumeration and theorem verification.

Graphs are generated one order at a time by vertex augmentation with
canonical-code deduplication, so each isomorphism class appears exactly
once and always under its canonical labelling (reports are therefore
byte-stable).  An optional pattern list restricts generation to the
{patterns}-free hereditary class: freeness is closed under vertex
deletion, so augmenting only free parents still reaches every free graph.
This makes searches inside restrictive classes (the common case) cheap.

Report schema (machine-readable lines)::

    counterexample\t<graph6>\t<property>\t<certificate>

All analysis calls are pure; parallel runs partition the parent graphs and
merge sorted results, so thread count never changes any output.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .canon import canonical_form
from .graphs import (
    Graph,
    chromatic_number,
    has_independent_set,
    is_connected,
    is_cycle,
    max_clique,
    relabel,
)
from .graph6 import encode_graph6, read_graph6_file
from .induced import is_free
from .pairs import ClassSpec, PairSpec
from .perfection import is_perfect_spgt
from .twins import twin_collapse

GENERATOR_LIMIT = 10
RESTRICTED_LIMIT = 12  # hereditary pattern-restricted generation may go higher

# number of graphs per order, up to isomorphism (checked in tests)
KNOWN_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]

_cache: dict[tuple[int, tuple[bytes, ...] | None], list[Graph]] = {}


def _children(parents: Sequence[Graph], patterns: Sequence[Graph] | None):
    """Canonical (code, graph) pairs for all one-vertex extensions."""
    out: dict[bytes, Graph] = {}
    for parent in parents:
        n = parent.n + 1
        new_bit = 1 << (n - 1)
        prows = parent.rows
        for mask in range(1 << (n - 1)):
            rows = [r | new_bit if mask >> v & 1 else r for v, r in enumerate(prows)]
            rows.append(mask)
            g = Graph(n, rows)
            if patterns is not None and not is_free(g, patterns):
                continue
            code, perm = canonical_form(g)
            if code not in out:
                out[code] = relabel(g, perm)
    return out


def _children_chunk(args):
    parents_rows, n, pattern_rows = args
    parents = [Graph(n - 1, rows) for rows in parents_rows]
    patterns = (
        None
        if pattern_rows is None
        else [Graph(pn, rows) for pn, rows in pattern_rows]
    )
    return {
        code: (g.n, g.rows) for code, g in _children(parents, patterns).items()
    }


def generate_graphs(
    n: int,
    patterns: Sequence[Graph] | None = None,
    threads: int = 1,
) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, canonically labelled.

    With patterns given, only {patterns}-free graphs are produced (and the
    hereditary restriction also prunes the generation itself).
    """
    limit = GENERATOR_LIMIT if patterns is None else RESTRICTED_LIMIT
    if n < 0 or n > limit:
        raise ValueError(
            f"built-in generation covers 0..{limit} vertices here; "
            "ingest graph6 files for larger orders"
        )
    key_pat = None if patterns is None else tuple(
        sorted(canonical_form(p)[0] for p in patterns)
    )
    hit = _cache.get((n, key_pat))
    if hit is not None:
        return hit
    if n == 0:
        result = [Graph(0, ())]
    elif n == 1:
        g = Graph(1, (0,))
        result = [g] if patterns is None or is_free(g, patterns) else []
    else:
        parents = generate_graphs(n - 1, patterns, threads)
        if threads > 1 and len(parents) >= 64:
            out: dict[bytes, Graph] = {}
            chunks = _split(parents, threads * 4)
            pattern_rows = (
                None if patterns is None else [(p.n, p.rows) for p in patterns]
            )
            import multiprocessing

            with multiprocessing.Pool(threads) as pool:
                for part in pool.imap_unordered(
                    _children_chunk,
                    [([p.rows for p in c], n, pattern_rows) for c in chunks],
                ):
                    for code, (gn, rows) in part.items():
                        if code not in out:
                            out[code] = Graph(gn, rows)
        else:
            out = _children(parents, patterns)
        result = [out[c] for c in sorted(out)]
    _cache[(n, key_pat)] = result
    return result


def generate_upto(
    n_max: int, patterns: Sequence[Graph] | None = None, threads: int = 1
) -> Iterable[Graph]:
    for n in range(1, n_max + 1):
        yield from generate_graphs(n, patterns, threads)


def _split(items: Sequence, parts: int):
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def default_threads() -> int:
    return max(1, os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# property checks and certificates

def _property_certificate(g: Graph, prop: str) -> str | None:
    """None when g satisfies the property, else a certificate string."""
    if prop == "perfect":
        cert = is_perfect_spgt(g)
        if cert.perfect:
            return None
        return cert.describe()
    if prop == "omega":
        omega = max_clique(g)
        chi = chromatic_number(g)
        if chi == omega:
            return None
        return f"not omega-colourable; chi={chi} > omega={omega}"
    raise ValueError(f"unknown property {prop!r}")


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    order: int
    certificate: str


@dataclass
class VerificationReport:
    pair_display: str
    class_name: str
    prop: str
    n_max: int
    restricted: bool
    verdict: str = "all_hold"
    counterexamples: list[Counterexample] = field(default_factory=list)
    examined: dict[int, int] = field(default_factory=dict)
    passing: dict[int, int] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"pair {self.pair_display} class {self.class_name} "
            f"property {self.prop} n_max {self.n_max}",
            f"verdict: {self.verdict}",
        ]
        for n in sorted(self.examined):
            lines.append(
                f"order {n}: examined {self.examined[n]} passing {self.passing[n]}"
            )
        for ce in self.counterexamples:
            lines.append(f"counterexample\t{ce.graph6}\t{self.prop}\t{ce.certificate}")
        return "\n".join(lines)


def verify_universal(
    pair: PairSpec,
    cls: ClassSpec,
    prop: str,
    n_max: int,
    class_name: str = "?",
    threads: int = 1,
    restricted: bool = True,
) -> VerificationReport:
    """Check the property on every {X,Y}-free class member up to n_max.

    restricted=True enumerates only the {X,Y}-free hereditary class (the
    verdict is identical; examined counts then refer to that class).
    """
    patterns = [pair.x, pair.y]
    report = VerificationReport(
        pair_display=pair.display(),
        class_name=class_name,
        prop=prop,
        n_max=n_max,
        restricted=restricted,
    )
    for n in range(1, n_max + 1):
        examined = passing = 0
        for g in generate_graphs(n, patterns if restricted else None, threads):
            examined += 1
            if not cls.contains(g):
                continue
            if not restricted and not is_free(g, patterns):
                continue
            passing += 1
            cert = _property_certificate(g, prop)
            if cert is not None:
                ce = Counterexample(encode_graph6(g), n, cert)
                _revalidate(g, cls, patterns, prop)
                report.counterexamples.append(ce)
        report.examined[n] = examined
        report.passing[n] = passing
    if report.counterexamples:
        report.verdict = "violated"
    return report


def _revalidate(g: Graph, cls: ClassSpec, patterns, prop: str):
    if not cls.contains(g) or not is_free(g, patterns):
        raise AssertionError("counterexample failed re-validation")
    if _property_certificate(g, prop) is None:
        raise AssertionError("counterexample satisfies the property on re-check")


def hunt_counterexamples(
    pair: PairSpec,
    cls: ClassSpec,
    prop: str,
    n_max: int,
    class_name: str = "?",
    threads: int = 1,
) -> list[Counterexample]:
    """All violating graphs up to n_max, with certificates."""
    return verify_universal(
        pair, cls, prop, n_max, class_name=class_name, threads=threads
    ).counterexamples


# ---------------------------------------------------------------------------
# censuses

PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "connected": is_connected,
    "non-perfect": lambda g: not is_perfect_spgt(g).perfect,
    "not-omega-colourable": lambda g: chromatic_number(g) > max_clique(g),
    "not-odd-cycle": lambda g: not (g.n % 2 == 1 and is_cycle(g)),
    "alpha>=3": lambda g: has_independent_set(g, 3),
    "alpha=3": lambda g: has_independent_set(g, 3) and not has_independent_set(g, 4),
    "contains-C5": lambda g: _contains_c5(g),
}


def _contains_c5(g: Graph) -> bool:
    from . import catalog
    from .induced import contains_induced

    return contains_induced(g, catalog.cycle(5)) is not None


@dataclass
class Census:
    pattern_display: tuple[str, ...]
    predicates: tuple[str, ...]
    n_max: int
    members: list[str]  # graph6, sorted by (order, canonical code)

    def to_text(self) -> str:
        head = (
            f"census free {{{', '.join(self.pattern_display)}}} "
            f"predicates [{', '.join(self.predicates)}] n_max {self.n_max}"
        )
        return "\n".join([head, f"members: {len(self.members)}"] + self.members)


def census(
    patterns: Sequence[Graph],
    predicates: Sequence[str],
    n_max: int,
    threads: int = 1,
) -> Census:
    """All {patterns}-free graphs satisfying every predicate, up to n_max."""
    preds = []
    for name in predicates:
        if name not in PREDICATES:
            raise ValueError(
                f"unknown predicate {name!r}; choose from {sorted(PREDICATES)}"
            )
        preds.append(PREDICATES[name])
    members: list[tuple[int, bytes, str]] = []
    for n in range(1, n_max + 1):
        for g in generate_graphs(n, list(patterns), threads):
            if all(p(g) for p in preds):
                members.append((n, canonical_form(g)[0], encode_graph6(g)))
    members.sort()
    from . import catalog

    return Census(
        pattern_display=tuple(str(catalog.recognize(p)) for p in patterns),
        predicates=tuple(predicates),
        n_max=n_max,
        members=[m[2] for m in members],
    )


def derive_blowup_catalog(n_max: int, threads: int = 1) -> Census:
    """Twin-collapsed bases of all {2K1 u K2, gem}-free graphs with a C5."""
    from . import catalog

    if n_max > GENERATOR_LIMIT:
        raise ValueError(f"n_max is limited to {GENERATOR_LIMIT}")
    patterns = [catalog.k_k1_plus_k2(2), catalog.gem()]
    seen: dict[bytes, tuple[int, str]] = {}
    for n in range(5, n_max + 1):
        for g in generate_graphs(n, patterns, threads):
            if not _contains_c5(g):
                continue
            base = twin_collapse(g).base
            code, perm = canonical_form(base)
            if code not in seen:
                seen[code] = (base.n, encode_graph6(relabel(base, perm)))
    members = sorted((order, code, g6) for code, (order, g6) in seen.items())
    return Census(
        pattern_display=("kK1_plus_K2(2)", "co_K1_P4"),
        predicates=("contains-C5", "twin-collapsed-base"),
        n_max=n_max,
        members=[m[2] for m in members],
    )


def ingest_graph6(path) -> list[Graph]:
    """Decode a one-per-line graph6 file; errors carry line numbers."""
    return read_graph6_file(path)
