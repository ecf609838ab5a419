"""Induced-subgraph containment and closure enumeration.

The matcher is a backtracking search over pattern vertices in descending
degree order with bitmask forward checking: every unplaced pattern vertex
keeps a mask of still-compatible host vertices, updated as vertices are
placed.  Interchangeable pattern vertices (twins) are forced into
increasing host order, which turns the k! placements of patterns such as
kK1 into a single one.  This is the hot path of the whole package.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph, induced_on_mask


def contains_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An embedding (pattern vertex -> host vertex) or None.

    The embedding preserves adjacency both ways, making the image an
    induced copy of the pattern.
    """
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return None
    if np_ == 0:
        return ()
    h_edges = host.edge_count()
    p_edges = pattern.edge_count()
    if p_edges > h_edges:
        return None
    if np_ * (np_ - 1) // 2 - p_edges > nh * (nh - 1) // 2 - h_edges:
        return None

    order = sorted(range(np_), key=lambda v: (-pattern.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}

    # for each pattern vertex, the latest earlier twin in search order
    prev_twin = [-1] * np_
    prow = pattern.rows
    for i, u in enumerate(order):
        for v in order[i + 1 :]:
            ru, rv = prow[u], prow[v]
            if ru == rv or ru ^ rv == (1 << u | 1 << v):
                if prev_twin[v] == -1 or pos[prev_twin[v]] < i:
                    prev_twin[v] = u

    full = (1 << nh) - 1
    hrow = host.rows
    hnon = [full ^ r ^ (1 << v) for v, r in enumerate(hrow)]

    assign = [-1] * np_

    def place(level: int, masks: Sequence[int], used: int) -> bool:
        q = order[level]
        cand = masks[q] & ~used
        t = prev_twin[q]
        if t != -1:
            cand &= ~((2 << assign[t]) - 1)
        while cand:
            b = cand & -cand
            cand ^= b
            hv = b.bit_length() - 1
            assign[q] = hv
            if level + 1 == np_:
                return True
            nxt = list(masks)
            ok = True
            for r in order[level + 1 :]:
                m = nxt[r] & (hrow[hv] if prow[q] >> r & 1 else hnon[hv])
                if not m:
                    ok = False
                    break
                nxt[r] = m
            if ok and place(level + 1, nxt, used | b):
                return True
        assign[q] = -1
        return False

    if place(0, [full] * np_, 0):
        return tuple(assign)
    return None


def first_violation(
    g: Graph, patterns: Sequence[Graph]
) -> tuple[int, tuple[int, ...]] | None:
    """Index and embedding of the first pattern found in g, else None."""
    for idx, p in enumerate(patterns):
        emb = contains_induced(g, p)
        if emb is not None:
            return idx, emb
    return None


def is_free(g: Graph, patterns: Sequence[Graph]) -> bool:
    return first_violation(g, patterns) is None


def induced_closure(g: Graph) -> dict[int, list[Graph]]:
    """All induced subgraphs up to isomorphism, grouped by order.

    Includes g itself and K1; representatives are canonically labelled and
    sorted so the listing is stable.
    """
    from .canon import canonical_form
    from .graphs import relabel

    if g.n > 10:
        raise ValueError("closure enumeration is limited to 10 vertices")
    seen: dict[bytes, Graph] = {}
    for mask in range(1, 1 << g.n):
        sub = induced_on_mask(g, mask)
        code, perm = canonical_form(sub)
        if code not in seen:
            seen[code] = relabel(sub, perm)
    out: dict[int, list[Graph]] = {}
    for code in sorted(seen):
        sub = seen[code]
        out.setdefault(sub.n, []).append(sub)
    return out
