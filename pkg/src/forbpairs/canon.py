"""Canonical forms for small graphs via refinement and pruned backtracking.

The canonical code is the minimum, over a pruned individualisation tree, of
the upper-triangle adjacency bits read in the leaf's vertex order.  Two
graphs are isomorphic exactly when their codes agree.  Pruning uses prefix
comparison against the best leaf and orbit merging under automorphisms
discovered from equal-code leaves; both prunings only skip subtrees whose
leaf codes are provably already represented, so the minimum is unaffected.

An optional vertex colouring restricts the search to colour-preserving
orderings; the colour sequence is folded into the code so that coloured
graphs compare correctly across calls.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, relabel


def _canon(n: int, rows: Sequence[int], colors: Sequence[int] | None):
    if n == 0:
        return b"\x00", ()

    if colors is None:
        cells = [(1 << n) - 1]
        header = b""
    else:
        if len(colors) != n:
            raise ValueError("colour sequence length must equal vertex count")
        groups: dict[int, int] = {}
        for v, c in enumerate(colors):
            groups[c] = groups.get(c, 0) | 1 << v
        cells = [groups[c] for c in sorted(groups)]
        header = b"".join(
            int(c).to_bytes(2, "big")
            for c in sorted(colors)
        )

    best_code: tuple[int, ...] | None = None
    best_perm: list[int] | None = None
    auts: list[tuple[int, ...]] = []

    def refine(cells: list[int]) -> list[int]:
        while True:
            changed = False
            out: list[int] = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                sigs: dict[int, int] = {}
                m = cell
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    m ^= b
                    r = rows[v]
                    sig = 0
                    for c2 in cells:
                        sig = sig << 7 | (r & c2).bit_count()
                    if sig in sigs:
                        sigs[sig] |= b
                    else:
                        sigs[sig] = b
                if len(sigs) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for sig in sorted(sigs):
                        out.append(sigs[sig])
            if not changed:
                return out
            cells = out

    def search(cells: list[int], fixed: list[int]):
        nonlocal best_code, best_perm
        cells = refine(cells)

        prefix: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                prefix.append(cell.bit_length() - 1)
            else:
                break
        partial = []
        for i, v in enumerate(prefix):
            r = rows[v]
            acc = 0
            for u in prefix[:i]:
                acc = acc << 1 | (r >> u & 1)
            partial.append(acc)
        pt = tuple(partial)
        if best_code is not None and pt > best_code[: len(pt)]:
            return

        if len(prefix) == len(cells) and len(prefix) == n:
            if best_code is None or pt < best_code:
                best_code = pt
                best_perm = prefix
            elif pt == best_code:
                gamma = [0] * n
                for i in range(n):
                    gamma[best_perm[i]] = prefix[i]
                auts.append(tuple(gamma))
            return

        t = len(prefix)
        target = cells[t]
        vs = []
        m = target
        while m:
            b = m & -m
            vs.append(b.bit_length() - 1)
            m ^= b

        parent = {v: v for v in vs}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        # twin candidates are automorphic images of each other fixing all
        # other vertices, so they can be merged without leaf discovery
        for i, u in enumerate(vs):
            ru = rows[u]
            bu = 1 << u
            for v in vs[i + 1 :]:
                rv = rows[v]
                if ru == rv or ru ^ rv == bu | 1 << v:
                    union(u, v)

        seen_auts = 0
        tried: list[int] = []
        for v in vs:
            while seen_auts < len(auts):
                gamma = auts[seen_auts]
                seen_auts += 1
                if all(gamma[u] == u for u in fixed):
                    for w in vs:
                        img = gamma[w]
                        if img in parent:
                            union(w, img)
            rv = find(v)
            if any(find(u) == rv for u in tried):
                continue
            tried.append(v)
            child = cells[:t] + [1 << v, target ^ (1 << v)] + cells[t + 1 :]
            search(child, fixed + [v])

    search(cells, [])
    assert best_code is not None and best_perm is not None

    total_bits = n * (n - 1) // 2
    acc = 0
    for i, bits in enumerate(best_code):
        acc = acc << i | bits
    payload = acc.to_bytes((total_bits + 7) // 8, "big") if total_bits else b""
    return bytes([n]) + header + payload, tuple(best_perm)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> tuple[bytes, tuple[int, ...]]:
    """Canonical code and the vertex order realising it (position -> vertex)."""
    return _canon(g.n, g.rows, colors)


def canonical_code(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    return _canon(g.n, g.rows, colors)[0]


def canonical_graph(g: Graph) -> Graph:
    """Isomorphic copy of g relabelled into canonical order."""
    _, perm = canonical_form(g)
    return relabel(g, perm) if g.n else g


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    return canonical_code(g) == canonical_code(h)
