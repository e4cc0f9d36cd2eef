"""Canonical labelling by colour refinement plus individualisation backtracking.

Adequate for the small graphs (n <= ~12) that the enumerators produce, and for
blow-ups of any size: interchangeable twins are tried only once per cell, which
removes the factorial blow-up that large independent parts would otherwise cause.
"""

from __future__ import annotations

from .graph import Graph, to_graph6


def _compress(colors: list[int]) -> list[int]:
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [rank[c] for c in colors]


def refine(rows: tuple[int, ...], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``; new colour indices are isomorphism-invariant."""
    n = len(rows)
    colors = _compress(colors)
    k = max(colors) + 1 if n else 0
    while True:
        cells = [0] * k
        for v, c in enumerate(colors):
            cells[c] |= 1 << v
        sigs = [(colors[v],) + tuple((rows[v] & m).bit_count() for m in cells) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            return colors
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        k = len(uniq)


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (rj >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position ``i``.

    Isomorphic graphs get orderings producing identical relabelled graphs.
    """
    rows = g.rows
    n = g.n
    if n <= 1:
        return list(range(n))
    best_code = -1
    best_order: list[int] = []

    def visit(colors: list[int]) -> None:
        nonlocal best_code, best_order
        colors = refine(rows, colors)
        k = max(colors) + 1
        if k == n:
            order = [0] * n
            for v, c in enumerate(colors):
                order[c] = v
            code = _code(rows, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        members = [v for v in range(n) if colors[v] == target]
        tried_open: set[int] = set()
        tried_closed: set[int] = set()
        for v in members:
            closed = rows[v] | (1 << v)
            if rows[v] in tried_open or closed in tried_closed:
                continue
            tried_open.add(rows[v])
            tried_closed.add(closed)
            visit([2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)])

    visit([r.bit_count() for r in rows])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling: equal strings iff isomorphic."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
