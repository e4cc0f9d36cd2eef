"""Graph invariants: degrees, minimum common degree, odd cycles, C5 and subgraph search.

Every search returns the lexicographically least witness under lowest-index-first
ordering so repeated runs produce identical witnesses.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Optional

from .graph import Graph, iter_bits

#: Value reported as the minimum common degree of a graph without non-edges.
#: A vacuous minimum is read as +infinity so complete graphs clear every threshold.
COMPLETE_GRAPH_DELTA2: float = math.inf


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no test together with its evidence.

    Truthiness follows ``holds``.  ``witness`` is whatever certifies the answer
    (a triangle, a coloring, an embedding, ...) or ``None``.
    """

    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(r.bit_count() for r in g.rows)


def min_common_degree(g: Graph) -> int | float:
    """Minimum of ``|N(x) & N(y)|`` over non-adjacent pairs ``x != y``."""
    if g.n < 2:
        raise ValueError("minimum common degree needs at least two vertices")
    rows = g.rows
    full = g.mask
    best = COMPLETE_GRAPH_DELTA2
    for u in range(g.n - 1):
        ru = rows[u]
        later = (~ru & full) >> (u + 1)
        while later:
            low = later & -later
            v = u + low.bit_length()
            later ^= low
            c = (ru & rows[v]).bit_count()
            if c < best:
                if c == 0:
                    return 0
                best = c
    return best


def min_common_degree_pair(g: Graph) -> Optional[tuple[int, int]]:
    """A lexicographically least non-edge attaining the minimum common degree."""
    best, arg = None, None
    for u, v in g.non_edges():
        c = (g.rows[u] & g.rows[v]).bit_count()
        if best is None or c < best:
            best, arg = c, (u, v)
    return arg


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    rows = g.rows
    for u in range(g.n):
        ru = rows[u]
        for v in iter_bits(ru >> (u + 1)):
            v += u + 1
            common = (ru & rows[v]) >> (v + 1)
            if common:
                return u, v, v + 1 + (common & -common).bit_length() - 1
    return None


def is_triangle_free(g: Graph) -> Check:
    tri = find_triangle(g)
    return Check(tri is None, tri)


def _bfs_dist(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    frontier = 1 << s
    seen = frontier
    d = 0
    rows = g.rows
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or ``None`` for bipartite graphs."""
    best = None
    for s in range(g.n):
        length = _shortest_odd_closed_walk(g, s)
        if length is not None and (best is None or length < best):
            best = length
            if best == 3:
                break
    return best


def _shortest_odd_closed_walk(g: Graph, s: int) -> Optional[int]:
    dist = _bfs_dist(g, s)
    best = None
    for u, v in g.edges():
        if dist[u] >= 0 and dist[u] == dist[v]:
            length = 2 * dist[u] + 1
            if best is None or length < best:
                best = length
    return best


def shortest_odd_cycle(g: Graph) -> Optional[list[int]]:
    """A shortest odd cycle, or ``None`` iff ``g`` is bipartite.

    Tie-break: the cycle is written starting at its least vertex with the
    smaller of that vertex's two cycle-neighbours second, and among all
    shortest odd cycles the lexicographically least such sequence is returned.
    """
    length = odd_girth(g)
    if length is None:
        return None
    for a in range(g.n):
        if _shortest_odd_closed_walk(g, a) != length:
            continue
        cyc = _least_cycle_through(g, a, length)
        if cyc is not None:
            return cyc
    raise AssertionError("odd girth found but no cycle reconstructed")


def _least_cycle_through(g: Graph, a: int, length: int) -> Optional[list[int]]:
    # Callers pass the least root lying on a shortest odd cycle, so lower
    # vertices lie on none and can be excluded.
    rows = g.rows
    dist = _bfs_dist(g, a)
    allowed = g.mask & ~((1 << (a + 1)) - 1)
    path = [a]
    used = 1 << a

    def extend(v: int, k: int) -> bool:
        nonlocal used
        if k == length:
            return bool(rows[v] >> a & 1) and path[1] < path[-1]
        remaining = length - k
        for w in iter_bits(rows[v] & allowed & ~used):
            if dist[w] > remaining:
                continue
            path.append(w)
            used |= 1 << w
            if extend(w, k + 1):
                return True
            path.pop()
            used &= ~(1 << w)
        return False

    if extend(a, 1):
        return list(path)
    return None


def is_bipartite(g: Graph) -> Check:
    """Two-colouring (list of 0/1 per vertex) or a shortest odd cycle as witness."""
    color = [-1] * g.n
    rows = g.rows
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(rows[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return Check(False, shortest_odd_cycle(g))
    return Check(True, color)


def find_c5(g: Graph) -> Optional[list[int]]:
    """Least 5-cycle ``(a, b, c, d, e)`` with ``a`` minimal and ``b < e``; not necessarily induced."""
    rows = g.rows
    for a in range(g.n):
        above = ~((1 << (a + 1)) - 1)
        ra = rows[a]
        for b in iter_bits(ra & above):
            bbit = 1 << b
            past_b = ~((bbit << 1) - 1)
            for c in iter_bits(rows[b] & above):
                cbit = 1 << c
                for d in iter_bits(rows[c] & above & ~bbit):
                    es = rows[d] & ra & past_b & ~cbit
                    if es:
                        return [a, b, c, d, (es & -es).bit_length() - 1]
    return None


def is_c5_free(g: Graph) -> Check:
    cyc = find_c5(g)
    return Check(cyc is None, cyc)


def is_maximal_triangle_free(g: Graph) -> Check:
    """Whether every non-edge has a common neighbour; witness is an addable non-edge."""
    tri = find_triangle(g)
    if tri is not None:
        raise ValueError(f"graph has triangle {tri}; maximality is only defined for triangle-free graphs")
    rows = g.rows
    for u, v in g.non_edges():
        if not rows[u] & rows[v]:
            return Check(False, (u, v))
    return Check(True, None)


def _pattern_order(h: Graph) -> list[int]:
    # Highest degree first, then greedily the vertex with most already-placed
    # neighbours so every step after the first is constrained.
    remaining = set(range(h.n))
    order: list[int] = []
    placed = 0
    deg = h.degrees()
    while remaining:
        v = min(remaining, key=lambda x: (-(h.rows[x] & placed).bit_count(), -deg[x], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def contains_subgraph(g: Graph, h: Graph) -> Check:
    """Search for an injective edge-preserving map ``h -> g`` (not necessarily induced).

    The witness is the embedding as a list ``emb`` with ``emb[p]`` the image of
    pattern vertex ``p``.
    """
    if h.n > g.n:
        return Check(False, None)
    if h.n == 0:
        return Check(True, [])
    order = _pattern_order(h)
    gdeg = g.degrees()
    hdeg = h.degrees()
    deg_ok = [0] * h.n
    for p in range(h.n):
        deg_ok[p] = sum(1 << v for v in range(g.n) if gdeg[v] >= hdeg[p])
    # For each step, the earlier pattern vertices adjacent to the current one.
    back = [[q for q in order[:i] if h.has_edge(order[i], q)] for i in range(h.n)]
    emb = [-1] * h.n
    g_rows = g.rows

    def search(i: int, used: int) -> bool:
        if i == h.n:
            return True
        p = order[i]
        cand = deg_ok[p] & ~used
        for q in back[i]:
            cand &= g_rows[emb[q]]
            if not cand:
                return False
        for v in iter_bits(cand):
            emb[p] = v
            if search(i + 1, used | (1 << v)):
                return True
        emb[p] = -1
        return False

    if search(0, 0):
        return Check(True, list(emb))
    return Check(False, None)
