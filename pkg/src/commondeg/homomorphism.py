"""Homomorphism search and verification, blow-up construction and recognition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, iter_bits
from .invariants import Check


@dataclass(frozen=True)
class BlowupSpec:
    pattern: Graph
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if self.pattern.n == 0:
            raise ValueError("blow-up pattern must have at least one vertex")
        if len(self.sizes) != self.pattern.n:
            raise ValueError(f"{len(self.sizes)} sizes for a pattern on {self.pattern.n} vertices")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"part sizes must be positive, got {list(self.sizes)}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def is_balanced(self) -> bool:
        return max(self.sizes) - min(self.sizes) <= 1

    def to_json(self) -> dict:
        from .graph import to_graph6

        return {"pattern": to_graph6(self.pattern), "sizes": list(self.sizes)}


def _source_order(g: Graph) -> list[int]:
    # Descending degree, each connected piece explored before moving on so that
    # almost every assignment is constrained by an earlier neighbour.
    deg = g.degrees()
    placed = 0
    order = []
    todo = set(range(g.n))
    while todo:
        touching = [v for v in todo if g.rows[v] & placed]
        pool = touching or todo
        v = min(pool, key=lambda x: (-(g.rows[x] & placed).bit_count(), -deg[x], x))
        order.append(v)
        placed |= 1 << v
        todo.discard(v)
    return order


def find_homomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Backtracking search for a homomorphism ``g -> h``.

    Target candidates are tried in ascending index order; an assignment is
    rejected as soon as some unassigned neighbour is left without a candidate.
    Returns ``None`` only after the whole search space is exhausted.
    """
    if g.n == 0:
        return []
    if h.n == 0:
        return None
    order = _source_order(g)
    pos = {v: i for i, v in enumerate(order)}
    later = [[w for w in iter_bits(g.rows[v]) if pos[w] > pos[v]] for v in order]
    h_rows = h.rows
    full = h.mask
    domains = [full] * g.n
    assign = [-1] * g.n

    def search(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for c in iter_bits(domains[v]):
            saved = []
            ok = True
            for w in later[i]:
                d = domains[w] & h_rows[c]
                saved.append((w, domains[w]))
                domains[w] = d
                if not d:
                    ok = False
                    break
            if ok:
                assign[v] = c
                if search(i + 1):
                    return True
            for w, d in reversed(saved):
                domains[w] = d
        assign[v] = -1
        return False

    if search(0):
        return assign
    return None


def verify_homomorphism(g: Graph, h: Graph, m: Sequence[int]) -> Check:
    """Valid iff every edge of ``g`` lands on an edge of ``h``; witness is the first bad edge."""
    if len(m) != g.n:
        raise ValueError(f"map has {len(m)} entries for {g.n} source vertices")
    for v, t in enumerate(m):
        if not 0 <= t < h.n:
            raise ValueError(f"vertex {v} mapped to {t}, outside target range 0..{h.n - 1}")
    for u, v in g.edges():
        if not h.rows[m[u]] >> m[v] & 1:
            return Check(False, (u, v))
    return Check(True, None)


def blow_up(spec: BlowupSpec) -> tuple[Graph, list[int]]:
    """Build the blow-up; parts are laid out consecutively in pattern order.

    Returns the graph and ``part[v]``, the pattern vertex of each new vertex.
    """
    part: list[int] = []
    block = []
    start = 0
    for i, s in enumerate(spec.sizes):
        part.extend([i] * s)
        block.append(((1 << s) - 1) << start)
        start += s
    pattern_rows = spec.pattern.rows
    nbr_mask = []
    for i in range(spec.pattern.n):
        acc = 0
        for j in iter_bits(pattern_rows[i]):
            acc |= block[j]
        nbr_mask.append(acc)
    rows = [nbr_mask[p] for p in part]
    return Graph(len(part), rows), part


def balanced_sizes(k: int, n: int) -> list[int]:
    """Sizes differing by at most one summing to ``n``; the larger parts come first."""
    if k < 1:
        raise ValueError("pattern must have at least one vertex")
    if n < k:
        raise ValueError(f"n={n} is smaller than the pattern order {k}")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def balanced_blow_up(pattern: Graph, n: int) -> tuple[Graph, list[int]]:
    return blow_up(BlowupSpec(pattern, tuple(balanced_sizes(pattern.n, n))))


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of vertices with equal open neighbourhoods, ordered by least member."""
    by_row: dict[int, list[int]] = {}
    for v, row in enumerate(g.rows):
        by_row.setdefault(row, []).append(v)
    return sorted(by_row.values(), key=lambda c: c[0])


def _cycle_order(q: Graph, sizes: list[int]) -> Optional[list[int]]:
    """If ``q`` is a single cycle, its traversal minimising the size sequence."""
    k = q.n
    if k < 3 or any(q.degree(v) != 2 for v in range(k)):
        return None
    walk = [0]
    prev, cur = -1, 0
    while True:
        nxt = [w for w in iter_bits(q.rows[cur]) if w != prev]
        step = nxt[0] if prev != -1 else min(nxt)
        if step == 0:
            break
        walk.append(step)
        prev, cur = cur, step
    if len(walk) != k:
        return None
    best = None
    for seq in (walk, walk[::-1]):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            key = ([sizes[v] for v in rot], rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def recognize_blow_up(g: Graph) -> tuple[BlowupSpec, list[int]]:
    """Collapse non-adjacent twins; the quotient pattern has no twins left.

    Isolated vertices form a single class mapped to one isolated pattern vertex.
    When the quotient is a cycle it is relabelled as ``0-1-...-(k-1)`` along the
    traversal whose size sequence is lexicographically least.
    """
    if g.n == 0:
        raise ValueError("cannot recognise the empty graph as a blow-up")
    classes = twin_classes(g)
    k = len(classes)
    cls_of = [0] * g.n
    for i, c in enumerate(classes):
        for v in c:
            cls_of[v] = i
    rows = []
    for c in classes:
        acc = 0
        for w in iter_bits(g.rows[c[0]]):
            acc |= 1 << cls_of[w]
        rows.append(acc)
    quotient = Graph(k, rows)
    sizes = [len(c) for c in classes]
    order = _cycle_order(quotient, sizes)
    if order is not None:
        new_index = {old: new for new, old in enumerate(order)}
        quotient = quotient.relabel([new_index[i] for i in range(k)])
        sizes = [sizes[old] for old in order]
        cls_of = [new_index[c] for c in cls_of]
    return BlowupSpec(quotient, tuple(sizes)), cls_of
