"""Named graph families, seeded random triangle-free graphs, and exhaustive enumeration.

Randomness comes from :class:`random.Random` (MT19937 seeded with the integer
seed), one private instance per call, so outputs are reproducible per seed.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canonical import canonical_form
from .graph import Graph, from_edge_list, from_graph6, iter_bits, to_graph6
from .homomorphism import BlowupSpec, blow_up
from .invariants import find_triangle

MAX_ENUM_TRIANGLE_FREE = 10
MAX_ENUM_ALL = 8


@dataclass(frozen=True)
class CorpusItem:
    graph: Graph
    provenance: str
    canonical: str


# --- named families ------------------------------------------------------------

def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph with parts of size floor(n/r) or ceil(n/r)."""
    if r < 1 or n < 0:
        raise ValueError("turan graph needs r >= 1 and n >= 0")
    q, extra = divmod(n, r)
    part = []
    for i in range(r):
        part.extend([i] * (q + (1 if i < extra else 0)))
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def mobius_ladder() -> Graph:
    """8-cycle 0..7 plus the four chords joining vertices at distance 4."""
    return from_edge_list(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def g1(n: int) -> Graph:
    """C4 blow-up with parts n/8, 3n/8, n/8, 3n/8."""
    if n <= 0 or n % 8:
        raise ValueError(f"G1(n) requires 8 | n, got n={n}")
    m = n // 8
    return blow_up(BlowupSpec(cycle_graph(4), (m, 3 * m, m, 3 * m)))[0]


def g2(n: int) -> Graph:
    """C5 blow-up with parts n/7, 2n/7, n/7, n/7, 2n/7."""
    if n <= 0 or n % 7:
        raise ValueError(f"G2(n) requires 7 | n, got n={n}")
    m = n // 7
    return blow_up(BlowupSpec(cycle_graph(5), (m, 2 * m, m, m, 2 * m)))[0]


_NAMED = {
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "complete": (complete_graph, 1),
    "empty": (lambda k: from_edge_list(k, []), 1),
    "complete_bipartite": (complete_bipartite, 2),
    "turan": (turan_graph, 2),
    "mobius_ladder": (mobius_ladder, 0),
    "G1": (g1, 1),
    "G2": (g2, 1),
}

_ALIASES = {
    "HM": "mobius_ladder()",
    "H_M": "mobius_ladder()",
    "wagner": "mobius_ladder()",
}

_SHORT = re.compile(r"^(C|K|P)(\d+)$")
_SHORT_KAB = re.compile(r"^K(\d+),(\d+)$")


def named_graph(expr: str, *params: int) -> Graph:
    """Build a named graph from ``name`` plus integer params, or a call string.

    Accepted: ``cycle(k)``, ``path(k)``, ``complete(k)``, ``empty(k)``,
    ``complete_bipartite(a,b)``, ``turan(n,r)``, ``mobius_ladder``, ``G1(n)``,
    ``G2(n)``, and the shorthands ``C5``, ``K4``, ``P4``, ``K3,3``, ``HM``.
    """
    expr = expr.strip()
    if params:
        name, args = expr, list(params)
    else:
        if expr in _ALIASES:
            expr = _ALIASES[expr]
        m = _SHORT.match(expr)
        if m:
            name = {"C": "cycle", "K": "complete", "P": "path"}[m.group(1)]
            args = [int(m.group(2))]
        elif _SHORT_KAB.match(expr):
            m = _SHORT_KAB.match(expr)
            name, args = "complete_bipartite", [int(m.group(1)), int(m.group(2))]
        else:
            m = re.fullmatch(r"(\w+)\s*(?:\(([^)]*)\))?", expr)
            if not m:
                raise ValueError(f"cannot parse graph expression {expr!r}")
            name = m.group(1)
            raw = m.group(2)
            try:
                args = [int(a) for a in raw.split(",")] if raw and raw.strip() else []
            except ValueError:
                raise ValueError(f"non-integer parameter in {expr!r}") from None
    if name not in _NAMED:
        raise ValueError(f"unknown graph family {name!r}; known: {sorted(_NAMED)}")
    fn, arity = _NAMED[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


# --- random ----------------------------------------------------------------------

def random_triangle_free(n: int, p: float, seed: int) -> Graph:
    """Scan all pairs in a seeded random order and keep each with probability ``p``
    unless it would close a triangle.  ``p = 1`` yields a maximal triangle-free graph.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        # draw unconditionally so the stream does not depend on admissibility
        keep = rng.random() < p
        if keep and not rows[u] & rows[v]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def complete_to_maximal_triangle_free(g: Graph, seed: int) -> Graph:
    """Add uniformly random admissible non-edges until none remains.

    A single pass over a seeded shuffle of the non-edges has the same law:
    admissibility only ever shrinks as edges are added.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise ValueError(f"input graph has triangle {tri}")
    rng = random.Random(seed)
    missing = list(g.non_edges())
    rng.shuffle(missing)
    rows = list(g.rows)
    for u, v in missing:
        if not rows[u] & rows[v]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(g.n, rows)


def random_maximal_triangle_free(n: int, seed: int) -> Graph:
    """Seeded maximal triangle-free graph on ``n`` vertices.

    The starting graph is a random spanning subgraph of a random blow-up of K2,
    C5 or the Moebius ladder (or an empty graph), which is then completed.
    Planted starts give dense outputs with large minimum degree far more often
    than completing an empty graph does.
    """
    rng = random.Random(seed)
    kind = rng.choice(["K2", "C5", "HM", "empty"])
    if kind == "empty" or n < 8:
        start = Graph(n, [0] * n)
    else:
        pattern = {"K2": complete_graph(2), "C5": cycle_graph(5), "HM": mobius_ladder()}[kind]
        k = pattern.n
        cuts = sorted(rng.sample(range(1, n), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        full, _ = blow_up(BlowupSpec(pattern, tuple(sizes)))
        keep = rng.uniform(0.3, 1.0)
        start = from_edge_list(n, [e for e in full.edges() if rng.random() < keep])
        start = permute(start, rng.randrange(1 << 30))
    return complete_to_maximal_triangle_free(start, rng.randrange(1 << 30))


def permute(g: Graph, seed: int) -> Graph:
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


# --- enumeration -----------------------------------------------------------------

def _independent_sets(g: Graph) -> Iterator[int]:
    """All independent sets of ``g`` as bitmasks (including the empty set)."""
    n = g.n
    rows = g.rows

    def rec(v: int, chosen: int, blocked: int) -> Iterator[int]:
        if v == n:
            yield chosen
            return
        yield from rec(v + 1, chosen, blocked)
        if not blocked >> v & 1:
            yield from rec(v + 1, chosen | (1 << v), blocked | rows[v])

    yield from rec(0, 0, 0)


def _all_subsets(g: Graph) -> Iterator[int]:
    return iter(range(1 << g.n))


def _extend(parents: list[Graph], subsets) -> list[Graph]:
    seen: dict[str, Graph] = {}
    for parent in parents:
        n = parent.n
        for s in subsets(parent):
            rows = list(parent.rows)
            for u in iter_bits(s):
                rows[u] |= 1 << n
            rows.append(s)
            child = Graph(n + 1, rows)
            key = canonical_form(child)
            if key not in seen:
                seen[key] = from_graph6(key)
    return [seen[k] for k in sorted(seen)]


@lru_cache(maxsize=None)
def _triangle_free_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, []),)
    return tuple(_extend(list(_triangle_free_classes(n - 1)), _independent_sets))


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, []),)
    return tuple(_extend(list(_all_classes(n - 1)), _all_subsets))


def enumerate_triangle_free(n: int) -> Iterator[CorpusItem]:
    """One canonical representative per isomorphism class of triangle-free graphs on n vertices.

    Classes on n vertices come from adding a vertex joined to an independent set
    of each class on n-1 vertices; children are deduplicated by canonical form
    and emitted sorted by it.
    """
    if not 1 <= n <= MAX_ENUM_TRIANGLE_FREE:
        raise ValueError(f"triangle-free enumeration supports 1 <= n <= {MAX_ENUM_TRIANGLE_FREE}, got {n}")
    for i, g in enumerate(_triangle_free_classes(n)):
        yield CorpusItem(g, f"enumerated({i})", to_graph6(g))


def enumerate_all_graphs(n: int) -> Iterator[CorpusItem]:
    if not 1 <= n <= MAX_ENUM_ALL:
        raise ValueError(f"graph enumeration supports 1 <= n <= {MAX_ENUM_ALL}, got {n}")
    for i, g in enumerate(_all_classes(n)):
        yield CorpusItem(g, f"enumerated({i})", to_graph6(g))
