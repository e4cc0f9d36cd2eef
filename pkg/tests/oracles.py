"""Independent reference computations used only by the tests.

None of these reuse the package's bit-row machinery beyond reading adjacency.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def adjacency_matrix(g) -> list[list[bool]]:
    return [[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)]


def naive_min_common_degree(g):
    """Triple loop over non-adjacent pairs and every third vertex."""
    a = adjacency_matrix(g)
    n = g.n
    best = math.inf
    for x in range(n):
        for y in range(x + 1, n):
            if a[x][y]:
                continue
            c = 0
            for z in range(n):
                if a[x][z] and a[y][z]:
                    c += 1
            best = min(best, c)
    return best


def naive_common_neighbors(g, u, v) -> set[int]:
    a = adjacency_matrix(g)
    return {w for w in range(g.n) if a[u][w] and a[v][w]}


def brute_force_hom(g, h):
    """First map in itertools.product order that sends every edge to an edge, else None."""
    edges = list(g.edges())
    for m in itertools.product(range(h.n), repeat=g.n):
        if all(h.has_edge(m[u], m[v]) for u, v in edges):
            return list(m)
    return None


def _pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_orbit_count(n: int, triangle_free: bool) -> int:
    """Number of isomorphism classes, by sweeping all labelled graphs and marking whole orbits.

    Labelled graphs are integers over the pair bits; for every unvisited code the
    full orbit under all n! relabellings is computed with numpy and marked.
    """
    pairs = _pairs(n)
    m = len(pairs)
    codes = np.arange(1 << m, dtype=np.int64)
    ok = np.ones(1 << m, dtype=bool)
    if triangle_free:
        index = {p: k for k, p in enumerate(pairs)}
        for a, b, c in itertools.combinations(range(n), 3):
            mask = (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
            ok &= (codes & mask) != mask
    index = {p: k for k, p in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    perm_maps = np.array(perm_maps, dtype=np.int64)  # (n!, m): bit k goes to perm_maps[:, k]
    visited = ~ok
    classes = 0
    for code in np.flatnonzero(ok):
        if visited[code]:
            continue
        classes += 1
        bits = (code >> np.arange(m)) & 1
        images = ((bits[None, :] << perm_maps)).sum(axis=1)
        visited[images] = True
    return classes


def burnside_graph_count(n: int) -> int:
    """Unlabelled graphs on n vertices: average over S_n of 2^(cycles on unordered pairs)."""
    pairs = _pairs(n)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        cycles = 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                q = tuple(sorted((perm[q[0]], perm[q[1]])))
        total += 2 ** cycles
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)
