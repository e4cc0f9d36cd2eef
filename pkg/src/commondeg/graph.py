"""Immutable simple graphs stored as integer bit rows, plus graph6 / edge-list / JSON I/O."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1 << 16
_G6_SHORT_MAX = 62
_G6_MEDIUM_MAX = 258047
_G6_LONG_MAX = 68719476735


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge, so a
    common neighbourhood is a single ``&`` and its size a ``bit_count()``.
    Instances are immutable and hashable.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor: callers guarantee symmetry and no loops.
        # Use from_edge_list / from_rows for untrusted data.
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return cls(n, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges()}, g6={to_graph6(self)!r})"

    def __len__(self) -> int:
        return self.n

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = self.mask
        for u, row in enumerate(self.rows):
            for v in iter_bits((~row & full) >> (u + 1)):
                yield u, u + 1 + v

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return set(iter_bits(self.rows[v]))

    def common_neighbors(self, u: int, v: int) -> set[int]:
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("common_neighbors needs two distinct vertices")
        return set(iter_bits(self.rows[u] & self.rows[v]))

    def induced_subgraph(self, vs: Iterable[int]) -> Graph:
        return induced_subgraph(self, vs)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            pv = perm[v]
            acc = 0
            for u in iter_bits(row):
                acc |= 1 << perm[u]
            rows[pv] = acc
        return Graph(self.n, rows)

    def complement(self) -> Graph:
        full = self.mask
        return Graph(self.n, [~row & full & ~(1 << v) for v, row in enumerate(self.rows)])

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def neighbors(g: Graph, v: int) -> set[int]:
    return g.neighbors(v)


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return g.common_neighbors(u, v)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, re-indexed in ascending original order."""
    keep = sorted(set(vs))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    sel = bits_of(keep)
    rows = []
    for v in keep:
        acc = 0
        for u in iter_bits(g.rows[v] & sel):
            acc |= 1 << index[u]
        rows.append(acc)
    return Graph(len(keep), rows)


# --- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= _G6_SHORT_MAX:
        return chr(n + 63)
    if n <= _G6_MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _G6_LONG_MAX:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6-bit groups)."""
    if g.n > MAX_VERTICES:
        raise ValueError(f"n={g.n} exceeds supported maximum {MAX_VERTICES}")
    out = [_encode_n(g.n)]
    rows = g.rows
    acc = 0
    k = 0
    for j in range(1, g.n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = 0
                k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated long-form size header")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = (n << 6) | x
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated size header")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = (n << 6) | x
    if n > MAX_VERTICES:
        raise GraphFormatError(f"n={n} exceeds supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) < need:
        raise GraphFormatError(f"truncated payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphFormatError(f"{len(payload) - need} trailing bytes after payload")
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for x in payload:
        for shift in range(5, -1, -1):
            if bit == nbits:
                break
            if x >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [from_graph6(line) for line in lines if line.strip()]


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)


# --- edge list ---------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(t) for t in lines[0]]
        body = [tuple(int(t) for t in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    for e in body:
        if len(e) != 2:
            raise GraphFormatError(f"bad edge line {e}")
    try:
        return from_edge_list(n, body)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edge_list()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


# --- JSON --------------------------------------------------------------------

def to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "adjacency": [sorted(iter_bits(r)) for r in g.rows]}


def from_json_dict(data: dict) -> Graph:
    n = data["n"]
    adj = data["adjacency"]
    if len(adj) != n:
        raise GraphFormatError("adjacency length differs from n")
    try:
        return Graph.from_rows([bits_of(nb) for nb in adj])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def dumps(g: Graph) -> str:
    return json.dumps(to_json_dict(g))
