"""The five-part decomposition around an induced C5, the explicit map to C5, and
predicate forms of the theorems and lemmas about minimum common degree.

Cycle positions are 0..4; part ``i`` of the decomposition is the common
neighbourhood of the two cycle vertices flanking position ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .generators import cycle_graph, mobius_ladder
from .graph import Graph, iter_bits
from .homomorphism import find_homomorphism, recognize_blow_up, verify_homomorphism
from .canonical import canonical_form
from .invariants import (
    COMPLETE_GRAPH_DELTA2,
    contains_subgraph,
    find_c5,
    find_triangle,
    is_bipartite,
    is_maximal_triangle_free,
    min_common_degree,
    min_degree,
    odd_girth,
    shortest_odd_cycle,
)

C5 = cycle_graph(5)
H_M = mobius_ladder()

CLAIM_FEW_PARTS = "claim-1"  # neighbours in fewer than two parts
CLAIM_CONSECUTIVE = "claim-2"  # neighbours in two consecutive parts
CLAIM_W_INDEPENDENT = "claim-3"  # an edge inside one class W_i
CLAIM_W_GAP = "claim-4"  # an edge between W_i and W_{i+2}


def delta2(g: Graph) -> int | float:
    # graphs on fewer than two vertices have no non-edge at all
    return min_common_degree(g) if g.n >= 2 else COMPLETE_GRAPH_DELTA2


@dataclass(frozen=True)
class C5Decomposition:
    cycle: tuple[int, ...]
    D: tuple[frozenset[int], ...]
    W: tuple[frozenset[int], ...]
    unclassified: dict[int, str] = field(default_factory=dict)

    @property
    def block_of(self) -> dict[int, int]:
        out = {}
        for i in range(5):
            for v in self.D[i] | self.W[i]:
                out[v] = i
        return out

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "D": [sorted(d) for d in self.D],
            "W": [sorted(w) for w in self.W],
            "unclassified": {str(v): r for v, r in sorted(self.unclassified.items())},
        }


@dataclass(frozen=True)
class C5Construction:
    """Result of the explicit construction of a map to C5.

    ``status`` is ``"bipartite"``, ``"constructed"`` or ``"failed"``; on failure
    ``reason`` names the violated claim (or the odd girth found).
    """

    status: str
    hom: Optional[list[int]]
    decomposition: Optional[C5Decomposition] = None
    reason: Optional[str] = None
    hypothesis: bool = False

    @property
    def ok(self) -> bool:
        return self.hom is not None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "map": self.hom,
            "decomposition": self.decomposition.to_json() if self.decomposition else None,
            "reason": self.reason,
            "hypothesis": self.hypothesis,
        }


@dataclass(frozen=True)
class TheoremVerdict:
    statement: str
    hypothesis: bool
    conclusion: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        return self.hypothesis and not self.conclusion

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "violation": self.violation,
            "witness": _jsonable(self.witness),
            "details": _jsonable(self.details),
        }


def _jsonable(x: Any) -> Any:
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and x == float("inf"):
        return "infinite"
    return x


# --- decomposition ---------------------------------------------------------------

def normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex comes first and its second entry is below its last."""
    c = list(cycle)
    k = len(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if k > 2 and c[1] > c[-1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            adjacent = g.has_edge(cycle[a], cycle[b])
            if adjacent != (b - a == 1 or (a == 0 and b == k - 1)):
                return False
    return True


def c5_decomposition(g: Graph, cycle: Sequence[int]) -> C5Decomposition:
    """Split ``V(g)`` into D_0..D_4 around the induced 5-cycle and classify the rest.

    A vertex outside D whose D-neighbours lie in exactly the two parts flanking
    ``i`` goes to W_i.  Any other vertex is left unclassified and labelled with
    the claim its neighbourhood pattern contradicts.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise ValueError(f"graph has triangle {tri}")
    if len(cycle) != 5 or not is_induced_cycle(g, cycle):
        raise ValueError(f"{list(cycle)} is not an induced 5-cycle")
    v = list(cycle)
    rows = g.rows
    d_bits = [rows[v[(i - 1) % 5]] & rows[v[(i + 1) % 5]] for i in range(5)]
    d_all = 0
    for b in d_bits:
        d_all |= b
    w_sets: list[set[int]] = [set() for _ in range(5)]
    unclassified: dict[int, str] = {}
    for x in iter_bits(g.mask & ~d_all):
        touched = [i for i in range(5) if rows[x] & d_bits[i]]
        if len(touched) < 2:
            unclassified[x] = CLAIM_FEW_PARTS
            continue
        if any((i + 1) % 5 in touched for i in touched):
            unclassified[x] = CLAIM_CONSECUTIVE
            continue
        # two non-consecutive parts i-1, i+1 determine i
        a, b = touched
        i = (a + 1) % 5 if (a + 2) % 5 == b else (b + 1) % 5
        w_sets[i].add(x)
    return C5Decomposition(
        cycle=tuple(v),
        D=tuple(frozenset(iter_bits(b)) for b in d_bits),
        W=tuple(frozenset(w) for w in w_sets),
        unclassified=unclassified,
    )


def c5_hypothesis(g: Graph) -> bool:
    """n >= 8 and minimum common degree above floor(n/8)."""
    return g.n >= 8 and delta2(g) > g.n // 8


def construct_c5_homomorphism(g: Graph) -> C5Construction:
    """Build a map ``g -> C5`` following the part/class decomposition.

    The construction is attempted whatever the minimum common degree; the
    ``hypothesis`` flag records whether the threshold regime applies.  Raises
    ``ValueError`` on a triangle.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise ValueError(f"graph has triangle {tri}; the construction requires triangle-free input")
    hyp = c5_hypothesis(g)
    bip = is_bipartite(g)
    if bip:
        return C5Construction("bipartite", list(bip.witness), hypothesis=hyp)
    cyc = shortest_odd_cycle(g)
    if len(cyc) != 5:
        return C5Construction("failed", None, reason=f"lemma-2: shortest odd cycle has length {len(cyc)}", hypothesis=hyp)
    dec = c5_decomposition(g, normalize_cycle(cyc))
    if dec.unclassified:
        labels = sorted(set(dec.unclassified.values()))
        return C5Construction("failed", None, dec, reason=",".join(labels), hypothesis=hyp)
    block = dec.block_of
    hom = [block[v] for v in range(g.n)]
    check = verify_homomorphism(g, C5, hom)
    if check:
        return C5Construction("constructed", hom, dec, hypothesis=hyp)
    x, y = check.witness
    gap = (hom[x] - hom[y]) % 5
    reason = CLAIM_W_INDEPENDENT if gap == 0 else CLAIM_W_GAP if gap in (2, 3) else "unexpected-edge"
    return C5Construction("failed", None, dec, reason=f"{reason}: edge {x}-{y}", hypothesis=hyp)


# --- theorem and lemma predicates ------------------------------------------------

def check_bipartite_theorem(g: Graph) -> TheoremVerdict:
    """Triangle-free, n >= 5 and min common degree > floor(n/5) imply bipartite."""
    tri_free = find_triangle(g) is None
    d2 = delta2(g)
    hyp = tri_free and g.n >= 5 and d2 > g.n // 5
    bip = is_bipartite(g)
    return TheoremVerdict("main-i", hyp, bip.holds, bip.witness, {"delta2": d2, "threshold": g.n // 5})


def check_c5_hom_theorem(g: Graph, cross_check: bool = True) -> TheoremVerdict:
    """Triangle-free, n >= 8 and min common degree > floor(n/8) imply a map to C5.

    The constructive route is tried first and the backtracking oracle second.
    With ``cross_check`` the oracle also runs when construction succeeded, so
    the two routes can be compared on every hypothesis-satisfying graph.
    """
    tri_free = find_triangle(g) is None
    d2 = delta2(g)
    hyp = tri_free and g.n >= 8 and d2 > g.n // 8
    details: dict[str, Any] = {"delta2": d2, "threshold": g.n // 8}
    if not tri_free:
        oracle = find_homomorphism(g, C5)
        details["oracle"] = oracle is not None
        return TheoremVerdict("main-ii", hyp, oracle is not None, oracle, details)
    built = construct_c5_homomorphism(g)
    details["constructive"] = built.ok
    details["construction"] = built.status if built.ok else built.reason
    if built.ok and not (cross_check and hyp):
        return TheoremVerdict("main-ii", hyp, True, built.hom, details)
    oracle = find_homomorphism(g, C5)
    details["oracle"] = oracle is not None
    if oracle is not None:
        assert verify_homomorphism(g, C5, oracle)
    hom = built.hom if built.ok else oracle
    return TheoremVerdict("main-ii", hyp, hom is not None, hom, details)


def check_c5free_theorem(g: Graph) -> TheoremVerdict:
    """C5-free, n >= 5 and min common degree >= 3 imply bipartite."""
    c5 = find_c5(g)
    d2 = delta2(g)
    hyp = c5 is None and g.n >= 5 and d2 >= 3
    bip = is_bipartite(g)
    return TheoremVerdict("c5free", hyp, bip.holds, bip.witness, {"delta2": d2, "c5": c5})


def check_small_c5free_remark(g: Graph) -> TheoremVerdict:
    """On 3 or 4 vertices, C5-free with min common degree >= 3 forces the complete graph."""
    d2 = delta2(g)
    hyp = g.n in (3, 4) and find_c5(g) is None and d2 >= 3
    complete = g.num_edges() == g.n * (g.n - 1) // 2
    return TheoremVerdict("c5free-small", hyp, complete, None, {"delta2": d2})


def check_lemma_min_degree_implies_delta2(g: Graph, alpha: Fraction) -> TheoremVerdict:
    """Maximal triangle-free with min degree > (1/3 + alpha) n implies min common degree > 3 alpha n.

    Thresholds are exact rationals.  Raises ``ValueError`` for graphs with a
    triangle (maximality is undefined there) or alpha outside (0, 2/3).
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < Fraction(2, 3):
        raise ValueError(f"alpha must lie in (0, 2/3), got {alpha}")
    maximal = is_maximal_triangle_free(g)
    deg_bound = (Fraction(1, 3) + alpha) * g.n
    d2_bound = 3 * alpha * g.n
    hyp = maximal.holds and g.n >= 1 and min_degree(g) > deg_bound
    d2 = delta2(g)
    return TheoremVerdict(
        "lem-1", hyp, d2 > d2_bound, None,
        {"alpha": alpha, "min_degree": min_degree(g) if g.n else None, "degree_bound": deg_bound,
         "delta2": d2, "delta2_bound": d2_bound},
    )


def check_odd_girth_lemma(g: Graph) -> TheoremVerdict:
    """Min common degree >= 1 implies bipartite or odd girth 3 or 5."""
    d2 = delta2(g)
    og = odd_girth(g)
    hyp = g.n >= 2 and d2 >= 1
    return TheoremVerdict("lem-2", hyp, og is None or og in (3, 5), None, {"delta2": d2, "odd_girth": og})


def check_c3c5_corollary(g: Graph) -> TheoremVerdict:
    """{C3, C5}-free with min common degree >= 1 implies bipartite."""
    d2 = delta2(g)
    hyp = g.n >= 2 and d2 >= 1 and find_triangle(g) is None and find_c5(g) is None
    bip = is_bipartite(g)
    return TheoremVerdict("cor-c3c5", hyp, bip.holds, bip.witness, {"delta2": d2})


def check_disjointness_lemma(g: Graph, x1: int, x2: int, y1: int, y2: int) -> TheoremVerdict:
    """Common neighbourhoods of two non-edges joined by an edge are disjoint (triangle-free host).

    Unmet preconditions give ``hypothesis = False`` rather than an error.
    """
    rows = g.rows
    hyp = (
        find_triangle(g) is None
        and x1 != x2 and y1 != y2
        and not g.has_edge(x1, x2) and not g.has_edge(y1, y2)
        and any(g.has_edge(a, b) for a in (x1, x2) for b in (y1, y2))
    )
    inter = rows[x1] & rows[x2] & rows[y1] & rows[y2] if x1 != x2 and y1 != y2 else 0
    return TheoremVerdict("lem-3", hyp, inter == 0, sorted(iter_bits(inter)) or None)


def check_parts_corollary(g: Graph, cycle: Sequence[int]) -> TheoremVerdict:
    """Around an induced C5 of a triangle-free graph the parts D_i are pairwise disjoint,
    independent, and every edge inside D joins consecutive parts."""
    rows = g.rows
    v = list(cycle)
    hyp = find_triangle(g) is None and len(v) == 5 and is_induced_cycle(g, v)
    d_bits = [rows[v[(i - 1) % 5]] & rows[v[(i + 1) % 5]] for i in range(5)]
    problems = []
    for i in range(5):
        for j in range(i + 1, 5):
            if d_bits[i] & d_bits[j]:
                problems.append(("overlap", i, j))
    for i in range(5):
        for x in iter_bits(d_bits[i]):
            for j in range(5):
                if rows[x] & d_bits[j] and (j - i) % 5 not in (1, 4):
                    problems.append(("edge", i, j))
    return TheoremVerdict("cor-2.5", hyp, not problems, problems or None)


def check_mobius_lemma(g: Graph) -> TheoremVerdict:
    """Triangle-free and containing the Moebius ladder implies min common degree <= floor(n/8)."""
    tri_free = find_triangle(g) is None
    emb = contains_subgraph(g, H_M) if g.n >= 8 else None
    d2 = delta2(g)
    hyp = tri_free and bool(emb)
    return TheoremVerdict("lem-4", hyp, d2 <= g.n // 8, emb.witness if emb else None,
                          {"delta2": d2, "threshold": g.n // 8})


def induced_c5s(g: Graph) -> list[tuple[int, ...]]:
    """Every induced 5-cycle once, in normalized form, sorted."""
    rows = g.rows
    out = set()
    for a in range(g.n):
        above = g.mask & ~((1 << (a + 1)) - 1)
        for b in iter_bits(rows[a] & above):
            for e in iter_bits(rows[a] & above):
                if e <= b or g.has_edge(b, e):
                    continue
                for c in iter_bits(rows[b] & above & ~rows[a] & ~rows[e]):
                    if c == e:
                        continue
                    for d in iter_bits(rows[c] & rows[e] & above & ~rows[a] & ~rows[b]):
                        out.add((a, b, c, d, e))
    return sorted(out)


def _is_balanced_blow_up_of(g: Graph, pattern: Graph) -> tuple[bool, Any]:
    spec, _ = recognize_blow_up(g)
    ok = (
        spec.pattern.n == pattern.n
        and canonical_form(spec.pattern) == canonical_form(pattern)
        and len(set(spec.sizes)) == 1
    )
    return ok, spec


def check_equality_case(g: Graph) -> TheoremVerdict:
    """Classify the two equality cases of the minimum-common-degree thresholds.

    * n divisible by 5, min common degree n/5, not bipartite: must be a balanced C5 blow-up.
    * n divisible by 8, min common degree n/8, no map to C5: must be a balanced
      Moebius-ladder blow-up.

    Anything else is reported with ``statement == "no-equality-case"`` and a
    false hypothesis.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise ValueError(f"graph has triangle {tri}")
    n = g.n
    if n == 0:
        return TheoremVerdict("no-equality-case", False, True)
    d2 = delta2(g)
    if n % 5 == 0 and d2 == n // 5 and not is_bipartite(g):
        ok, spec = _is_balanced_blow_up_of(g, C5)
        return TheoremVerdict("equality-c5", True, ok, spec, {"delta2": d2})
    if n % 8 == 0 and d2 == n // 8 and find_homomorphism(g, C5) is None:
        ok, spec = _is_balanced_blow_up_of(g, H_M)
        return TheoremVerdict("equality-mobius", True, ok, spec, {"delta2": d2})
    return TheoremVerdict("no-equality-case", False, True, None, {"delta2": d2})

