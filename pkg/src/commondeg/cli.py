"""Command-line front end: ``analyze``, ``verify``, ``search`` and ``generate``.

Exit codes: 0 no violation, 1 a theorem violation was found, 2 usage or input error.
Reports are JSON (schema ``commondeg-report/1``); apart from ``wall_time_s`` they
depend only on the command line.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Optional

from . import __version__
from .generators import (
    MAX_ENUM_ALL,
    MAX_ENUM_TRIANGLE_FREE,
    enumerate_all_graphs,
    enumerate_triangle_free,
    named_graph,
    random_graph,
    random_maximal_triangle_free,
    random_triangle_free,
)
from .graph import Graph, GraphFormatError, from_graph6, parse_edge_list, to_graph6
from .homomorphism import BlowupSpec, balanced_blow_up, blow_up, find_homomorphism, recognize_blow_up
from .invariants import (
    find_c5,
    find_triangle,
    is_bipartite,
    is_maximal_triangle_free,
    min_degree,
    odd_girth,
)
from .structure import (
    C5,
    _jsonable,
    check_bipartite_theorem,
    check_c3c5_corollary,
    check_c5_hom_theorem,
    check_c5free_theorem,
    check_disjointness_lemma,
    check_equality_case,
    check_lemma_min_degree_implies_delta2,
    check_mobius_lemma,
    check_odd_girth_lemma,
    check_parts_corollary,
    check_small_c5free_remark,
    construct_c5_homomorphism,
    delta2,
    induced_c5s,
    TheoremVerdict,
)

SCHEMA = "commondeg-report/1"
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- graph sources ---------------------------------------------------------------

def read_graphs(source: str) -> list[Graph]:
    """Graphs from ``named:EXPR``, ``g6:STRING``, a g6-lines file or an edge-list file."""
    if source.startswith("named:"):
        return [named_graph(source[len("named:"):])]
    if source.startswith("g6:"):
        return [from_graph6(source[3:])]
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"cannot read input {source!r}")
    text = path.read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        return []
    if re.fullmatch(r"\s*\d+\s+\d+\s*", lines[0]):
        return [parse_edge_list(text)]
    return [from_graph6(ln) for ln in lines]


def parse_range(text: str) -> list[int]:
    """Parse ``5``, ``5..9`` (also ``5-9``, ``5:9``) or comma lists such as ``5,10`` or ``5..7,9``."""
    ns: list[int] = []
    for piece in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-|:)\s*(\d+))?\s*", piece)
        if not m:
            raise UsageError(f"bad n-range {text!r}; use e.g. 5..9 or 5,10")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        if lo > hi:
            raise UsageError(f"empty n-range {text!r}")
        ns.extend(n for n in range(lo, hi + 1) if n not in ns)
    return ns


def corpus_graphs(corpus: str, family: str, ns: list[int], seed: int) -> Iterator[tuple[str, Graph]]:
    """Yield ``(provenance, graph)`` in a deterministic order."""
    if corpus == "enumerated":
        limit = MAX_ENUM_TRIANGLE_FREE if family == "trianglefree" else MAX_ENUM_ALL
        if min(ns) < 1 or max(ns) > limit:
            raise UsageError(f"enumerated {family} corpus supports 1 <= n <= {limit}")
        enum = enumerate_triangle_free if family == "trianglefree" else enumerate_all_graphs
        for n in ns:
            for item in enum(n):
                yield f"n={n}:{item.provenance}", item.graph
        return
    m = re.fullmatch(r"random:(\d+)", corpus)
    if m:
        rng = random.Random(seed)
        for i in range(int(m.group(1))):
            n = rng.choice(ns)
            sub = rng.randrange(1 << 31)
            if family == "maximal":
                g = random_maximal_triangle_free(n, sub)
            elif family == "trianglefree":
                g = random_triangle_free(n, rng.random(), sub)
            else:
                g = random_graph(n, rng.random(), sub)
            yield f"random({sub})", g
        return
    if corpus.startswith("file:"):
        for i, g in enumerate(read_graphs(corpus[len("file:"):])):
            yield f"file({i})", g
        return
    raise UsageError(f"unknown corpus {corpus!r}; use enumerated, random:COUNT or file:PATH")


# --- per-graph analysis ----------------------------------------------------------

def analyze_graph(g: Graph) -> dict:
    rec: dict[str, Any] = {"graph6": to_graph6(g), "n": g.n, "e": g.num_edges()}
    rec["min_degree"] = min_degree(g) if g.n else None
    rec["delta2"] = delta2(g)
    tri = find_triangle(g)
    rec["triangle_free"] = tri is None
    rec["triangle"] = tri
    rec["odd_girth"] = odd_girth(g)
    bip = is_bipartite(g)
    rec["bipartite"] = bip.holds
    rec["c5_free"] = find_c5(g) is None
    rec["maximal_triangle_free"] = is_maximal_triangle_free(g).holds if tri is None else None
    hom: dict[str, Any] = {"method": None, "map": None}
    if tri is None:
        built = construct_c5_homomorphism(g)
        hom["hypothesis"] = built.hypothesis
        if built.ok:
            hom["method"] = "bipartite" if built.status == "bipartite" else "constructive"
            hom["map"] = built.hom
        else:
            hom["construction_failure"] = built.reason
    if hom["map"] is None:
        oracle = find_homomorphism(g, C5)
        if oracle is not None:
            hom["method"], hom["map"] = "oracle", oracle
    rec["hom_c5"] = hom
    if g.n:
        spec, parts = recognize_blow_up(g)
        rec["blow_up"] = {"pattern": to_graph6(spec.pattern), "pattern_order": spec.pattern.n,
                          "sizes": list(spec.sizes), "parts": parts}
    return _jsonable(rec)


# --- verification ----------------------------------------------------------------

def _disjointness_all(g: Graph) -> TheoremVerdict:
    non_edges = list(g.non_edges())
    hyp_any, bad = False, None
    for x1, x2 in non_edges:
        for y1, y2 in non_edges:
            v = check_disjointness_lemma(g, x1, x2, y1, y2)
            if v.hypothesis:
                hyp_any = True
                if not v.conclusion:
                    bad = {"pairs": [[x1, x2], [y1, y2]], "intersection": v.witness}
                    return TheoremVerdict("lem-3", True, False, bad)
    return TheoremVerdict("lem-3", hyp_any, True)


def _parts_all(g: Graph) -> TheoremVerdict:
    cycles = induced_c5s(g) if find_triangle(g) is None else []
    for cyc in cycles:
        v = check_parts_corollary(g, cyc)
        if not v.conclusion:
            return TheoremVerdict("cor-2.5", True, False, {"cycle": list(cyc), "problems": v.witness})
    return TheoremVerdict("cor-2.5", bool(cycles), True, None, {"induced_c5": len(cycles)})


def _equality(g: Graph) -> TheoremVerdict:
    if find_triangle(g) is not None:
        return TheoremVerdict("no-equality-case", False, True)
    return check_equality_case(g)


THEOREMS: dict[str, tuple[Callable[..., TheoremVerdict], str]] = {
    "main-i": (check_bipartite_theorem, "trianglefree"),
    "main-ii": (check_c5_hom_theorem, "trianglefree"),
    "c5free": (check_c5free_theorem, "all"),
    "c5free-small": (check_small_c5free_remark, "all"),
    "lem-1": (check_lemma_min_degree_implies_delta2, "maximal"),
    "lem-2": (check_odd_girth_lemma, "trianglefree"),
    "cor-c3c5": (check_c3c5_corollary, "trianglefree"),
    "lem-3": (_disjointness_all, "trianglefree"),
    "cor-2.5": (_parts_all, "trianglefree"),
    "lem-4": (check_mobius_lemma, "trianglefree"),
    "equality": (_equality, "trianglefree"),
}


def _verify_one(job: tuple[str, str, Optional[str]]) -> dict:
    theorem, g6, alpha = job
    g = from_graph6(g6)
    fn, _ = THEOREMS[theorem]
    if theorem == "lem-1":
        verdict = fn(g, Fraction(alpha))
    else:
        verdict = fn(g)
    out = verdict.to_json()
    out["graph6"] = g6
    return out


def _run_parallel(fn: Callable, jobs: Iterable, workers: int) -> list:
    jobs = list(jobs)
    if workers <= 1 or len(jobs) < 64:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))


# --- search predicates -----------------------------------------------------------

_NORMALIZE = {
    "δ₂": "d2", "δ2": "d2", "delta2": "d2", "δ": "mindeg", "delta": "mindeg",
    "₅": "5", "₃": "3", "¬": "!", "≤": "<=", "≥": ">=", "≠": "!=", "∧": "&",
    "⌊": "floor(", "⌋": ")",
}
_FLAGS = {
    "triangle-free": "triangle_free", "trianglefree": "triangle_free",
    "bipartite": "bipartite", "c5-free": "c5_free", "c5free": "c5_free",
    "maximal": "maximal_triangle_free", "homc5": "hom_c5", "hom-c5": "hom_c5",
    "connected": "connected",
}
_CMP = {
    "=": lambda a, b: a == b, "==": lambda a, b: a == b, "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b, "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b, ">=": lambda a, b: a >= b,
}


def _parse_rhs(text: str) -> Callable[[int], Fraction]:
    t = text.replace(" ", "")
    m = re.fullmatch(r"floor\((\d*)\*?n/(\d+)\)", t)
    if m:
        a, b = int(m.group(1) or 1), int(m.group(2))
        return lambda n: Fraction((a * n) // b)
    m = re.fullmatch(r"(\d*)\*?n(?:/(\d+))?", t)
    if m:
        a, b = int(m.group(1) or 1), int(m.group(2) or 1)
        return lambda n: Fraction(a * n, b)
    if re.fullmatch(r"\d+", t):
        k = int(t)
        return lambda n: Fraction(k)
    raise UsageError(f"cannot parse right-hand side {text!r}")


def parse_predicate(text: str) -> Callable[[Graph, dict], bool]:
    """Parse a conjunction like ``triangle-free & d2 = n/8 & !homC5``.

    Terms join with ``&``, ``∧`` or ``and``; flags (``triangle-free``,
    ``bipartite``, ``c5-free``, ``maximal``, ``homC5``) may be negated with ``!``,
    ``¬`` or ``not``; comparisons put ``d2``, ``mindeg``, ``n`` or ``e`` on the left
    and an integer, ``a*n/b`` or ``floor(a*n/b)`` on the right.
    """
    s = text
    for k, v in _NORMALIZE.items():
        s = s.replace(k, v)
    terms = [t.strip() for t in re.split(r"&+|\band\b|,", s) if t.strip()]
    if not terms:
        raise UsageError("empty predicate")
    checks = []
    for term in terms:
        neg = False
        m = re.match(r"^(!|not\s+)\s*(.*)$", term)
        if m:
            neg, term = True, m.group(2).strip()
        key = term.lower()
        if key in _FLAGS:
            name = _FLAGS[key]
            checks.append(lambda g, cache, name=name, neg=neg: _flag(g, cache, name) != neg)
            continue
        m = re.fullmatch(r"(d2|mindeg|n|e)\s*(==|!=|<=|>=|=|<|>)\s*(.+)", term)
        if not m:
            raise UsageError(f"cannot parse predicate term {term!r}")
        lhs, op, rhs = m.group(1), _CMP[m.group(2)], _parse_rhs(m.group(3))
        checks.append(lambda g, cache, lhs=lhs, op=op, rhs=rhs, neg=neg:
                      op(_value(g, cache, lhs), rhs(g.n)) != neg)

    def predicate(g: Graph, cache: dict) -> bool:
        return all(c(g, cache) for c in checks)

    return predicate


def _value(g: Graph, cache: dict, name: str):
    if name not in cache:
        cache[name] = {
            "d2": lambda: delta2(g),
            "mindeg": lambda: min_degree(g) if g.n else 0,
            "n": lambda: g.n,
            "e": lambda: g.num_edges(),
        }[name]()
    return cache[name]


def _flag(g: Graph, cache: dict, name: str) -> bool:
    if name not in cache:
        if name == "triangle_free":
            cache[name] = find_triangle(g) is None
        elif name == "bipartite":
            cache[name] = is_bipartite(g).holds
        elif name == "c5_free":
            cache[name] = find_c5(g) is None
        elif name == "maximal_triangle_free":
            cache[name] = _flag(g, cache, "triangle_free") and is_maximal_triangle_free(g).holds
        elif name == "hom_c5":
            cache[name] = find_homomorphism(g, C5) is not None
        elif name == "connected":
            cache[name] = g.n == 0 or _reach(g) == g.mask
    return cache[name]


def _reach(g: Graph) -> int:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in range(g.n):
            if frontier >> v & 1:
                nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


# --- generate --------------------------------------------------------------------

def generate_family(spec: str, seed: int) -> list[Graph]:
    parts = spec.split(":")
    kind = parts[0]
    if kind == "named" and len(parts) >= 2:
        return [named_graph(":".join(parts[1:]))]
    if kind == "blowup" and len(parts) == 3:
        pattern = named_graph(parts[1])
        try:
            sizes = tuple(json.loads(parts[2]))
        except json.JSONDecodeError:
            raise UsageError(f"bad size list {parts[2]!r}") from None
        return [blow_up(BlowupSpec(pattern, sizes))[0]]
    if kind == "balanced" and len(parts) == 3:
        return [balanced_blow_up(named_graph(parts[1]), int(parts[2]))[0]]
    if kind == "random" and len(parts) >= 3:
        rng = random.Random(seed)
        if parts[1] == "trianglefree" and len(parts) == 5:
            n, p, count = int(parts[2]), float(parts[3]), int(parts[4])
            return [random_triangle_free(n, p, rng.randrange(1 << 31)) for _ in range(count)]
        if parts[1] == "maximal" and len(parts) == 4:
            n, count = int(parts[2]), int(parts[3])
            return [random_maximal_triangle_free(n, rng.randrange(1 << 31)) for _ in range(count)]
        if parts[1] == "all" and len(parts) == 5:
            n, p, count = int(parts[2]), float(parts[3]), int(parts[4])
            return [random_graph(n, p, rng.randrange(1 << 31)) for _ in range(count)]
    if kind == "enum" and len(parts) == 3:
        ns = parse_range(parts[2])
        enum = {"trianglefree": enumerate_triangle_free, "all": enumerate_all_graphs}.get(parts[1])
        if enum is None:
            raise UsageError(f"unknown enumeration family {parts[1]!r}")
        return [item.graph for n in ns for item in enum(n)]
    raise UsageError(
        f"bad family spec {spec!r}; use named:EXPR, blowup:PATTERN:[sizes], balanced:PATTERN:n, "
        "random:trianglefree:n:p:count, random:maximal:n:count, random:all:n:p:count, enum:trianglefree|all:n"
    )


# --- commands --------------------------------------------------------------------

def _report(command: str, arguments: dict, records: list, aggregate: dict, started: float) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": command,
        "arguments": arguments,
        "records": records,
        "aggregate": aggregate,
        "wall_time_s": round(time.perf_counter() - started, 3),
    }


def cmd_analyze(args) -> tuple[dict, int]:
    started = time.perf_counter()
    graphs = read_graphs(args.input)
    records = _run_parallel(_analyze_g6, [to_graph6(g) for g in graphs], args.jobs)
    agg = {"graphs_scanned": len(records), "hypothesis_satisfied": 0, "violations": 0}
    return _report("analyze", {"input": args.input}, records, agg, started), EXIT_OK


def _analyze_g6(g6: str) -> dict:
    return analyze_graph(from_graph6(g6))


def cmd_verify(args) -> tuple[dict, int]:
    started = time.perf_counter()
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(THEOREMS)}")
    family = args.family or THEOREMS[args.theorem][1]
    if family == "maximal" and args.corpus == "enumerated":
        family = "trianglefree"
    ns = parse_range(args.n_range)
    alpha = None
    if args.theorem == "lem-1":
        alpha = str(Fraction(args.alpha))
    graphs = [g for _, g in corpus_graphs(args.corpus, family, ns, args.seed)]
    if args.theorem == "lem-1":
        for g in graphs:
            if find_triangle(g) is not None:
                raise UsageError(f"lem-1 needs triangle-free graphs; {to_graph6(g)} has a triangle")
    results = _run_parallel(_verify_one, [(args.theorem, to_graph6(g), alpha) for g in graphs], args.jobs)
    records = [r for r in results if r["hypothesis"] or r["violation"]]
    violations = [r for r in results if r["violation"]]
    agg = {
        "graphs_scanned": len(results),
        "hypothesis_satisfied": sum(r["hypothesis"] for r in results),
        "violations": len(violations),
        "violation_graph6": [r["graph6"] for r in violations],
    }
    if args.theorem == "main-ii":
        hyp = [r for r in results if r["hypothesis"]]
        agg["constructive_success"] = sum(bool(r["details"].get("constructive")) for r in hyp)
        agg["oracle_success"] = sum(bool(r["details"].get("oracle")) for r in hyp)
    arguments = {"theorem": args.theorem, "n_range": args.n_range, "corpus": args.corpus,
                 "family": family, "seed": args.seed, "alpha": alpha}
    code = EXIT_VIOLATION if violations else EXIT_OK
    return _report("verify", arguments, records, agg, started), code


def cmd_search(args) -> tuple[dict, int]:
    started = time.perf_counter()
    pred = parse_predicate(args.predicate)
    ns = parse_range(args.n_range)
    scanned = 0
    matches = []
    exhausted = False
    for _, g in corpus_graphs(args.corpus, args.family, ns, args.seed):
        if args.budget is not None and scanned >= args.budget:
            exhausted = True
            break
        scanned += 1
        if pred(g, {}):
            matches.append(g)
    records = _run_parallel(_analyze_g6, [to_graph6(g) for g in matches], args.jobs)
    agg = {"graphs_scanned": scanned, "matches": len(records), "budget_exhausted": exhausted,
           "hypothesis_satisfied": len(records), "violations": 0}
    arguments = {"predicate": args.predicate, "n_range": args.n_range, "corpus": args.corpus,
                 "family": args.family, "seed": args.seed, "budget": args.budget}
    return _report("search", arguments, records, agg, started), EXIT_OK


def cmd_generate(args) -> tuple[str, int]:
    graphs = generate_family(args.family, args.seed)
    return "".join(to_graph6(g) + "\n" for g in graphs), EXIT_OK


# --- entry point -----------------------------------------------------------------

def _text_summary(report: dict) -> str:
    lines = [f"{report['command']}: " + ", ".join(f"{k}={v}" for k, v in report["aggregate"].items()
                                                  if not isinstance(v, list))]
    for rec in report["records"]:
        if "statement" in rec:
            lines.append(f"{rec['graph6']}\t{rec['statement']}\thyp={rec['hypothesis']}\t"
                         f"concl={rec['conclusion']}\tviolation={rec['violation']}")
        else:
            lines.append(f"{rec['graph6']}\tn={rec['n']}\te={rec['e']}\tdelta={rec['min_degree']}\t"
                         f"delta2={rec['delta2']}\todd_girth={rec['odd_girth']}\t"
                         f"homC5={rec['hom_c5']['method']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commondeg", description="Minimum common degree toolkit for triangle-free graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--jobs", "-j", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="compute every invariant of each input graph")
    p.add_argument("input", nargs="?", help="g6-lines file, edge-list file, named:EXPR or g6:STRING")
    p.add_argument("--input", "-i", dest="input_flag")

    p = sub.add_parser("verify", parents=[common], help="check a theorem or lemma over a corpus")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("--n-range", default="5..8")
    p.add_argument("--corpus", default="enumerated", help="enumerated | random:COUNT | file:PATH")
    p.add_argument("--family", choices=["trianglefree", "all", "maximal"])
    p.add_argument("--alpha", default="1/15", help="rational alpha for lem-1")
    p.add_argument("--input", "-i", dest="input_flag", help="shorthand for --corpus file:PATH")

    p = sub.add_parser("search", parents=[common], help="list corpus graphs satisfying a predicate")
    p.add_argument("predicate")
    p.add_argument("--n-range", default="8")
    p.add_argument("--corpus", default="enumerated")
    p.add_argument("--family", choices=["trianglefree", "all", "maximal"], default="trianglefree")
    p.add_argument("--budget", type=int, default=None, help="maximum number of graphs to scan")
    p.add_argument("--input", "-i", dest="input_flag", help="shorthand for --corpus file:PATH")

    p = sub.add_parser("generate", parents=[common], help="write graph6 lines for a family")
    p.add_argument("family", help="named:EXPR | blowup:PATTERN:[sizes] | balanced:PATTERN:n | "
                                  "random:trianglefree:n:p:count | random:maximal:n:count | enum:trianglefree:n")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.jobs = max(1, args.jobs)
    try:
        if args.command == "analyze":
            args.input = args.input_flag or args.input
            if not args.input:
                raise UsageError("analyze needs an input")
            report, code = cmd_analyze(args)
        elif args.command == "verify":
            if args.input_flag:
                args.corpus = f"file:{args.input_flag}"
            report, code = cmd_verify(args)
        elif args.command == "search":
            if args.input_flag:
                args.corpus = f"file:{args.input_flag}"
            report, code = cmd_search(args)
        else:
            text, code = cmd_generate(args)
            _emit(text, args.output)
            return code
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"commondeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = _text_summary(report)
    _emit(text, args.output)
    if code == EXIT_VIOLATION:
        print(f"commondeg: THEOREM VIOLATION in {report['aggregate']['violations']} graph(s)", file=sys.stderr)
    return code


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
