"""Command-line front end: polynomials, oracle checks, and P2-collision search over graph6 streams."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .chromatic import chromatic_polynomial
from .counting import (
    PatternTooLarge,
    clique_poly,
    count_poly,
    hexagon_poly,
    pairs_poly,
    product_clique_poly,
)
from .graph import Graph, GraphError, canonical_key, parse_graph6, read_graph6_lines
from .oracle import BudgetExceeded, DEFAULT_BUDGET, oracle_count
from .poly import RationalPoly, format_human, format_json
from .trees import gds_multiset, tree_hypercube_poly

log = logging.getLogger(__name__)

EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class CollisionGroup:
    pairs: RationalPoly
    members: list[str]                       # one graph6 record per isomorphism class
    chromatic: dict[str, RationalPoly]

    @property
    def chromatic_classes(self) -> int:
        return len(set(self.chromatic.values()))


@dataclass
class CollisionReport:
    groups: list[CollisionGroup] = field(default_factory=list)
    counterexamples: list[CollisionGroup] = field(default_factory=list)
    skipped_lines: list[int] = field(default_factory=list)
    graphs_read: int = 0


def search_p2_collisions(lines: Iterable[str]) -> CollisionReport:
    """Group graphs by exact pairs polynomial; groups holding two chromatic polynomials are counterexamples."""
    report = CollisionReport()
    seen: set[bytes] = set()
    by_pairs: dict[RationalPoly, list[tuple[str, Graph]]] = {}
    for lineno, rec, g in read_graph6_lines(lines):
        if isinstance(g, Exception):
            log.warning("line %d: skipping malformed record %r: %s", lineno, rec, g)
            report.skipped_lines.append(lineno)
            continue
        report.graphs_read += 1
        key = canonical_key(g)
        if key in seen:
            continue
        seen.add(key)
        by_pairs.setdefault(pairs_poly(g), []).append((rec, g))
    for p in sorted(by_pairs, key=lambda q: (len(q.coeffs), q.coeffs)):
        members = sorted(by_pairs[p], key=lambda m: m[0])
        if len(members) < 2:
            continue
        group = CollisionGroup(p, [rec for rec, _ in members],
                               {rec: chromatic_polynomial(g) for rec, g in members})
        report.groups.append(group)
        if group.chromatic_classes > 1:
            report.counterexamples.append(group)
    return report


def _poly_payload(p: RationalPoly) -> dict:
    return {"polynomial": format_json(p), "degree": p.degree if not p.is_zero() else -1}


class _UsageError(Exception):
    pass


def _graph(s: str) -> Graph:
    try:
        return parse_graph6(s)
    except GraphError as e:
        raise _UsageError(f"bad graph6 {s!r}: {e}") from e


def _sizes(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from e


def _poly_command(fn):
    def run(args) -> tuple[int, dict, str]:
        p = fn(args)
        return 0, _poly_payload(p), format_human(p)
    return run


@_poly_command
def _chromatic(args):
    return chromatic_polynomial(_graph(args.g6))


@_poly_command
def _count(args):
    return count_poly(_graph(args.g6), _graph(args.pattern_g6))


@_poly_command
def _pairs(args):
    return pairs_poly(_graph(args.g6))


@_poly_command
def _clique(args):
    if args.r < 2:
        raise _UsageError("--r must be at least 2")
    return clique_poly(_graph(args.g6), args.r)


@_poly_command
def _product(args):
    if not args.sizes or min(args.sizes) < 2:
        raise _UsageError("--sizes needs clique sizes of at least 2")
    g = _graph(args.g6)
    if len(args.sizes) > g.n:
        raise _UsageError("more cliques than base vertices")
    return product_clique_poly(g, args.sizes)


@_poly_command
def _hexagon(args):
    return hexagon_poly(_graph(args.g6))


@_poly_command
def _tree_qd(args):
    if args.d < 0:
        raise _UsageError("--d must be non-negative")
    try:
        return tree_hypercube_poly(_graph(args.g6), args.d)
    except GraphError as e:
        raise _UsageError(str(e)) from e


def _gds(args):
    g = _graph(args.g6)
    try:
        ms = gds_multiset(g, args.i)
    except (GraphError, ValueError) as e:
        raise _UsageError(str(e)) from e
    entries = sorted(ms.items())
    payload = {"i": args.i, "entries": [[e.size, e.internal, e.external, c] for e, c in entries]}
    text = "\n".join(f"size={e.size} int={e.internal} ext={e.external} x{c}" for e, c in entries)
    return 0, payload, text


def _oracle(args):
    if args.k < 0:
        raise _UsageError("--k must be non-negative")
    n = oracle_count(_graph(args.g6), _graph(args.pattern_g6), args.k, args.budget)
    return 0, {"k": args.k, "count": n}, str(n)


def _verify(args):
    g, h = _graph(args.g6), _graph(args.pattern_g6)
    p = count_poly(g, h)
    rows = []
    for k in range(args.kmax + 1):
        want = oracle_count(g, h, k, args.budget)
        got = p(k)
        rows.append({"k": k, "polynomial": str(got), "oracle": want})
        if got != want:
            msg = f"disagreement at G={args.g6} H={args.pattern_g6} k={k}: polynomial {got}, oracle {want}"
            return EXIT_DISAGREE, {"agree": False, "checks": rows, **_poly_payload(p)}, msg
    return 0, {"agree": True, "checks": rows, **_poly_payload(p)}, \
        f"all k agree (0..{args.kmax}): {format_human(p)}"


def _search(args):
    if args.input == "-":
        report = search_p2_collisions(sys.stdin)
    else:
        try:
            with open(args.input, encoding="ascii", errors="replace") as fh:
                report = search_p2_collisions(fh)
        except OSError as e:
            raise _UsageError(f"cannot read {args.input}: {e}") from e
    payload = {
        "graphs_read": report.graphs_read,
        "skipped_lines": report.skipped_lines,
        "collision_groups": len(report.groups),
        "counterexamples": [
            {"pairs": format_json(c.pairs),
             "members": [{"g6": m, "chromatic": format_json(c.chromatic[m])} for m in c.members]}
            for c in report.counterexamples],
    }
    out = [f"read {report.graphs_read} graphs, {len(report.skipped_lines)} skipped, "
           f"{len(report.groups)} collision groups, {len(report.counterexamples)} counterexamples"]
    for c in report.counterexamples:
        out.append(f"pairs polynomial: {format_human(c.pairs)}")
        out.extend(f"  {m}: {format_human(c.chromatic[m])}" for m in c.members)
    return 0, payload, "\n".join(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    with_g = argparse.ArgumentParser(add_help=False, parents=[common])
    with_g.add_argument("--g6", required=True, help="base graph in graph6")
    with_h = argparse.ArgumentParser(add_help=False)
    with_h.add_argument("--pattern-g6", required=True, help="pattern graph in graph6")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="cap on k^n enumerated colorings")

    parser = argparse.ArgumentParser(prog="shadowpoly", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, help_text):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(run=fn)
        return p

    add("chromatic", _chromatic, [with_g], "chromatic polynomial")
    add("count", _count, [with_g, with_h], "induced pattern count polynomial")
    add("pairs", _pairs, [with_g], "edge count of the coloring graph")
    add("clique", _clique, [with_g], "induced K_r count").add_argument("--r", type=int, required=True)
    add("product", _product, [with_g], "induced product-of-cliques count").add_argument(
        "--sizes", type=_sizes, required=True, help="comma-separated clique sizes")
    add("hexagon", _hexagon, [with_g], "induced 6-cycle count")
    add("tree-qd", _tree_qd, [with_g], "induced d-cube count of a tree").add_argument(
        "--d", type=int, required=True)
    add("gds", _gds, [with_g], "subset statistics of a tree").add_argument("--i", type=int, required=True)
    add("oracle", _oracle, [with_g, with_h, budget], "brute-force count at one k").add_argument(
        "--k", type=int, required=True)
    add("verify", _verify, [with_g, with_h, budget], "polynomial vs brute force for k=0..kmax").add_argument(
        "--kmax", type=int, required=True)
    add("search-p2", _search, [common], "look for equal pairs polynomials with different chromatic polynomials"
        ).add_argument("--input", required=True, help="file of graph6 lines, or - for stdin")
    return parser


def main(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        status, payload, text = args.run(args)
    except _UsageError as e:
        print(f"shadowpoly {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, PatternTooLarge) as e:
        print(f"shadowpoly {args.command}: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    elapsed = int((time.perf_counter() - start) * 1000)
    if args.json:
        head = {}
        if getattr(args, "g6", None) is not None:
            head["input"] = args.g6
        if getattr(args, "pattern_g6", None) is not None:
            head["pattern"] = args.pattern_g6
        print(json.dumps({**head, **payload, "elapsed_ms": elapsed}), file=out)
    else:
        print(text, file=out)
    if status == EXIT_DISAGREE:
        print(text, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
