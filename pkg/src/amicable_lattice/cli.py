"""Command-line front end.

Every command builds one report dictionary and renders it as text, JSON or
CSV.  Reports are deterministic: timing is only included with ``--timing``,
so the same command always produces the same bytes regardless of ``--jobs``.

Exit codes: 0 on success (a negative answer is still a success), 1 when a
verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Callable, Iterable

from . import __version__
from .embed import LatticeEmbedding, realize_amicable_pair
from .elliptic import on_curve, star_to_curve
from .exact import DomainError
from .oracle import Kind, brute_parallelogram, brute_rectangles, brute_rhombus
from .parallelogram import (
    PairKind,
    amicable_condition,
    classify,
    diagonal_squared,
    sine_of_angle,
)
from .rhombus import RhombusResult, rhombus_solutions, solve_star, solve_star_star, to_rhombus

JSON_SAFE_MAX = 2 ** 53

COLUMNS = {
    "solve-star": ["kappa", "m", "n", "s", "x", "a"],
    "solve-starstar": ["k", "mu", "n", "s", "x", "a"],
    "search-rhombus": ["x", "a", "s1", "s2"],
    "search-rectangles": ["x", "y", "a", "b", "trivial"],
    "search-parallelograms": ["x", "y", "a", "b", "s1", "s2", "trivial"],
    "verify-pair": ["x", "y", "a", "b", "amicable", "s1", "s2", "kind",
                    "d1_squared", "d2_squared", "sin1", "sin2"],
    "embed-pair": ["member", "vertices", "sq_sides", "area2", "verified"],
    "elliptic": ["kappa", "m", "n", "s", "X", "Y", "p", "q", "on_curve"],
    "cross-check": ["x", "a", "solver", "oracle", "embedded"],
}


# --- report helpers -------------------------------------------------------


def _report(command: str, bound, hits: list[dict], *, complete: bool = True,
            elapsed_ms: int | None = None, **extra) -> dict:
    rep = {
        "command": command,
        "bound": bound,
        "complete": complete,
        "hits": hits,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
    }
    rep.update(extra)
    return rep


def _embedding_dict(emb: LatticeEmbedding) -> dict:
    return {
        "vertices": [[v.px, v.py] for v in emb.vertices],
        "sq_sides": list(emb.target_sq_sides),
        "area2": emb.target_area2,
        "verified": emb.verify(),
    }


def _embed_hit(hit: dict, pair) -> bool:
    first, second = realize_amicable_pair(pair)
    hit["embedding"] = [_embedding_dict(first), _embedding_dict(second)]
    return first.verify() and second.verify()


def _kind_names(kind: PairKind) -> str:
    return "+".join(k.name for k in PairKind if k in kind)


def _rhombus_hit(r: RhombusResult, names: tuple[str, str]) -> dict:
    sol = r.source
    return {names[0]: sol.kappa, names[1]: sol.m, "n": sol.n, "s": sol.s, "x": r.x, "a": r.a}


# --- cross-check ----------------------------------------------------------


def cross_check(bound: int, jobs: int = 1,
                solver: Callable[[], Iterable[RhombusResult]] = rhombus_solutions) -> dict:
    """Compare solver and oracle rhombus lists up to ``bound`` and embed every hit.

    The report's ``status`` is ``PASS`` only if both routes agree exactly and
    every embedding verifies.
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    start = time.perf_counter()
    solver_hits = {tuple(sorted((r.x, r.a))) for r in solver()}
    solver_hits = {h for h in solver_hits if h[1] <= bound}
    report = brute_rhombus(bound, jobs=jobs)
    oracle_hits = {(x, a) for x, _, a, _ in report.hits}
    certs = {(p.p1.x, p.p2.x): p for p in report.pairs}

    ok = solver_hits == oracle_hits
    hits = []
    for x, a in sorted(solver_hits | oracle_hits):
        hit = {"x": x, "a": a, "solver": (x, a) in solver_hits,
               "oracle": (x, a) in oracle_hits, "embedded": False}
        pair = certs.get((x, a)) or amicable_condition(x, x, a, a)
        if pair is not None:
            hit["s1"], hit["s2"] = pair.s1, pair.s2
            hit["embedded"] = _embed_hit(hit, pair)
        ok = ok and hit["embedded"]
        hits.append(hit)
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return _report("cross-check", bound, hits, complete=False, elapsed_ms=elapsed,
                   status="PASS" if ok else "FAIL",
                   solver_only=sorted(solver_hits - oracle_hits),
                   oracle_only=sorted(oracle_hits - solver_hits))


# --- commands -------------------------------------------------------------


def _cmd_solve_star(args) -> dict:
    start = time.perf_counter()
    hits = [_rhombus_hit(to_rhombus(s), ("kappa", "m")) for s in solve_star()]
    return _report("solve-star", None, hits, elapsed_ms=_ms(start))


def _cmd_solve_starstar(args) -> dict:
    start = time.perf_counter()
    hits = [_rhombus_hit(to_rhombus(s), ("k", "mu")) for s in solve_star_star()]
    return _report("solve-starstar", None, hits, elapsed_ms=_ms(start))


def _pair_hits(report, embed: bool, with_roots: bool = True) -> tuple[list[dict], int]:
    """Hit records for a search report, plus the number of failed embeddings."""
    hits, failures = [], 0
    for pair in report.pairs:
        x, y, a, b = pair.sides
        hit = {"x": x, "a": a} if report.kind is Kind.RHOMBUS else {"x": x, "y": y, "a": a, "b": b}
        if with_roots:
            hit["s1"], hit["s2"] = pair.s1, pair.s2
        hit["trivial"] = pair.trivial
        if embed and not _embed_hit(hit, pair):
            failures += 1
        hits.append(hit)
    return hits, failures


def _search_report(command: str, rep, embed: bool, with_roots: bool = True, **extra) -> dict:
    hits, failures = _pair_hits(rep, embed, with_roots)
    if embed:
        extra.update(status="FAIL" if failures else "PASS", embedding_failures=failures)
    return _report(command, rep.bound, hits, complete=rep.complete,
                   elapsed_ms=rep.elapsed_ms, **extra)


def _cmd_search_rhombus(args) -> dict:
    return _search_report("search-rhombus", brute_rhombus(args.bound, jobs=args.jobs), args.embed)


def _cmd_search_parallelograms(args) -> dict:
    rep = brute_parallelogram(args.bound, jobs=args.jobs)
    return _search_report("search-parallelograms", rep, args.embed)


def _cmd_search_rectangles(args) -> dict:
    equables, rep = brute_rectangles()
    return _search_report("search-rectangles", rep, args.embed, with_roots=False,
                          equables=[[e.x, e.y] for e in equables],
                          pairs_with_trivial=rep.notes["pairs_with_trivial"],
                          pairs_without_trivial=rep.notes["pairs_without_trivial"])


def _cmd_verify_pair(args) -> dict:
    x, y, a, b = args.sides
    pair = amicable_condition(x, y, a, b)
    hit = {"x": x, "y": y, "a": a, "b": b, "amicable": pair is not None}
    if pair is not None:
        d1, d2 = diagonal_squared(x, y, a, b), diagonal_squared(a, b, x, y)
        hit.update(
            # roots in the order the sides were given, not canonical order
            s1=(d1 - x * x - y * y) // 2, s2=(d2 - a * a - b * b) // 2,
            kind=_kind_names(classify(pair)),
            d1_squared=d1, d2_squared=d2,
            sin1=str(sine_of_angle(x, y, a, b)),
            sin2=str(sine_of_angle(a, b, x, y)),
        )
    return _report("verify-pair", None, [hit],
                   answer="amicable" if pair else "not amicable")


def _cmd_embed_pair(args) -> dict:
    x, y, a, b = args.sides
    pair = amicable_condition(x, y, a, b)
    if pair is None:
        return _report("embed-pair", None, [], answer="not amicable")
    members = realize_amicable_pair(pair)
    hits = []
    for label, emb in zip(("first", "second"), members):
        hits.append({"member": label, **_embedding_dict(emb)})
    ok = all(h["verified"] for h in hits)
    return _report("embed-pair", None, hits, answer="amicable",
                   status="PASS" if ok else "FAIL")


def _cmd_elliptic(args) -> dict:
    if args.params:
        triples = [tuple(args.params)]
    else:
        triples = [sol.key for sol in solve_star()]
    hits, ok = [], True
    for kappa, m, n in triples:
        pt = star_to_curve(kappa, m, n)
        good = on_curve(pt)
        ok = ok and good
        hits.append({"kappa": kappa, "m": m, "n": n, "s": pt.s, "X": pt.X, "Y": pt.Y,
                     "p": pt.p, "q": pt.q, "on_curve": good})
    return _report("elliptic", None, hits, status="PASS" if ok else "FAIL")


def _cmd_cross_check(args) -> dict:
    return cross_check(args.bound, jobs=args.jobs, solver=rhombus_solutions)


COMMANDS = {
    "solve-star": _cmd_solve_star,
    "solve-starstar": _cmd_solve_starstar,
    "search-rhombus": _cmd_search_rhombus,
    "search-rectangles": _cmd_search_rectangles,
    "search-parallelograms": _cmd_search_parallelograms,
    "verify-pair": _cmd_verify_pair,
    "embed-pair": _cmd_embed_pair,
    "elliptic": _cmd_elliptic,
    "cross-check": _cmd_cross_check,
}


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


# --- rendering ------------------------------------------------------------


def _json_safe(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_MAX else value
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_json_safe(report), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        cols = COLUMNS[report["command"]]
        writer.writerow(cols)
        for hit in report["hits"]:
            writer.writerow([_csv_cell(hit.get(c, "")) for c in cols])
        return buf.getvalue()
    return _render_text(report)


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return value


def _render_text(report: dict) -> str:
    lines = [f"{report['command']} (version {report['version']})"]
    if report["bound"] is not None:
        lines.append(f"bound: {report['bound']}  complete: {str(report['complete']).lower()}")
    for key in ("answer", "status"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    for key in ("equables", "pairs_with_trivial", "pairs_without_trivial",
                "solver_only", "oracle_only", "embedding_failures"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    lines.append(f"hits: {len(report['hits'])}")
    for hit in report["hits"]:
        fields = " ".join(f"{k}={_csv_cell(v)}" for k, v in hit.items() if k != "embedding")
        lines.append(f"  {fields}")
        for emb in hit.get("embedding", []):
            lines.append(f"    vertices={_csv_cell(emb['vertices'])} area2={emb['area2']} "
                         f"verified={_csv_cell(emb['verified'])}")
    if report["elapsed_ms"] is not None:
        lines.append(f"elapsed_ms: {report['elapsed_ms']}")
    return "\n".join(lines) + "\n"


# --- entry point ----------------------------------------------------------


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=_positive, default=1,
                        help="worker processes for oracle scans")
    common.add_argument("--output", "-o", metavar="PATH",
                        help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true",
                        help="include elapsed_ms (makes output run-dependent)")

    parser = argparse.ArgumentParser(
        prog="amicable-lattice",
        description="Amicable and equable lattice parallelograms and rhombuses.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("solve-star", parents=[common],
                   help="solve κ⁴m⁴n⁴ - 32κ(m²+n²) = s² (k even)")
    sub.add_parser("solve-starstar", parents=[common],
                   help="solve k⁴μ⁴n⁴ - 16k(4μ²+n²) = s² (k odd)")
    for name, what in (("search-rhombus", "rhombus pairs"),
                       ("search-parallelograms", "parallelogram pairs")):
        p = sub.add_parser(name, parents=[common], help=f"brute-force {what}")
        p.add_argument("--bound", type=_positive, required=True)
        p.add_argument("--embed", action="store_true", help="embed and verify every hit")
    p = sub.add_parser("search-rectangles", parents=[common],
                       help="complete search for equable and amicable rectangles")
    p.add_argument("--embed", action="store_true", help="embed and verify every hit")
    for name in ("verify-pair", "embed-pair"):
        p = sub.add_parser(name, parents=[common],
                           help="test sides x y against partner sides a b"
                           if name == "verify-pair" else "lattice coordinates for a pair")
        p.add_argument("sides", type=_positive, nargs=4, metavar="SIDE",
                       help="four side lengths: x y a b")
    p = sub.add_parser("elliptic", parents=[common],
                       help="map solutions of the even case onto a Weierstrass curve")
    p.add_argument("params", type=_positive, nargs="*", metavar="KAPPA M N",
                   help="defaults to every solution found by solve-star")
    p = sub.add_parser("cross-check", parents=[common],
                       help="compare solver and oracle rhombus lists and embed the hits")
    p.add_argument("--bound", type=_positive, default=500)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "elliptic" and args.params and len(args.params) != 3:
        parser.print_usage(sys.stderr)
        print("elliptic takes exactly three parameters: KAPPA M N", file=sys.stderr)
        return 2

    try:
        report = COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not args.timing:
        report["elapsed_ms"] = None

    text = render(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.get("status") == "FAIL" else 0


if __name__ == "__main__":
    sys.exit(main())
