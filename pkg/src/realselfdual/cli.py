"""
Command-line interface.

    realselfdual schur --N 4 --weight 1,0
    realselfdual dim   --N 4 --points "(0,1)^6"
    realselfdual bound --N 6 --points "(0,1,0)^4,(0,0,1)^4" --c 2 --all-pairings
    realselfdual char  --N 5 --groups "(1,0):2" --mu 0,0
    realselfdual table --which 2 --verify --jobs 4

Problems can also be read from a JSON document (``--doc FILE`` or ``-`` for
stdin) with fields ``N``, ``points`` (list of ``{weight, k, count}``) and an
optional ``pairs`` (an integer c or a list of 0-based index pairs).

Exit codes: 0 success, 1 invalid input or I/O failure, 2 golden-table mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .bounds import PairingSpec, Problem, all_bounds, canonical_class, lower_bound, trivial_multiplicity
from .characters import CycleGroup, char_value, schur
from .errors import NonDivisible, RealSelfDualError
from .lie import make_context
from .notation import parse_points, parse_weight
from .tables import reproduce_table, render_csv, render_diff, render_text

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class UsageError(RealSelfDualError):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


# -- input documents ---------------------------------------------------------


def read_document(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "N" not in doc or "points" not in doc:
        raise UsageError("problem document needs the fields 'N' and 'points'")
    return doc


def document_points(doc: dict):
    out = []
    for i, p in enumerate(doc["points"]):
        try:
            out.append((tuple(p["weight"]), int(p.get("k", 0)), int(p.get("count", 1))))
        except (KeyError, TypeError, ValueError):
            raise UsageError(f"point {i} must be an object with 'weight', optional 'k' and 'count'") from None
        if out[-1][2] < 1:
            raise UsageError(f"point {i}: count must be positive")
    return out


def problem_from_args(args) -> tuple[Problem, object]:
    """Problem plus the pairing request found in the document (or None)."""
    if args.doc:
        doc = read_document(args.doc)
        return Problem.build(int(doc["N"]), document_points(doc)), doc.get("pairs")
    if args.N is None or args.points is None:
        raise UsageError("give either --doc FILE or both --N and --points")
    return Problem.build(args.N, parse_points(args.points)), None


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            i, j = chunk.split("-")
            pairs.append((int(i), int(j)))
        except ValueError:
            raise UsageError(f"cannot parse pair {chunk!r}; expected i-j") from None
    return pairs


def parse_groups(text: str) -> list[CycleGroup]:
    """``(0,1):1,1,1;(1,0)^2:2`` -> cycle groups; ``^m`` declares the copy count."""
    groups = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise UsageError(f"group {chunk!r} must look like weight:cycles")
        head, cycles = chunk.rsplit(":", 1)
        parsed = parse_points(head if head.strip().startswith("(") else f"({head})")
        if len(parsed) != 1 or parsed[0][1]:
            raise UsageError(f"bad group weight {head!r}")
        w, _, count = parsed[0]
        try:
            lengths = tuple(int(c) for c in cycles.split(",") if c.strip())
        except ValueError:
            raise UsageError(f"bad cycle list {cycles!r}") from None
        declared = count if "^" in head else None
        groups.append(CycleGroup(w, lengths, declared))
    if not groups:
        raise UsageError("no cycle groups given")
    return groups


# -- commands ----------------------------------------------------------------


def cmd_schur(args) -> int:
    ctx = make_context(args.N)
    w = ctx.weight(parse_weight(args.weight))
    poly = schur(ctx, w)
    if args.format == "json":
        print(_dump_json({
            "N": ctx.N, "algebra": ctx.name, "weight": list(w.coords), "polynomial": str(poly),
            "terms": [[list(e), c] for e, c in poly.sorted_terms()],
        }))
    elif args.format == "csv":
        header = [f"e{i}" for i in range(1, ctx.r + 1)] + ["coeff"]
        print(_csv([header] + [list(e) + [c] for e, c in poly.sorted_terms()]))
    else:
        print(poly)
    return EXIT_OK


def cmd_dim(args) -> int:
    problem, _ = problem_from_args(args)
    dim = trivial_multiplicity(problem)
    try:
        d, rd, err = problem.d, problem.reduced_d, None
    except NonDivisible as exc:
        d = rd = None
        err = exc
    report = {"N": problem.ctx.N, "algebra": problem.ctx.name, "points": problem.label(),
              "dimension": dim, "d": d, "reduced_d": rd}
    if args.format == "json":
        print(_dump_json(report))
    elif args.format == "csv":
        print(_csv([list(report), ["" if v is None else v for v in report.values()]]))
    else:
        print(f"dimension {dim}")
        if d is not None:
            print(f"d {d}")
            print(f"reduced_d {rd}")
    if err is not None:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def bound_report(problem: Problem, c: int | None, pairs, all_pairings: bool) -> dict:
    try:
        d, rd = problem.d, problem.reduced_d
    except NonDivisible:
        d = rd = None
    dim = trivial_multiplicity(problem)
    results = []
    if pairs is not None:
        spec = PairingSpec(tuple(tuple(p) for p in pairs))
        cls = canonical_class(problem, spec)
        res = lower_bound(problem, spec)
        entries = [(cls, spec, res)]
        c = spec.c
    else:
        found = all_bounds(problem, c)
        if not all_pairings:
            found = found[:1]
        entries = [(pb.pairing, pb.pairs, pb.result) for pb in found]
    for cls, spec, res in entries:
        results.append({
            "pairing": cls.describe(),
            "pair_counts": list(cls.pair_counts()),
            "pairs": [list(p) for p in spec.pairs],
            "signature": res.signature,
            "bound": res.bound,
            "dimension": res.dimension,
            "parity_floor": res.parity_floor,
        })
    return {"N": problem.ctx.N, "algebra": problem.ctx.name, "points": problem.label(), "d": d,
            "reduced_d": rd, "dimension": dim, "c": c, "results": results}


def cmd_bound(args) -> int:
    problem, doc_pairs = problem_from_args(args)
    c, pairs = args.c, None
    if args.pairs is not None:
        pairs = parse_pairs(args.pairs)
    elif c is None and doc_pairs is not None:
        if isinstance(doc_pairs, int):
            c = doc_pairs
        elif isinstance(doc_pairs, list):
            pairs = doc_pairs
        else:
            raise UsageError("'pairs' must be an integer or a list of index pairs")
    if pairs is None and c is None:
        c = 0
    if c is not None and c < 0:
        raise UsageError("c must be nonnegative")
    report = bound_report(problem, c, pairs, args.all_pairings)
    if args.format == "json":
        print(_dump_json(report))
    elif args.format == "csv":
        rows = [["pairing", "pairs", "signature", "bound", "dimension", "parity_floor"]]
        for r in report["results"]:
            rows.append([r["pairing"], " ".join(f"{i}-{j}" for i, j in r["pairs"]), r["signature"],
                         r["bound"], r["dimension"], r["parity_floor"]])
        print(_csv(rows))
    else:
        d = "undefined" if report["d"] is None else report["d"]
        print(f"{report['algebra']} N={report['N']} {report['points']}  d={d}  dimension={report['dimension']}")
        if not report["results"]:
            print(f"c={report['c']}: no valid pairing")
        for r in report["results"]:
            print(f"c={report['c']}  {r['pairing']}: signature {r['signature']}, bound {r['bound']}")
    return EXIT_OK


def cmd_char(args) -> int:
    ctx = make_context(args.N)
    groups = parse_groups(args.groups)
    mu = ctx.weight(parse_weight(args.mu)) if args.mu else None
    value = char_value(ctx, groups, mu)
    if args.format == "json":
        print(_dump_json({"N": ctx.N, "groups": args.groups, "mu": list((mu or ctx.zero_weight()).coords),
                          "value": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        which = int(args.which)
    except ValueError:
        raise UsageError(f"unknown table {args.which!r}") from None
    report = reproduce_table(which, jobs=args.jobs, transpose=args.transpose)
    if args.format == "json":
        print(_dump_json(report.to_dict()))
    elif args.format == "csv":
        print(render_csv(report))
    else:
        print(render_text(report))
    if args.verify:
        if not report.ok:
            print(render_diff(report), file=sys.stderr)
            return EXIT_MISMATCH
        print(f"verified: {len(report.rows)} rows match", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realselfdual", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "csv", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("schur", help="character of an irreducible module as a Laurent polynomial")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--weight", required=True, help="fundamental coordinates, e.g. 1,0")
    fmt(p)
    p.set_defaults(func=cmd_schur)

    for name, func, helptext in (("dim", cmd_dim, "invariant dimension and Grassmannian size"),
                                 ("bound", cmd_bound, "signatures and lower bounds")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--doc", help="JSON problem document, '-' for stdin")
        p.add_argument("--N", type=int)
        p.add_argument("--points", help='ramification data, e.g. "(1,0)^3,(1,0)_1"')
        if name == "bound":
            p.add_argument("--c", type=int, help="number of conjugate pairs")
            p.add_argument("--pairs", help="explicit 0-based pairs, e.g. 0-1,2-3")
            p.add_argument("--all-pairings", action="store_true", help="report every inequivalent pairing")
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("char", help="symmetric-group character value on a multiplicity space")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--groups", required=True, help='e.g. "(0,1):1,1,1,1,1,1" or "(1,0)^2:2;(0,1):1"')
    p.add_argument("--mu", help="weight of the isotypic component (default trivial)")
    fmt(p, ("text", "json"))
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("table", help="reproduce a golden table")
    p.add_argument("--which", required=True)
    p.add_argument("--verify", action="store_true", help="exit 2 on any mismatch")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for rows")
    p.add_argument("--transpose", action="store_true", help="recompute table 1 over sp4 (N=5)")
    fmt(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RealSelfDualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
