"""
Golden-table reproduction.

Golden files live in ``realselfdual/data`` (override the directory with the
``REALSELFDUAL_DATA`` environment variable).  Each row lists the ramification
data, the expected invariant dimension and, per number of conjugate pairs c,
the expected bounds (``null`` for a blank cell, meaning no valid pairing).

Cell rule: a single expected value must equal every computed bound (equal
bounds are written once); several expected values are compared with the
computed bounds as multisets.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .bounds import Problem, all_bounds, trivial_multiplicity
from .errors import GoldenDataError, InvalidParameter, NonDivisible
from .notation import parse_points

TABLE_IDS = (1, 2)
DATA_ENV = "REALSELFDUAL_DATA"


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("realselfdual") / "data"))


def load_golden(table_id: int) -> dict:
    if table_id not in TABLE_IDS:
        raise InvalidParameter(f"unknown table {table_id}; available: {', '.join(map(str, TABLE_IDS))}")
    path = data_dir() / f"table{table_id}.json"
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError:
        raise GoldenDataError(f"golden file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise GoldenDataError(f"golden file {path} is not valid JSON: {exc}") from None
    _check_golden(doc, path)
    return doc


def _check_golden(doc, path):
    try:
        if doc["format_version"] != 1:
            raise GoldenDataError(f"{path}: unsupported format_version {doc['format_version']}")
        cols = [str(c) for c in doc["columns"]]
        for row in doc["rows"]:
            triples = [(tuple(p["weight"]), p["k"], p["count"]) for p in row["points"]]
            if parse_points(row["label"]) != triples:
                raise GoldenDataError(f"{path}: row {row['row']} label does not match its points")
            if sorted(row["bounds"]) != sorted(cols):
                raise GoldenDataError(f"{path}: row {row['row']} has cells {sorted(row['bounds'])}")
            if not isinstance(row["dimension"], int):
                raise GoldenDataError(f"{path}: row {row['row']} dimension is not an integer")
    except (KeyError, TypeError) as exc:
        raise GoldenDataError(f"{path}: malformed record ({exc!r})") from None


@dataclass
class CellReport:
    c: int
    expected: list[int] | None
    computed: list[dict] = field(default_factory=list)  # in leftmost-first pairing order
    ok: bool = False
    order_matches: bool | None = None

    @property
    def bounds(self) -> list[int]:
        return [item["bound"] for item in self.computed]


@dataclass
class RowReport:
    row: int
    label: str
    N: int
    d: int | None
    reduced_d: int | None
    expected_dimension: int
    dimension: int
    cells: list[CellReport]

    @property
    def ok(self) -> bool:
        return self.dimension == self.expected_dimension and all(c.ok for c in self.cells)


@dataclass
class TableReport:
    table: int
    N: int
    rows: list[RowReport]
    transposed: bool = False

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        for r, rd in zip(self.rows, out["rows"]):
            rd["ok"] = r.ok
        return out


def compare_cell(expected: list[int] | None, computed: list[int]) -> bool:
    if expected is None:
        return not computed
    if not computed:
        return False
    if len(expected) == 1:
        return set(computed) == set(expected)
    return sorted(computed) == sorted(expected)


def compute_row(N: int, points, columns, prune: bool = True):
    """Dimension and, for each c, the (class, signature) list; no golden data involved."""
    problem = Problem.build(N, points)
    dim = trivial_multiplicity(problem, prune)
    cells = {}
    for c in columns:
        cells[c] = [
            {"pairing": pb.pairing.describe(), "pair_counts": list(pb.pairing.pair_counts()),
             "signature": pb.result.signature, "bound": pb.result.bound}
            for pb in all_bounds(problem, c, prune)
        ]
    try:
        d, rd = problem.d, problem.reduced_d
    except NonDivisible:
        d = rd = None
    return dim, d, rd, cells


def _row_job(args):
    N, points, columns, transpose = args
    if transpose:
        points = [((w[1], w[0]), k, m) for w, k, m in points]
    return compute_row(N, points, columns)


def reproduce_table(table_id: int, jobs: int = 1, transpose: bool = False) -> TableReport:
    """
    Recompute a golden table.  ``transpose`` re-expresses a rank-2 table over
    sp4 (N=5) by swapping each weight's coordinates.
    """
    doc = load_golden(table_id)
    N = doc["N"]
    if transpose:
        if N != 4:
            raise InvalidParameter("only the N=4 table can be transposed")
        N = 5
    columns = [int(c) for c in doc["columns"]]
    tasks = []
    for row in doc["rows"]:
        points = [(tuple(p["weight"]), p["k"], p["count"]) for p in row["points"]]
        tasks.append((N, points, columns, transpose))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row_job, tasks))
    else:
        results = [_row_job(t) for t in tasks]

    rows = []
    for row, (dim, d, rd, cells) in zip(doc["rows"], results):
        reports = []
        for c in columns:
            expected = row["bounds"][str(c)]
            computed = cells[c]
            bounds = [item["bound"] for item in computed]
            ok = compare_cell(expected, bounds)
            order = None
            if expected is not None and len(expected) > 1:
                order = bounds == expected
            reports.append(CellReport(c, expected, computed, ok, order))
        rows.append(RowReport(row["row"], row["label"], N, d, rd, row["dimension"], dim, reports))
    return TableReport(table_id, N, rows, transposed=transpose)


def _cell_text(values):
    return "" if values is None else ",".join(map(str, values))


def render_text(report: TableReport) -> str:
    cols = [c.c for c in report.rows[0].cells] if report.rows else []
    head = ["row", "ramification data", "dim"] + [f"c={c}" for c in cols] + ["status"]
    body = []
    for r in report.rows:
        cells = [_cell_text(c.bounds) if c.computed else "" for c in r.cells]
        body.append([str(r.row), r.label, str(r.dimension)] + cells + ["ok" if r.ok else "MISMATCH"])
    widths = [max(len(x[i]) for x in [head] + body) for i in range(len(head))]
    lines = [f"table {report.table} (N={report.N}{', transposed' if report.transposed else ''})"]
    for line in [head] + body:
        lines.append("  ".join(s.ljust(w) for s, w in zip(line, widths)).rstrip())
    return "\n".join(lines)


def render_diff(report: TableReport) -> str:
    lines = []
    for r in report.rows:
        if r.dimension != r.expected_dimension:
            lines.append(f"row {r.row} {r.label}: dimension {r.dimension} != expected {r.expected_dimension}")
        for c in r.cells:
            if not c.ok:
                lines.append(
                    f"row {r.row} {r.label} c={c.c}: computed [{_cell_text(c.bounds)}] "
                    f"expected [{_cell_text(c.expected) or 'blank'}]"
                )
    return "\n".join(lines)


def render_csv(report: TableReport) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = [c.c for c in report.rows[0].cells] if report.rows else []
    writer.writerow(["row", "label", "N", "d", "dimension"] + [f"c{c}" for c in cols] + ["ok"])
    for r in report.rows:
        writer.writerow([r.row, r.label, r.N, "" if r.d is None else r.d, r.dimension]
                        + [_cell_text(c.bounds) for c in r.cells] + [int(r.ok)])
    return buf.getvalue().rstrip("\n")
