"""Command line for batch multiplicity work: single queries, full tables,
verification sweeps, and micro-benchmarks.

Exit codes: 0 success, 1 verification found a mismatch, 2 invalid input,
3 requested route not applicable to the pair, 4 size guard exceeded
(override with --force).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

from .arith import binom, factorial_superproduct
from .difference import check_difference_eq, check_shift_identity
from .indices import GrassmannIndex, enumerate_indices, leq, validate
from .matrices import build_shifted_vandermonde_matrix, determinant_bareiss, vandermonde
from .multiplicity import (
    ROUTE_DETERMINANT,
    ROUTE_PRODUCT,
    ROUTE_RECURRENCE,
    ROUTE_SUM,
    ROUTE_WEYMAN,
    ROUTES,
    MultiplicityRecord,
    RouteInapplicableError,
    mult_det,
    mult_product,
    mult_rec,
    mult_sum,
    mult_weyman,
)

DEFAULT_GUARD = 12
CSV_HEADER = ("n", "d", "i", "j", "route", "value")


class GuardExceededError(ValueError):
    """The requested sweep is larger than the size guard allows."""


@dataclass
class TableRequest:
    """Parameters of one table sweep."""

    d: int
    n: int
    routes: tuple[str, ...] = (ROUTE_DETERMINANT,)
    fmt: str = "csv"
    out: str | None = None
    jobs: int = 1
    guard: int = DEFAULT_GUARD
    force: bool = False


@dataclass
class VerifyReport:
    """Outcome of a verification run: the route equivalence sweep over all
    pairs of one (d, n) plus seeded random identity suites."""

    d: int
    n: int
    seed: int
    pairs_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    identities_checked: list[dict] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(
            item["passed"] for item in self.identities_checked
        )


# ---------------------------------------------------------------------------
# shared helpers


def _parse_entries(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"could not parse comma separated integers from {text!r}"
        ) from None


def _applicable(route: str, i: GrassmannIndex, j: GrassmannIndex) -> bool:
    if route == ROUTE_PRODUCT:
        return j.entries[-1] <= i.entries[0]
    if route == ROUTE_WEYMAN:
        return j.entries == tuple(range(1, j.d + 1))
    return True


def _inapplicable_message(route: str, i: GrassmannIndex, j: GrassmannIndex) -> str:
    if route == ROUTE_PRODUCT:
        return (
            f"route 'product' needs j_d <= i_1, "
            f"got j_d={j.entries[-1]} > i_1={i.entries[0]}"
        )
    return f"route 'weyman' is defined only for j = (1..d), got j={j}"


def _route_value(route: str, i: GrassmannIndex, j: GrassmannIndex, rec_caches: dict) -> int:
    if route == ROUTE_DETERMINANT:
        return mult_det(i, j)
    if route == ROUTE_RECURRENCE:
        return mult_rec(i, j, rec_caches.setdefault(j.entries, {}))
    if route == ROUTE_SUM:
        return mult_sum(i, j)
    if route == ROUTE_PRODUCT:
        return mult_product(i, j)
    if route == ROUTE_WEYMAN:
        return mult_weyman(i)
    raise ValueError(f"unknown route {route!r}")


def _normalize_routes(route_args) -> tuple[str, ...] | None:
    if not route_args:
        return None
    chosen = set()
    for name in route_args:
        if name == "all":
            chosen.update(ROUTES)
        else:
            chosen.add(name)
    return tuple(r for r in ROUTES if r in chosen)


def _record_row(record: MultiplicityRecord) -> tuple:
    return (
        record.n,
        record.i.d,
        str(record.i),
        str(record.j),
        record.route,
        str(record.value),
    )


def _render_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def _render_json(rows) -> str:
    records = [dict(zip(CSV_HEADER, row)) for row in rows]
    return json.dumps(records, indent=2) + "\n"


def _render_rows(rows, fmt: str) -> str:
    return _render_csv(rows) if fmt == "csv" else _render_json(rows)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_guard(d: int, n: int, guard: int, force: bool) -> None:
    if d < 1 or d > n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if n > guard and not force:
        raise GuardExceededError(
            f"n={n} exceeds the size guard {guard}; pass --force to run anyway"
        )


# ---------------------------------------------------------------------------
# compute


def cmd_compute(args) -> int:
    i = validate(_parse_entries(args.i), args.n)
    j = validate(_parse_entries(args.j), args.n)
    if j.d != i.d:
        raise ValueError(f"--i and --j must have the same length, got {i.d} and {j.d}")
    if not leq(j, i):
        raise ValueError(
            "cell not contained in variety (requires j <= i componentwise)"
        )
    requested = args.route or []
    if not requested or "all" in requested:
        routes = tuple(r for r in ROUTES if _applicable(r, i, j))
    else:
        routes = tuple(r for r in ROUTES if r in set(requested))
        for route in routes:
            if not _applicable(route, i, j):
                raise RouteInapplicableError(_inapplicable_message(route, i, j))
    caches: dict = {}
    rows = []
    for route in routes:
        value = _route_value(route, i, j, caches)
        rows.append(_record_row(MultiplicityRecord(args.n, i, j, value, route)))
    _emit(_render_rows(rows, args.format), args.out)
    return 0


# ---------------------------------------------------------------------------
# table


def _table_rows_for_index(payload) -> list[tuple]:
    n, i_entries, routes = payload
    d = len(i_entries)
    i = GrassmannIndex(tuple(i_entries), n)
    caches: dict = {}
    rows = []
    for j in enumerate_indices(d, n):
        if not leq(j, i):
            continue
        for route in routes:
            if not _applicable(route, i, j):
                continue
            value = _route_value(route, i, j, caches)
            rows.append(_record_row(MultiplicityRecord(n, i, j, value, route)))
    return rows


def run_table(req: TableRequest) -> str:
    """Rows for every pair j <= i of I(d, n), lexicographic by i then j,
    one row per requested applicable route, rendered to req.fmt."""
    _check_guard(req.d, req.n, req.guard, req.force)
    if req.jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {req.jobs}")
    payloads = [(req.n, idx.entries, req.routes) for idx in enumerate_indices(req.d, req.n)]
    if req.jobs == 1:
        chunks = [_table_rows_for_index(p) for p in payloads]
    else:
        # Parallel over the outer index i; workers keep their own caches
        # and chunks are reassembled in submission order, so the bytes out
        # do not depend on the worker count.
        with Pool(processes=req.jobs) as pool:
            chunks = pool.map(_table_rows_for_index, payloads)
    rows = [row for chunk in chunks for row in chunk]
    return _render_rows(rows, req.fmt)


def cmd_table(args) -> int:
    req = TableRequest(
        d=args.d,
        n=args.n,
        routes=_normalize_routes(args.route) or (ROUTE_DETERMINANT,),
        fmt=args.format,
        out=args.out,
        jobs=args.jobs,
        guard=args.guard,
        force=args.force,
    )
    _emit(run_table(req), req.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def _note_mismatch(report, i, j, name_a, value_a, name_b, value_b) -> None:
    if value_a != value_b:
        report.mismatches.append(
            {
                "i": str(i),
                "j": str(j),
                "route_a": name_a,
                "value_a": str(value_a),
                "route_b": name_b,
                "value_b": str(value_b),
            }
        )


def _identity_difference_eq(rng: random.Random, cases: int = 30) -> dict:
    failures = 0
    for _ in range(cases):
        d = rng.randint(1, 3)
        shifts = tuple(rng.randint(0, 4) for _ in range(d))
        if not check_difference_eq(shifts, (-3, 4)).ok:
            failures += 1
    return {"name": "difference_eq", "cases": cases, "failures": failures, "passed": failures == 0}


def _identity_shift(rng: random.Random, cases: int = 30) -> dict:
    failures = 0
    for _ in range(cases):
        d = rng.randint(1, 3)
        shifts = tuple(rng.randint(0, 3) for _ in range(d))
        q = rng.randint(1, d)
        if not check_shift_identity(shifts, q, (-3, 4)).ok:
            failures += 1
    return {"name": "shift_identity", "cases": cases, "failures": failures, "passed": failures == 0}


def _identity_vandermonde_form(rng: random.Random, cases: int = 200) -> dict:
    failures = 0
    for _ in range(cases):
        d = rng.randint(1, 5)
        t = [rng.randint(-8, 8) for _ in range(d)]
        k = [rng.randint(0, 4) for _ in range(d)]
        lhs = vandermonde([a + b for a, b in zip(t, k)])
        rhs = factorial_superproduct(d) * determinant_bareiss(
            build_shifted_vandermonde_matrix(t, k)
        )
        if lhs != rhs:
            failures += 1
    return {"name": "vandermonde_form", "cases": cases, "failures": failures, "passed": failures == 0}


def _identity_alternating_sum(rng: random.Random, cases: int = 200) -> dict:
    failures = 0
    for _ in range(cases):
        s = rng.randint(0, 6)
        t = rng.randint(-10, 10)
        p = rng.randint(1, 6)
        lhs = sum((-1) ** k * binom(s, k) * binom(t + k, p - 1) for k in range(s + 1))
        if lhs != (-1) ** s * binom(t, p - 1 - s):
            failures += 1
    return {"name": "alternating_sum", "cases": cases, "failures": failures, "passed": failures == 0}


def run_verification(d: int, n: int, seed: int = 0) -> VerifyReport:
    """Check determinant == recurrence == sum on every pair j <= i of
    I(d, n), product and base-cell routes where applicable, then run the
    seeded random identity suites."""
    report = VerifyReport(d=d, n=n, seed=seed)
    start = time.perf_counter()
    indices = list(enumerate_indices(d, n))
    base = tuple(range(1, d + 1))
    for j in indices:
        cache: dict = {}
        for i in indices:
            if not leq(j, i):
                continue
            det = mult_det(i, j)
            report.pairs_checked += 1
            _note_mismatch(report, i, j, "determinant", det, "recurrence", mult_rec(i, j, cache))
            _note_mismatch(report, i, j, "determinant", det, "sum", mult_sum(i, j))
            if j.entries[-1] <= i.entries[0]:
                _note_mismatch(report, i, j, "determinant", det, "product", mult_product(i, j))
            if j.entries == base:
                _note_mismatch(report, i, j, "determinant", det, "weyman", mult_weyman(i))
    rng = random.Random(seed)
    report.identities_checked.append(_identity_difference_eq(rng))
    report.identities_checked.append(_identity_shift(rng))
    report.identities_checked.append(_identity_vandermonde_form(rng))
    report.identities_checked.append(_identity_alternating_sum(rng))
    report.elapsed_seconds = time.perf_counter() - start
    return report


def _render_verify_text(report: VerifyReport) -> str:
    identity_bits = " ".join(
        f"{item['name']}={'pass' if item['passed'] else 'FAIL'}"
        for item in report.identities_checked
    )
    lines = [
        f"verify d={report.d} n={report.n} seed={report.seed}: "
        f"pairs_checked={report.pairs_checked} mismatches={len(report.mismatches)} "
        f"{identity_bits} elapsed={report.elapsed_seconds:.3f}s "
        f"status={'ok' if report.ok else 'FAIL'}"
    ]
    for item in report.mismatches[:20]:
        lines.append(
            f"  mismatch i={item['i']} j={item['j']}: "
            f"{item['route_a']}={item['value_a']} vs {item['route_b']}={item['value_b']}"
        )
    return "\n".join(lines) + "\n"


def _render_verify_json(report: VerifyReport) -> str:
    payload = {
        "d": report.d,
        "n": report.n,
        "seed": report.seed,
        "pairs_checked": report.pairs_checked,
        "mismatches": report.mismatches,
        "identities_checked": report.identities_checked,
        "elapsed_seconds": report.elapsed_seconds,
        "ok": report.ok,
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_verify(args) -> int:
    _check_guard(args.d, args.n, args.guard, args.force)
    report = run_verification(args.d, args.n, args.seed)
    text = _render_verify_json(report) if args.format == "json" else _render_verify_text(report)
    _emit(text, args.out)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# bench


def cmd_bench(args) -> int:
    _check_guard(args.d, args.n, args.guard, args.force)
    if args.reps < 1:
        raise ValueError(f"--reps must be >= 1, got {args.reps}")
    routes = _normalize_routes(args.route) or ROUTES
    indices = list(enumerate_indices(args.d, args.n))
    pairs = [(i, j) for i in indices for j in indices if leq(j, i)]
    lines = []
    for route in routes:
        subset = [(i, j) for i, j in pairs if _applicable(route, i, j)]
        start = time.perf_counter()
        for _ in range(args.reps):
            caches: dict = {}
            for i, j in subset:
                _route_value(route, i, j, caches)
        elapsed = time.perf_counter() - start
        done = len(subset) * args.reps
        rate = done / elapsed if elapsed > 0 else float("inf")
        lines.append(
            f"route={route} pairs={len(subset)} reps={args.reps} "
            f"seconds={elapsed:.4f} pairs_per_sec={rate:.1f}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassmult",
        description="Exact multiplicities of points on Schubert varieties in Grassmannians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="multiplicity of one cell/variety pair")
    compute.add_argument("--n", type=int, required=True, help="ambient bound n")
    compute.add_argument("--i", required=True, help="variety index, comma separated (e.g. 2,4)")
    compute.add_argument("--j", required=True, help="cell index, comma separated")
    compute.add_argument(
        "--route",
        action="append",
        choices=ROUTES + ("all",),
        help="route to evaluate (repeatable); default: every route applicable to the pair",
    )
    compute.add_argument("--format", choices=("csv", "json"), default="csv")
    compute.add_argument("--out", help="write to this path instead of stdout")
    compute.set_defaults(func=cmd_compute)

    table = sub.add_parser("table", help="all pairs j <= i for one (d, n)")
    table.add_argument("--d", type=int, required=True)
    table.add_argument("--n", type=int, required=True)
    table.add_argument(
        "--route",
        action="append",
        choices=ROUTES + ("all",),
        help="repeatable; default: determinant. Pair/route combinations a route does not cover are omitted",
    )
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--out", help="write to this path instead of stdout")
    table.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")
    table.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="refuse n beyond this without --force")
    table.add_argument("--force", action="store_true", help="override the size guard")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="route equivalence sweep plus identity suites")
    verify.add_argument("--d", type=int, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--seed", type=int, default=0, help="seed for the random identity suites")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", help="write to this path instead of stdout")
    verify.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    verify.add_argument("--force", action="store_true")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="wall time per route over the full table")
    bench.add_argument("--d", type=int, required=True)
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument(
        "--route", action="append", choices=ROUTES + ("all",), help="repeatable; default: all routes"
    )
    bench.add_argument("--reps", type=int, default=1, help="repetitions of the full sweep")
    bench.add_argument("--out", help="write to this path instead of stdout")
    bench.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    bench.add_argument("--force", action="store_true")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except RouteInapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
