"""Command-line front end.

Every graph-consuming subcommand reads graph6/sparse6 lines (file or stdin)
and writes one JSON object per input line, in input order. Exit codes:
0 everything checked out, 1 a mathematical check failed, 2 input or usage
error. When both kinds of problem occur, 1 wins.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional

from . import bounds
from .errors import BoundDomainError, GraphError, MachineryError
from .graph import Graph, girth, min_degree
from .graph6 import iter_lines, parse_line, write_graph6
from .machinery import run_all_checks
from .named import KNOWN_NAMES, named_graph
from .solver import (
    ORACLE_MAX_N,
    SolverConfig,
    brute_force_oracle,
    default_worker_count,
    minimum_zero_forcing_sets,
    verify_witness,
    zero_forcing_number,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2


class UsageError(Exception):
    pass


# -- records -------------------------------------------------------------


def describe(g: Graph) -> dict:
    gr = girth(g)
    delta = min_degree(g) if g.n else None
    dk = None
    if gr.is_finite and delta is not None and delta >= 2:
        dk = bounds.davila_kenter_bound(gr.value, delta)
    return {"n": g.n, "edges": g.edge_count, "girth": gr.to_json(), "min_degree": delta, "dk_bound": dk}


def solve_record(g: Graph, cfg: SolverConfig, oracle: bool = False) -> dict:
    """Solve and return the z-related fields of a record."""
    res = zero_forcing_number(g, cfg)
    if not verify_witness(g, res):
        raise AssertionError(f"solver witness {res.witness} does not force the graph")
    out = {
        "z": res.z if res.exact else {"lower": res.lower, "upper": res.upper},
        "witness": list(res.witness),
        "nodes_explored": res.nodes_explored,
        "lower_bound_used": res.lower_bound_used,
    }
    if oracle:
        if g.n > ORACLE_MAX_N:
            out["oracle"] = None
        else:
            ref = brute_force_oracle(g)
            out["oracle"] = ref.z
            out["oracle_agrees"] = res.exact and ref.z == res.z
    return out


def _slack(info: dict, z) -> tuple[Optional[int], str]:
    dk = info["dk_bound"]
    if dk is None:
        reason = "acyclic" if info["girth"] is None else "min degree < 2"
        return None, f"skipped: {reason}"
    if isinstance(z, int):
        return z - dk, "ok" if z >= dk else "violation"
    if z["upper"] < dk:
        return z["upper"] - dk, "violation"
    if z["lower"] >= dk:
        return z["lower"] - dk, "ok"
    return None, "undetermined"


def _base(index: int, line: str, g: Optional[Graph] = None) -> dict:
    if g is not None and line.lstrip().startswith((":", ">>sparse6<<")):
        line = write_graph6(g)
    return {"input_index": index, "graph6": line}


def _error_record(index: int, line: str, exc: Exception) -> dict:
    rec = _base(index, line)
    rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _run_stream(lines: Iterable[str], handler: Callable[[int, str], dict], jobs: int):
    indexed = list(enumerate(iter_lines(lines)))

    def safe(item):
        index, line = item
        start = time.perf_counter()
        try:
            rec = handler(index, line)
        except (ValueError, GraphError) as exc:
            rec = _error_record(index, line, exc)
        rec["wall_time"] = round(time.perf_counter() - start, 6)
        return rec

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            yield from pool.map(safe, indexed)
    else:
        for item in indexed:
            yield safe(item)


def _emit(rec: dict, out) -> None:
    out.write(json.dumps(rec) + "\n")
    out.flush()


def _config(args) -> SolverConfig:
    return SolverConfig(node_budget=args.budget, worker_count=args.workers)


# -- subcommands -----------------------------------------------------------


def cmd_number(args, out) -> int:
    cfg = _config(args)
    status = EXIT_OK
    summary = {"summary": True, "graphs": 0, "errors": 0, "oracle_disagreements": 0}

    def handle(index, line):
        g = parse_line(line)
        rec = _base(index, line, g)
        rec.update(describe(g))
        rec.update(solve_record(g, cfg, args.oracle))
        return rec

    for rec in _run_stream(args.input, handle, args.jobs):
        summary["graphs"] += 1
        if "error" in rec:
            summary["errors"] += 1
            if status == EXIT_OK:
                status = EXIT_INPUT
        elif rec.get("oracle_agrees") is False:
            summary["oracle_disagreements"] += 1
            status = EXIT_CHECK_FAILED
        _emit(rec, out)
    if args.summary:
        _emit(summary, out)
    return status


def cmd_check_bound(args, out) -> int:
    cfg = _config(args)
    status = EXIT_OK
    summary = {"summary": True, "graphs": 0, "checked": 0, "skipped": 0, "violations": 0,
               "undetermined": 0, "errors": 0, "min_slack": None}

    def handle(index, line):
        g = parse_line(line)
        rec = _base(index, line, g)
        rec.update(describe(g))
        if rec["dk_bound"] is None:
            rec["z"] = None
            rec["slack"] = None
            rec["status"] = _slack(rec, None)[1]
            return rec
        rec.update(solve_record(g, cfg))
        rec["slack"], rec["status"] = _slack(rec, rec["z"])
        return rec

    for rec in _run_stream(args.input, handle, args.jobs):
        summary["graphs"] += 1
        st = rec.get("status")
        if "error" in rec:
            summary["errors"] += 1
            if status == EXIT_OK:
                status = EXIT_INPUT
        elif st.startswith("skipped"):
            summary["skipped"] += 1
        elif st == "undetermined":
            summary["undetermined"] += 1
        else:
            summary["checked"] += 1
            if rec["slack"] is not None:
                ms = summary["min_slack"]
                summary["min_slack"] = rec["slack"] if ms is None else min(ms, rec["slack"])
            if st == "violation":
                summary["violations"] += 1
                status = EXIT_CHECK_FAILED
        _emit(rec, out)
    if args.summary:
        _emit(summary, out)
    return status


def _parse_set(text: str) -> list[int]:
    try:
        return sorted({int(tok) for tok in text.replace(" ", "").split(",") if tok})
    except ValueError as exc:
        raise UsageError(f"--set expects comma-separated vertex indices, got {text!r}") from exc


def cmd_lemmas(args, out) -> int:
    if args.set is None and not args.minimum and not args.all_minimum:
        raise UsageError("lemmas needs --set, --minimum or --all-minimum")
    given = _parse_set(args.set) if args.set is not None else None
    status = EXIT_OK
    summary = {"summary": True, "graphs": 0, "passed": 0, "failed": 0, "skipped": 0, "errors": 0, "sets_checked": 0}

    def handle(index, line):
        g = parse_line(line)
        rec = _base(index, line, g)
        rec.update(describe(g))
        gr = rec["girth"]
        if gr is None or gr < 5:
            rec["status"] = f"skipped: girth {'acyclic' if gr is None else gr} < 5"
            return rec
        if given is not None:
            sets = [given]
        else:
            res = zero_forcing_number(g, SolverConfig(worker_count=args.workers))
            rec["z"] = res.z
            sets = minimum_zero_forcing_sets(g, res.z) if args.all_minimum else [res.witness]
        counts = {"pass": 0, "fail": 0, "inapplicable": 0}
        failures = []
        checked = 0
        report = None
        hypothesis = []
        for s in sets:
            try:
                report = run_all_checks(g, s)
            except MachineryError as exc:
                rec["error"] = f"MachineryError: {exc}"
                rec["set"] = list(s)
                return rec
            checked += 1
            for key, val in report.counts().items():
                counts[key] += val
            hypothesis.append(report.hypothesis_satisfied)
            if not report.passed:
                failures.append(report.to_json())
        rec["sets_checked"] = checked
        rec["lemma_summary"] = counts
        rec["hypothesis_satisfied"] = any(hypothesis)
        rec["status"] = "pass" if not failures else "fail"
        if checked == 1 and report is not None:
            rec["report"] = report.to_json()
        if failures:
            rec["failures"] = failures[:5]
        return rec

    for rec in _run_stream(args.input, handle, args.jobs):
        summary["graphs"] += 1
        if "error" in rec:
            summary["errors"] += 1
            if status == EXIT_OK:
                status = EXIT_INPUT
        elif rec["status"].startswith("skipped"):
            summary["skipped"] += 1
        else:
            summary["sets_checked"] += rec["sets_checked"]
            if rec["status"] == "pass":
                summary["passed"] += 1
            else:
                summary["failed"] += 1
                status = EXIT_CHECK_FAILED
        _emit(rec, out)
    if args.summary:
        _emit(summary, out)
    return status


def cmd_extremal(args, out) -> int:
    n, ell = args.n, args.ell
    rec = {"n": n, "ell": ell}
    try:
        if ell == 3:
            rec["formula"] = "mantel"
            rec["value"] = bounds.mantel_ex(n)
        else:
            rec["formula"] = "abajo_dianez"
            rec["value"] = bounds.abajo_dianez_ex(n, ell)
    except BoundDomainError as exc:
        raise UsageError(f"{exc} (Mantel covers ell=3, n>=1; the ell>=4 formula covers ell+1 <= n <= 2*ell)") from exc
    status = EXIT_OK
    if args.oracle:
        if n > bounds.EXTREMAL_MAX_N:
            raise UsageError(f"--oracle enumerates graphs only for n <= {bounds.EXTREMAL_MAX_N}")
        value, witness = bounds.extremal_bruteforce(n, ell)
        rec["oracle"] = value
        rec["witness"] = write_graph6(witness)
        rec["agree"] = value == rec["value"]
        if not rec["agree"]:
            status = EXIT_CHECK_FAILED
    _emit(rec, out)
    return status


def cmd_named(args, out) -> int:
    try:
        g = named_graph(args.name)
    except KeyError:
        raise UsageError(f"unknown graph {args.name!r}; known names: {', '.join(KNOWN_NAMES)}")
    line = write_graph6(g)
    if args.emit == "g6":
        out.write(line + "\n")
        return EXIT_OK
    start = time.perf_counter()
    rec = {"name": args.name, "graph6": line}
    rec.update(describe(g))
    rec.update(solve_record(g, _config(args)))
    status = EXIT_OK
    slack, st = _slack(rec, rec["z"])
    rec["slack"] = slack
    rec["status"] = st
    if st == "violation":
        status = EXIT_CHECK_FAILED
    if rec["girth"] is not None and rec["girth"] >= 5 and isinstance(rec["z"], int):
        report = run_all_checks(g, rec["witness"])
        rec["lemma_summary"] = report.counts()
        rec["hypothesis_satisfied"] = report.hypothesis_satisfied
        if not report.passed:
            status = EXIT_CHECK_FAILED
    rec["wall_time"] = round(time.perf_counter() - start, 6)
    _emit(rec, out)
    return status


# -- argument parsing ------------------------------------------------------


def _add_stream_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default="-",
                   help="graph6/sparse6 file, one graph per line (default: stdin)")
    p.add_argument("--jobs", type=int, default=1, help="graphs processed concurrently")
    p.add_argument("--summary", action="store_true", help="append one aggregate JSON object")


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None, help="search node budget per graph")
    p.add_argument("--workers", type=int, default=None,
                   help="solver threads per graph (default: $ZEROFORCING_WORKERS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeroforcing", description="Zero forcing numbers and the girth bound.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("number", help="exact zero forcing number of each input graph")
    _add_stream_args(p)
    _add_solver_args(p)
    p.add_argument("--oracle", action="store_true", help=f"cross-check with brute force (n <= {ORACLE_MAX_N})")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("check-bound", help="check Z(G) >= delta + (delta-2)(g-3) on each input graph")
    _add_stream_args(p)
    _add_solver_args(p)
    p.set_defaults(func=cmd_check_bound)

    p = sub.add_parser("lemmas", help="build the forcing apparatus and run every identity check")
    _add_stream_args(p)
    p.add_argument("--workers", type=int, default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--set", help="comma-separated zero forcing set, e.g. '0,1'")
    group.add_argument("--minimum", action="store_true", help="use the solver's minimum witness")
    group.add_argument("--all-minimum", action="store_true", help="check every minimum zero forcing set")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("extremal", help="ex(n; C3..C_ell) from the closed formulas")
    p.add_argument("n", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("--oracle", action="store_true", help="also enumerate all graphs (n <= 8)")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("named", help="emit or analyse a standard graph")
    p.add_argument("name", help=f"one of {', '.join(KNOWN_NAMES)}; sized ones as e.g. cycle(7)")
    p.add_argument("--emit", choices=("g6", "report"), default="report")
    _add_solver_args(p)
    p.set_defaults(func=cmd_named)
    return parser


def main(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if hasattr(args, "workers") and args.workers is None:
            args.workers = default_worker_count()
        if getattr(args, "jobs", 1) < 1 or getattr(args, "workers", 1) < 1:
            raise UsageError("--jobs and --workers must be positive")
        if getattr(args, "budget", None) is not None and args.budget < 1:
            raise UsageError("--budget must be positive")
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
