"""Command-line front end: ``python -m poptamari`` or the ``poptamari`` script.

Exit codes: 0 on success, 1 when a verification or cross-check fails,
2 for bad input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import lattice as lat
from . import orbits as orb
from . import sortable as srt
from .counting import g_sequence, pell
from .nu_tamari import DEFAULT_CAP, CapExceeded, NotInLattice, m_tamari_path, parse_nu, tamari
from .verify import SUITES, run_suites

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _resolve_nu(args) -> str:
    if args.nu is not None:
        if args.m is not None or args.n is not None:
            raise UsageError("give either --nu or --m/--n, not both")
        return parse_nu(args.nu)
    if args.m is None or args.n is None:
        raise UsageError("a base path is required: --nu WORD or --m M --n N")
    return m_tamari_path(args.m, args.n)


def _m_tamari_params(nu: str) -> tuple[int, int] | None:
    n = nu.count("N")
    if n == 0 or nu[0] != "N":
        return None
    m = len(nu) // n - 1
    return (m, n) if m >= 1 and nu == m_tamari_path(m, n) else None


# commands

def cmd_enumerate(args) -> int:
    nu = _resolve_nu(args)
    T = tamari(nu)
    paths = T.enumerate(args.cap)
    if args.format == "dot":
        sys.stdout.write(T.to_dot(args.cap))
        return 0
    rows = [(mu, T.bracket(mu)) for mu in paths]
    if args.format == "json":
        _emit({"schema": SCHEMA, "nu": nu, "count": len(rows),
               "paths": [{"path": mu, "bracket": list(b)} for mu, b in rows]})
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["path", "bracket"])
        for mu, b in rows:
            writer.writerow([mu, " ".join(map(str, b))])
        sys.stdout.write(buf.getvalue())
    else:
        width = max((len(mu) for mu, _ in rows), default=0)
        for mu, b in rows:
            print(f"{mu or '-':<{width}}  {' '.join(map(str, b))}")
    return 0


def cmd_orbit(args) -> int:
    nu = _resolve_nu(args)
    if args.mu is not None:
        rec = orb.forward_orbit(nu, args.mu.strip().upper())
        _emit({"schema": SCHEMA, "nu": nu, "mu": rec.base, "size": rec.size,
               "trajectory": [list(b) for b in rec.trajectory], "paths": rec.paths})
        return 0
    report = orb.orbit_report(nu, args.cap)
    agree = report["theta"] == report["max_exhaustive"]
    if args.max:
        report = {k: report[k] for k in ("schema", "nu", "theta", "max_exhaustive")}
    report["agree"] = agree
    _emit(report)
    return 0 if agree else 1


def _formula_count(nu: str, t: int) -> int | None:
    if t == 0:
        return 1
    if t == 1:
        return srt.count_1_sortable(nu)
    if t == 2:
        direct = srt.count_2_sortable_formula(nu)
        if direct is not None:
            return direct
        mn = _m_tamari_params(nu)
        if mn is not None:
            m, n = mn
            return pell(n) if m == 1 else g_sequence(n)
    return None


def cmd_sortable(args) -> int:
    nu = _resolve_nu(args)
    t = args.t
    if t < 0:
        raise UsageError("--t must be nonnegative")
    method = args.method
    notes = []
    paths = None
    if method == "auto":
        method = "formula" if _formula_count(nu, t) is not None and not args.paths else (
            "recursion" if t == 2 else "brute")
    if method == "formula":
        count = _formula_count(nu, t)
        if count is None:
            notes.append(f"no closed form applies to t={t} on this path; fell back to brute force")
            method = "brute"
    if method == "recursion":
        if t != 2:
            raise UsageError("the recursion method is only available for t=2")
        paths = srt.enumerate_2_sortable(nu)
        count = len(paths)
    if method == "brute":
        paths = srt.enumerate_t_sortable_brute(nu, t, args.cap)
        count = len(paths)
    out = {"schema": SCHEMA, "nu": nu, "t": t, "count": count, "method": method}
    status = 0
    if args.cross_check:
        brute = srt.enumerate_t_sortable_brute(nu, t, args.cap)
        checks = {"brute": len(brute)}
        formula = _formula_count(nu, t)
        if formula is not None:
            checks["formula"] = formula
        if t == 2:
            checks["recursion"] = len(srt.enumerate_2_sortable(nu))
        out["cross_check"] = checks
        out["agree"] = len(set(checks.values()) | {count}) == 1
        if not out["agree"]:
            print(f"cross-check mismatch: {checks}", file=sys.stderr)
            status = 1
    if args.paths:
        if paths is None:
            paths = srt.enumerate_t_sortable_brute(nu, t, args.cap)
        out["paths"] = paths
    if notes:
        out["notes"] = notes
    _emit(out)
    return status


def cmd_verify(args) -> int:
    names = args.suite
    try:
        results = run_suites(names, m=args.m, n_max=args.n_max, small=args.small)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]) + f"; known: {', '.join(SUITES)}, all") from None
    ok = all(r.passed for r in results)
    _emit({"schema": SCHEMA, "passed": ok, "results": [r.as_dict() for r in results]})
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checks, {r.seconds}s)", file=sys.stderr)
    return 0 if ok else 1


def cmd_conjecture(args) -> int:
    table = srt.conjecture_table(args.m, args.t, args.n_max, args.cap)
    if args.format == "json":
        _emit(table)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "t", "n", "h"])
        for row in table["rows"]:
            writer.writerow([args.m, args.t, row["n"], row["h"]])
        sys.stdout.write(buf.getvalue())
        print(f"heuristic recurrence: {table['recurrence_heuristic']}", file=sys.stderr)
        for name, ok in table["checks"].items():
            print(f"check {name}: {'ok' if ok else 'MISMATCH'}", file=sys.stderr)
    return 0 if all(table["checks"].values()) else 1


def cmd_lattice(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            L = lat.parse_hasse(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    if args.dual:
        L = lat.dual(L)
    if args.format == "dot":
        sys.stdout.write(lat.to_dot(L))
        return 0
    if args.format == "hasse":
        sys.stdout.write(lat.format_hasse(L))
        return 0
    c = lat.classify(L)
    _emit({
        "schema": SCHEMA,
        "size": L.size,
        "covers": len(L.covers),
        "graded": c.graded,
        "atomic": c.atomic,
        "semimodular": c.semimodular,
        "geometric": c.geometric,
        "pop_trivial": lat.is_pop_trivial(L),
        "pop": list(lat.pop_map(L)),
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poptamari", description="Pop operators on finite lattices and nu-Tamari lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def base_path(p):
        p.add_argument("--nu", help="base path as an N/E word, or (m,n) for (N E^m)^n")
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum lattice size to enumerate")

    p = sub.add_parser("enumerate", help="list the paths of Tam(nu) with their bracket vectors")
    base_path(p)
    p.add_argument("--format", choices=["json", "csv", "dot", "table"], default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orbit", help="Pop orbits: one trajectory, or the full size histogram")
    base_path(p)
    p.add_argument("--mu", help="follow the orbit of this path")
    p.add_argument("--max", action="store_true", help="only report theta and the exhaustive maximum")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("sortable", help="count t-Pop-sortable paths")
    base_path(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=["auto", "brute", "recursion", "formula"], default="auto")
    p.add_argument("--paths", action="store_true", help="include the paths themselves")
    p.add_argument("--cross-check", action="store_true", help="compare against brute force")
    p.set_defaults(func=cmd_sortable)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="+", help=f"one or more of: {', '.join(SUITES)}, or all")
    p.add_argument("--m", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--small", action="store_true", help="smaller instances for a quick run")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="tabulate t-sortable counts in m-Tamari lattices")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("lattice", help="analyse a lattice given as a Hasse diagram file")
    p.add_argument("file")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--format", choices=["json", "dot", "hasse"], default="json")
    p.set_defaults(func=cmd_lattice)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, NotInLattice, lat.LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
