"""
Command-line front end: every verification suite as a subcommand with
machine-readable output.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.  Output is
deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import get_context

from . import complexes, e1page, ledger
from .ribbon import oracle_boundary_count
from .surfaces import (
    ArcClass,
    SurfaceType,
    boundary_of_neighborhood,
    cut_surface,
    simplex_genus,
)

FORMATS = ("json", "csv", "table")
FORMAT_ENV = "ARCCALC_FORMAT"

# registry used both to build the parser and to answer --describe
COMMAND_FLAGS: dict[str, list[tuple[str, dict]]] = {
    "invariants": [
        ("--perm", {"required": True, "help": "comma-separated word, e.g. 1,2,0"}),
        ("--side", {"type": int, "choices": (1, 2), "required": True, "help": "1 or 2"}),
        ("--ambient", {"default": None, "help": "ambient surface as g,r"}),
    ],
    "oracle-diff": [
        ("--max-degree", {"type": int, "default": 6, "help": "exhaustive degree cap (<= 8)"}),
    ],
    "homology": [
        ("--genus", {"type": int, "required": True, "help": "quotient genus (>= 2)"}),
        ("--side", {"type": int, "choices": (1, 2), "required": True, "help": "1 or 2"}),
        ("--max-degree", {"type": int, "default": None, "help": "degree cap (<= 8)"}),
    ],
    "homotopy": [
        ("--max-degree", {"type": int, "default": 6, "help": "exhaustive degree cap (<= 8)"}),
        ("--genus", {"type": int, "default": None, "help": "also check the quotient lift at this genus"}),
        ("--side", {"type": int, "choices": (1, 2), "default": None, "help": "side for the quotient lift"}),
        ("--samples", {"type": int, "default": 0, "help": "random words per sampled degree"}),
        ("--sample-degree", {"type": int, "action": "append", "default": None, "help": "degree to sample (repeatable)"}),
    ],
    "e1": [
        ("--ambient", {"required": True, "help": "ambient surface as g,r"}),
        ("--side", {"type": int, "choices": (1, 2), "required": True, "help": "1 or 2"}),
        ("--max-p", {"type": int, "default": 4, "help": "last page column"}),
        ("--with-d1", {"action": "store_true", "help": "emit first-differential matrices and check them"}),
    ],
    "ledger": [
        ("--g-max", {"type": int, "default": 50, "help": "genus grid bound"}),
        ("--k-max", {"type": int, "default": 20, "help": "degree grid bound"}),
        ("--failures-only", {"action": "store_true", "help": "emit only violated obligations"}),
    ],
    "exceptions": [
        ("--case", {"required": True, "choices": ledger.EXCEPTION_CASES, "help": "exception list to re-derive"}),
    ],
}

COMMAND_HELP = {
    "invariants": "thickening invariants and stabilizer label of one arc class",
    "oracle-diff": "closed-form boundary count vs ribbon trace, exhaustively",
    "homology": "exactness report of the realizability quotient complex",
    "homotopy": "contraction identity on the full and quotient complexes",
    "e1": "first-page summand tables and first differentials",
    "exceptions": "brute-force orbit-set exception lists",
    "ledger": "inequality obligations of the stability induction",
}


GLOBAL_FLAGS: list[tuple[str, dict]] = [
    ("--format", {"choices": FORMATS, "default": None, "help": f"output format (default from ${FORMAT_ENV} or table)"}),
    ("--output", {"default": None, "help": "write the report to this path instead of stdout"}),
    ("--threads", {"type": int, "default": 1, "help": "worker count for exhaustive sweeps"}),
    ("--seed", {"type": int, "default": 0, "help": "seed for sampled checks"}),
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arccalc",
        description="combinatorial arc-system calculus: invariants, homology, stability bookkeeping",
    )
    parser.add_argument("--describe", action="store_true", help="print a JSON description of all subcommands and exit")
    sub = parser.add_subparsers(dest="command")
    for name, flags in COMMAND_FLAGS.items():
        p = sub.add_parser(name, help=COMMAND_HELP[name])
        for flag, kwargs in flags + GLOBAL_FLAGS:
            p.add_argument(flag, **kwargs)
    return parser


def describe() -> dict:
    return {
        "commands": {
            name: {
                "help": COMMAND_HELP[name],
                "flags": [flag for flag, _ in flags] + [flag for flag, _ in GLOBAL_FLAGS],
            }
            for name, flags in sorted(COMMAND_FLAGS.items())
        },
        "global_flags": ["--describe"] + [flag for flag, _ in GLOBAL_FLAGS],
        "formats": list(FORMATS),
        "format_env": FORMAT_ENV,
        "exit_codes": {"pass": 0, "check_failure": 1, "usage_error": 2},
    }


def _parse_perm(text: str, parser: argparse.ArgumentParser) -> tuple[int, ...]:
    try:
        from .perms import as_perm

        return as_perm(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        parser.error(str(exc))


def _parse_surface(text: str, parser: argparse.ArgumentParser) -> SurfaceType:
    try:
        g, r = (int(x) for x in text.split(","))
        return SurfaceType(g, r)
    except ValueError as exc:
        parser.error(f"bad surface {text!r}: {exc}")


def _check_degree_cap(value: int, parser: argparse.ArgumentParser) -> int:
    if not 1 <= value <= complexes.MAX_DEGREE_CAP:
        parser.error(f"degree cap must be in [1, {complexes.MAX_DEGREE_CAP}]")
    return value


def _oracle_block(task: tuple[int, int]) -> list[dict]:
    degree, side = task
    from .perms import all_perms

    rows = []
    for w in all_perms(degree):
        a = ArcClass(w, side)
        formula = boundary_of_neighborhood(a)
        trace = oracle_boundary_count(a)
        if formula != trace:
            rows.append(
                {
                    "degree": degree,
                    "side": side,
                    "perm": ",".join(map(str, w)),
                    "formula": formula,
                    "trace": trace,
                }
            )
    return rows


def _pmap(fn, tasks: list, threads: int) -> list:
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with get_context("fork").Pool(threads) as pool:
        return pool.map(fn, tasks)


def run_invariants(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    perm = _parse_perm(args.perm, parser)
    a = ArcClass(perm, args.side)
    formula = boundary_of_neighborhood(a)
    trace = oracle_boundary_count(a)
    row = {
        "perm": ",".join(map(str, perm)),
        "side": args.side,
        "neighborhood_boundary": formula,
        "trace_count": trace,
        "simplex_genus": simplex_genus(a),
    }
    ok = formula == trace
    if args.ambient is not None:
        ambient = _parse_surface(args.ambient, parser)
        try:
            label = cut_surface(ambient, a)
        except ValueError as exc:
            parser.error(str(exc))
        row["stabilizer_g"] = label.g
        row["stabilizer_r"] = label.r
        columns = ("perm", "side", "neighborhood_boundary", "trace_count", "simplex_genus", "stabilizer_g", "stabilizer_r")
    else:
        columns = ("perm", "side", "neighborhood_boundary", "trace_count", "simplex_genus")
    return {"rows": [row]}, columns, ok


def run_oracle_diff(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    cap = _check_degree_cap(args.max_degree, parser)
    tasks = [(d, side) for d in range(1, cap + 1) for side in (1, 2)]
    rows = [row for block in _pmap(_oracle_block, tasks, args.threads) for row in block]
    from math import factorial

    checked = 2 * sum(factorial(d) for d in range(1, cap + 1))
    return {"rows": rows, "checked": checked}, ("degree", "side", "perm", "formula", "trace"), not rows


def run_homology(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    if args.genus < 2:
        parser.error("quotient genus must be >= 2")
    if args.max_degree is not None:
        _check_degree_cap(args.max_degree, parser)
    rows = complexes.exactness_report(args.genus, args.side, args.max_degree)
    for r in rows:
        r["torsion"] = ";".join(map(str, r["torsion"])) or "-"
    ok = all(r["trivial"] for r in rows if r["guaranteed"])
    return {"rows": rows}, ("degree", "betti", "torsion", "trivial", "guaranteed"), ok


def run_homotopy(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    cap = _check_degree_cap(args.max_degree, parser)
    if (args.genus is None) != (args.side is None):
        parser.error("--genus and --side go together")
    rows = []
    rep = complexes.verify_homotopy(cap)
    rows.append({"check": "full-complex", "detail": f"degrees 2..{cap}", "checked": rep.checked, "failures": len(rep.failures), "ok": rep.ok})
    if args.genus is not None:
        if args.genus < 2:
            parser.error("quotient genus must be >= 2")
        qrep = complexes.verify_quotient_homotopy(args.genus, args.side)
        rows.append({"check": "quotient-lift", "detail": f"g={args.genus} side={args.side}", "checked": qrep.checked, "failures": len(qrep.failures), "ok": qrep.ok})
    for d in args.sample_degree or ([7, 8] if args.samples else []):
        _check_degree_cap(d, parser)
        srep = complexes.verify_homotopy_sampled(d, args.samples, args.seed)
        rows.append({"check": "sampled", "detail": f"degree {d}", "checked": srep.checked, "failures": len(srep.failures), "ok": srep.ok})
    return {"rows": rows}, ("check", "detail", "checked", "failures", "ok"), all(r["ok"] for r in rows)


def run_e1(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    ambient = _parse_surface(args.ambient, parser)
    try:
        page = e1page.e1_skeleton(ambient, args.side, args.max_p)
    except ValueError as exc:
        parser.error(str(exc))
    rows = []
    for p in range(1, page.max_p + 1):
        for s in page.column(p):
            rows.append(
                {
                    "p": p,
                    "perm": ",".join(map(str, s.perm)),
                    "genus": s.genus,
                    "stabilizer_g": s.stabilizer.g,
                    "stabilizer_r": s.stabilizer.r,
                }
            )
    extra = {"rows": rows, "vanishing_bound": page.vanishing_bound}
    ok = True
    if args.with_d1:
        matrices = {}
        for p in range(2, page.max_p + 1):
            m = e1page.d1_matrix(page, p)
            ok = ok and m == e1page.quotient_boundary_matrix(page, p)
            matrices[str(p)] = m.to_triples()
        extra["d1"] = matrices
    return extra, ("p", "perm", "genus", "stabilizer_g", "stabilizer_r"), ok


def run_ledger(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    if args.g_max < 1 or args.k_max < 1:
        parser.error("grid bounds must be >= 1")
    obligations = ledger.main_theorem_ledger(args.g_max, args.k_max)
    ok = all(o.holds for o in obligations)
    selected = [o for o in obligations if not o.holds] if args.failures_only else obligations
    rows = [
        {
            "claim": o.claim,
            "params": ";".join(f"{k}={v}" for k, v in sorted(o.params.items())),
            "inequality": o.inequality,
            "holds": o.holds,
        }
        for o in selected
    ]
    return {"rows": rows, "total": len(obligations)}, ("claim", "params", "inequality", "holds"), ok


def run_exceptions(args, parser) -> tuple[dict, tuple[str, ...], bool]:
    ok, computed = ledger.check_orbit_set_exceptions(args.case)
    rows = [
        {"case": t.case, "l": t.lm[0], "m": t.lm[1], "n": t.n, "g": t.g, "k": t.k}
        for t in computed
    ]
    return {"rows": rows}, ("case", "l", "m", "n", "g", "k"), ok


RUNNERS = {
    "invariants": run_invariants,
    "oracle-diff": run_oracle_diff,
    "homology": run_homology,
    "homotopy": run_homotopy,
    "e1": run_e1,
    "ledger": run_ledger,
    "exceptions": run_exceptions,
}


def _render(report: dict, columns: tuple[str, ...], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    rows = report["rows"]
    if fmt == "csv":
        lines = [",".join(columns)]
        for r in rows:
            lines.append(",".join(str(r.get(c, "")) for c in columns))
        return "\n".join(lines) + "\n"
    widths = [max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c) for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(w) for c, w in zip(columns, widths)))
    summary = {k: v for k, v in report.items() if k not in ("rows", "d1", "command", "ok")}
    extras = "  ".join(f"{k}={v}" for k, v in sorted(summary.items()))
    lines.append(f"ok: {report['ok']}" + (f"  ({extras})" if extras else ""))
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.describe:
        sys.stdout.write(json.dumps(describe(), sort_keys=True, indent=2) + "\n")
        return 0
    if args.command is None:
        parser.error("a subcommand is required (or --describe)")
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    fmt = args.format or os.environ.get(FORMAT_ENV) or "table"
    if fmt not in FORMATS:
        parser.error(f"bad format {fmt!r} (from ${FORMAT_ENV}?)")
    report, columns, ok = RUNNERS[args.command](args, parser)
    report["command"] = args.command
    report["ok"] = ok
    text = _render(report, columns, fmt)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
