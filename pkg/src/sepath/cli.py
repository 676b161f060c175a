"""``sepath`` command line.

Exit codes: 0 success, 1 semantic failure (not separating, bound violated,
search without a result), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .circulant import PathFamily
from .constructions.best import (
    NotApplicable,
    construct,
    construct_best,
    lower_bound,
    upper_bound,
)
from .constructions.forest import ConstructionError
from .figures import to_dot, to_svg
from .io import FamilyFile, FamilyFileError
from .search import MAX_EXACT_N, BudgetExceeded, SearchBudget, exact_min_sps, search_generator
from .verify import STRONG_MAX_N, lb_diagnostics, verify_strong, verify_weak

OK, FAIL, USAGE = 0, 1, 2

CSV_HEADER = ["n", "method", "size", "lower_bound", "upper_bound", "separating"]

METHOD_NAMES = {
    "auto": None,
    "catalog": "catalog",
    "prime": "prime",
    "prime-plus-one": "prime_plus_one",
    "main": "main",
    "search": "search",
}


def _err(msg: str) -> None:
    print(f"sepath: {msg}", file=sys.stderr)


def _budget(args) -> SearchBudget | None:
    if args.max_nodes is None and args.time_limit is None:
        return None
    return SearchBudget(max_nodes=args.max_nodes, wall_time_limit=args.time_limit)


def thread_count() -> int:
    raw = os.environ.get("SEPATH_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise ValueError(f"SEPATH_THREADS must be an integer >= 1, got {raw!r}") from None
    if k < 1:
        raise ValueError(f"SEPATH_THREADS must be an integer >= 1, got {raw!r}")
    return k


def cmd_construct(args) -> int:
    n = args.n
    if n < 2:
        _err(f"--n must be >= 2, got {n}")
        return USAGE
    method = METHOD_NAMES[args.method]
    try:
        if method is None:
            family, prov = construct_best(n, _budget(args))
        else:
            family, prov = construct(n, method, _budget(args))
    except NotApplicable as exc:
        _err(f"method {args.method} not applicable: {exc}")
        return USAGE
    except ConstructionError as exc:
        _err(str(exc))
        return FAIL
    # construct() has already verified; check again on exactly what is written
    report = verify_weak(family)
    out = FamilyFile.from_construction(family, prov, with_trace=args.trace)
    if args.out:
        out.save(args.out)
    else:
        sys.stdout.write(out.dumps())
    bound = prov.bound_claimed if prov.bound_claimed is not None else "n/a"
    print(f"n={n} method={prov.method} size={len(family)} bound={bound} "
          f"separating={str(report.separating).lower()}",
          file=sys.stderr if not args.out else sys.stdout)
    if not report.separating:
        return FAIL
    return OK


def cmd_verify(args) -> int:
    try:
        ff = FamilyFile.load(args.family)
    except FamilyFileError as exc:
        _err(f"{args.family}: {exc}")
        return USAGE
    except OSError as exc:
        _err(str(exc))
        return USAGE
    family = ff.family
    if args.mode == "strong":
        if family.n > STRONG_MAX_N and not args.force:
            _err(f"strong verification is capped at n <= {STRONG_MAX_N}; use --force")
            return USAGE
        report = verify_strong(family, force=True)
    else:
        report = verify_weak(family)
    out = report.to_dict()
    if args.diagnostics:
        out["diagnostics"] = lb_diagnostics(family).to_dict()
    print(json.dumps(out, indent=2))
    return OK if report.separating else FAIL


def cmd_search(args) -> int:
    budget = _budget(args) or SearchBudget()
    if args.exact:
        if not 2 <= args.n <= MAX_EXACT_N:
            _err(f"exact search only covers 2 <= n <= {MAX_EXACT_N}; n={args.n} is out of reach")
            return USAGE
        try:
            k, family = exact_min_sps(args.n, budget)
        except BudgetExceeded as exc:
            _err(str(exc))
            return FAIL
        print(json.dumps({"n": args.n, "minimum": k, "witness": [list(p) for p in family]}))
        return OK
    if args.n < 3:
        _err("generator search needs n >= 3")
        return USAGE
    result = search_generator(args.n, budget)
    print(json.dumps({
        "n": args.n,
        "outcome": result.outcome,
        "path": list(result.path) if result.path else None,
        "nodes": result.nodes,
    }))
    if result.path and args.out:
        family = PathFamily.from_rotations(args.n, result.path)
        FamilyFile(family, {"method": "search", "size": len(family),
                            "bound_claimed": args.n}).save(args.out)
    return OK if result.path else FAIL


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like A..B, got {text!r}") from None
    if not 2 <= a <= b:
        raise argparse.ArgumentTypeError(f"range needs 2 <= A <= B, got {text!r}")
    return a, b


def report_row(n: int) -> tuple[list, PathFamily]:
    family, prov = construct_best(n)
    ok = verify_weak(family).separating
    row = [n, prov.method, len(family), lower_bound(n), upper_bound(n), str(ok).lower()]
    return row, family


def cmd_report(args) -> int:
    a, b = args.range
    try:
        workers = thread_count()
    except ValueError as exc:
        _err(str(exc))
        return USAGE
    ns = list(range(a, b + 1))
    if workers > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(report_row, ns))
    else:
        results = [report_row(n) for n in ns]

    with open(args.out, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row, _ in results:
            w.writerow(row)

    if args.figures:
        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        for row, family in results:
            n = row[0]
            # the first path is the generator (or base path) in every construction
            (fig_dir / f"K{n}.dot").write_text(to_dot(family, [0]))
            (fig_dir / f"K{n}.svg").write_text(to_svg(family, [0]))

    bad = [row[0] for row, _ in results if row[5] != "true" or row[2] > row[4]]
    if bad:
        _err(f"failed rows: {bad}")
        return FAIL
    return OK


def _index_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}") from None


def cmd_draw(args) -> int:
    try:
        family = FamilyFile.load(args.family).family
    except (FamilyFileError, OSError) as exc:
        _err(f"{args.family}: {exc}")
        return USAGE
    fmt = args.format or ("dot" if args.out.endswith(".dot") else "svg")
    try:
        text = to_dot(family, args.paths) if fmt == "dot" else to_svg(family, args.paths)
    except IndexError as exc:
        _err(str(exc))
        return USAGE
    Path(args.out).write_text(text)
    return OK


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=None, help="search node cap")
    p.add_argument("--time-limit", type=float, default=None, help="search wall time in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepath", description="Separating path systems of K_n")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a separating family and write it as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=list(METHOD_NAMES), default="auto")
    p.add_argument("--out", help="output file (stdout if omitted)")
    p.add_argument("--trace", action="store_true", help="include the construction trace")
    _add_budget(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a family file")
    p.add_argument("family")
    p.add_argument("--mode", choices=["weak", "strong"], default="weak")
    p.add_argument("--force", action="store_true", help=f"allow strong checks above n={STRONG_MAX_N}")
    p.add_argument("--diagnostics", action="store_true", help="add lower-bound diagnostics")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search for a generator path, or an exact minimum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help=f"exact minimum family (n <= {MAX_EXACT_N})")
    p.add_argument("--out", help="write the rotation family of a found generator")
    _add_budget(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="best construction for a range of n, as CSV")
    p.add_argument("--range", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--out", required=True)
    p.add_argument("--figures", metavar="DIR", help="also write DOT/SVG of each base path")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("draw", help="circular drawing of a family file")
    p.add_argument("family")
    p.add_argument("--out", required=True)
    p.add_argument("--paths", type=_index_list, default=None, help="indices to draw, e.g. 0,1")
    p.add_argument("--format", choices=["dot", "svg"])
    p.set_defaults(func=cmd_draw)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
