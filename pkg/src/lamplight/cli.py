"""``lamplight`` command-line entry point.

Exit status: 0 on success, 1 on a domain error (bad program, bad element,
unsatisfiable request), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .analysis import NotFixedShift, bit_window, normalize, semantic_table, shift_class
from .enumeration import LEVELS, PruneLevel, count_programs, enumerate_texts, growth_table, growth_table_csv
from .group import GroupElement, canonical_word, norm
from .lang import ParseError, Tape, parse, run
from .search import SearchSpec, equivalence_census, search_shortest
from .series import (
    CANONICAL_RADIUS_POLY,
    GRAMMARS,
    Series,
    SeriesError,
    growth_rate,
    ps_parry,
    series_L,
    series_Lk,
    series_Lk0,
    series_Lk1,
    smallest_positive_root,
)

SERIES_CHOICES = sorted(GRAMMARS) + ["L", "Lk", "Lk0", "Lk1", "parry"]


class DomainError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _program_arg(value: str):
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            value = fh.read()
    return parse(value)


def _json_arg(value: str):
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            value = fh.read()
    try:
        return json.loads(value)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None


def _named_series(which: str, order: int, k: int) -> Series:
    if which in GRAMMARS:
        return GRAMMARS[which](order)
    if which == "L":
        return series_L(order)
    if which == "Lk":
        return series_Lk(k, order)
    if which == "Lk0":
        return series_Lk0(k, order)
    if which == "Lk1":
        return series_Lk1(k, order)
    if which == "parry":
        return ps_parry(Series([1, 1], order))
    raise DomainError(f"unknown series {which!r}")


# -- subcommands ---------------------------------------------------------------


def cmd_run(args):
    tape = Tape.from_json(_json_arg(args.tape)) if args.tape else Tape()
    outcome = run(_program_arg(args.program), tape, args.fuel, detect_cycles=args.detect_cycles)
    return _dump(outcome.to_json())


def cmd_norm(args):
    x = GroupElement.from_json(_json_arg(args.element))
    n = norm(x)
    return _dump({"element": x.to_json(), "norm": str(n)}) if args.format == "json" else str(n)


def cmd_word(args):
    x = GroupElement.from_json(_json_arg(args.element))
    w = canonical_word(x)
    return _dump({"element": x.to_json(), "word": w}) if args.format == "json" else w


def cmd_series(args):
    s = _named_series(args.which, args.order, args.k)
    if args.format == "json":
        return s.to_json()
    if args.format == "csv":
        return s.to_csv().rstrip("\n")
    return "[" + ",".join(str(c) for c in s.coeffs) + "]"


def cmd_growth(args):
    s = _named_series(args.which, args.order, args.k)
    est, spread = growth_rate(s, args.window)
    if args.format == "json":
        return _dump({"which": args.which, "order": args.order, "estimate": repr(est), "spread": repr(spread)})
    return f"{est:.6f}"


def cmd_root(args):
    poly = [int(c) for c in args.poly.split(",")] if args.poly else list(CANONICAL_RADIUS_POLY)
    x = smallest_positive_root(poly, args.tol)
    if args.format == "json":
        return _dump({"poly": [str(c) for c in poly], "root": repr(x), "growth": repr(1 / x)})
    return f"{x:.10f}"


def cmd_enumerate(args):
    if args.count_only:
        return str(count_programs(args.length, args.level))
    texts = enumerate_texts(args.length, args.level)
    if args.format == "json":
        return _dump(texts)
    return "\n".join(texts)


def cmd_table(args):
    levels = [PruneLevel.parse(v) for v in args.levels.split(",")] if args.levels else list(LEVELS)
    rows = growth_table(args.max_n, levels)
    if args.format == "json":
        return _dump([{k: str(v) for k, v in row.items()} for row in rows])
    return growth_table_csv(rows).rstrip("\n")


def cmd_analyze(args):
    p = _program_arg(args.program)
    shift = shift_class(p)
    q = normalize(p)
    out = {
        "program": str(p),
        "shift": None if shift is None else shift,
        "normalized": str(q),
        "bottom": str(q) == "[]t[]",
    }
    if shift is not None:
        window = sorted(bit_window(p))
        out["window"] = window
        if len(window) <= args.table_cap:
            out["table"] = semantic_table(p).to_json()
    else:
        out["window"] = None
    return _dump(out)


def cmd_search(args):
    spec = SearchSpec.from_json(_json_arg(args.spec), args.max_length, args.level)
    result = search_shortest(spec, window_cap=args.window_cap)
    if not result.found and args.format == "text":
        raise DomainError(f"no fixed-shift program of length <= {args.max_length} matches")
    if args.format == "text":
        return str(result.program)
    return _dump(result.to_json())


def cmd_census(args):
    rows = equivalence_census(args.max_n, args.level)
    if args.format == "json":
        return _dump([r.to_json() for r in rows])
    lines = ["length,programs,cumulative_programs,buckets,duplicate_mass,duplicate_ratio"]
    for r in rows:
        lines.append(f"{r.length},{r.programs},{r.cumulative_programs},{r.buckets},{r.duplicate_mass},{r.duplicate_ratio:.6f}")
    return "\n".join(lines)


def cmd_soundness(args):
    from .soundness import check_normalize

    report = check_normalize(args.max_length, args.tapes, args.fuel, args.seed)
    if args.format == "json":
        return _dump(report.to_json())
    return (
        f"programs={report.programs} rewritten={report.rewritten} fixed={report.fixed_checked} "
        f"unbounded={report.unbounded_checked} violations={len(report.violations)} ok={report.ok}"
    )


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lamplight", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--manifest", metavar="PATH", help="write a run manifest JSON here")
        sp.set_defaults(func=func)
        return sp

    sp = add("run", cmd_run, "run a program on a tape", formats=("json",))
    sp.add_argument("--program", required=True, help="program text or a file containing it")
    sp.add_argument("--tape", help='tape JSON, e.g. {"ones":[0,3],"head":0}')
    sp.add_argument("--fuel", type=int, default=10**6)
    sp.add_argument("--detect-cycles", action="store_true")

    sp = add("norm", cmd_norm, "word norm of a group element")
    sp.add_argument("--element", required=True, help='e.g. {"lamps":[-2,1],"shift":3}')

    sp = add("word", cmd_word, "canonical minimal word of a group element")
    sp.add_argument("--element", required=True)

    sp = add("series", cmd_series, "coefficients of a generating function", formats=("text", "json", "csv"))
    sp.add_argument("--which", choices=SERIES_CHOICES, required=True)
    sp.add_argument("--order", type=int, default=60)
    sp.add_argument("--k", type=int, default=0, help="shift for Lk, Lk0, Lk1")

    sp = add("growth", cmd_growth, "estimated exponential growth rate of a series")
    sp.add_argument("--which", choices=SERIES_CHOICES, required=True)
    sp.add_argument("--order", type=int, default=200)
    sp.add_argument("--window", type=int, default=40)
    sp.add_argument("--k", type=int, default=0)

    sp = add("root", cmd_root, "smallest root in (0, 1) of an integer polynomial")
    sp.add_argument("--poly", help="comma-separated coefficients, constant term first")
    sp.add_argument("--tol", type=float, default=1e-12)

    sp = add("enumerate", cmd_enumerate, "list or count programs of one length")
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--level", type=PruneLevel.parse, default=PruneLevel.CANONICAL,
                    help="naive | canonical | dead-after | dead-inside | full")
    sp.add_argument("--count-only", action="store_true")

    sp = add("table", cmd_table, "program counts per length and level", formats=("csv", "json"))
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--levels", help="comma-separated levels (default: all)")

    sp = add("analyze", cmd_analyze, "shift, window, semantic table and normal form", formats=("json",))
    sp.add_argument("--program", required=True)
    sp.add_argument("--table-cap", type=int, default=20)

    sp = add("search", cmd_search,
             "shortest program with a given semantic table (fixed-shift candidates only)",
             formats=("json", "text"))
    sp.add_argument("--spec", required=True, help="semantic-table JSON or a file containing it")
    sp.add_argument("--max-length", type=int, required=True)
    sp.add_argument("--level", type=PruneLevel.parse, default=PruneLevel.FULL)
    sp.add_argument("--window-cap", type=int, default=16)

    sp = add("census", cmd_census, "bucket fixed-shift programs by behaviour", formats=("csv", "json"))
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--level", type=PruneLevel.parse, default=PruneLevel.FULL)

    sp = add("soundness", cmd_soundness, "check normalization against semantics exhaustively")
    sp.add_argument("--max-length", type=int, default=8)
    sp.add_argument("--tapes", type=int, default=100)
    sp.add_argument("--fuel", type=int, default=10**5)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def _write_manifest(path: str, args, argv, payload: str) -> None:
    params = {k: (v.label if isinstance(v, PruneLevel) else v)
              for k, v in sorted(vars(args).items()) if k not in ("func", "manifest")}
    manifest = {
        "command": args.command,
        "argv": list(argv),
        "parameters": params,
        "version": __version__,
        "output_sha256": hashlib.sha256(payload.encode("utf-8")).hexdigest(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = args.func(args)
    except (DomainError, ParseError, SeriesError, NotFixedShift, ValueError) as exc:
        print(f"lamplight: error: {exc}", file=sys.stderr)
        return 1
    print(payload)
    if args.manifest:
        _write_manifest(args.manifest, args, argv, payload + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
