"""Command line interface.

Exit codes: 0 success or pass, 1 a check failed, 2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .algebra import basis_change, table_differences, tables_equal
from .catalog import catalog_get, catalog_list
from .derivations import completeness_report, derivation_space, inner_derivations
from .errors import (
    CatalogError,
    ExtensionError,
    FormatError,
    LeibnizError,
    NotLeibnizError,
    ParameterError,
    PresentationError,
)
from .extension import build_extension
from .regressions import run_regressions
from .report import build_report, identity_summary

OK, FAILED, USAGE = 0, 1, 2


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _err(text: str):
    sys.stderr.write(text if text.endswith("\n") else text + "\n")


def _parse_pairs(items) -> dict:
    out = {}
    for item in items or []:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise FormatError(f"expected key=value, got {part!r}", "arguments")
            k, v = part.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def _matrix_text(M) -> str:
    return "\n".join("  [" + ", ".join(str(c) for c in row) + "]" for row in M.tolist())


# -- subcommands -----------------------------------------------------------

def cmd_check(args) -> int:
    A = io.load_algebra(args.file)
    summary = identity_summary(A)
    if args.json:
        _out(io.dumps(summary))
    elif summary["leibniz"]:
        _out(f"Leibniz: yes ({'Lie' if summary['lie'] else 'not Lie'})")
    else:
        _out(f"Leibniz: no, {summary['violation_count']} violating basis triple(s)")
        for v in summary["violations"]:
            _out(f"  L({', '.join(v['triple'])}) = {v['defect']}")
    return OK if summary["leibniz"] else FAILED


def cmd_analyze(args) -> int:
    A = io.load_algebra(args.file)
    report = build_report(A)
    if args.json:
        _out(io.dumps(report))
        return OK
    ident = report["identity"]
    _out(f"dimension {A.dim}; Leibniz {ident['leibniz']}; Lie {ident['lie']}")
    if not ident["leibniz"]:
        return OK
    s = report["series"]
    _out(f"lower central dims {s['lower_central_dims']}; derived dims {s['derived_dims']}")
    _out(f"nilpotent {s['nilpotent']} (nilindex {s['nilindex']}); solvable {s['solvable']}")
    for key, value in report["annihilators"].items():
        _out(f"{key.replace('_', ' ')} {value}")
    if report["generators"] is not None:
        _out(f"generators {report['generators']}")
    for key, value in report["completeness"].items():
        _out(f"{key} {value}")
    return OK


def cmd_derivations(args) -> int:
    A = io.load_algebra(args.file)
    der = derivation_space(A)
    inner = inner_derivations(A, check=False)
    if args.json:
        _out(io.dumps({
            "der_dim": der.dim,
            "inner_dim": inner.dim,
            "der_basis": [io.matrix_to_dict(D) for D in der.basis],
            "inner_basis": [io.matrix_to_dict(D) for D in inner.basis],
        }))
        return OK
    _out(f"dim Der = {der.dim}, dim Inner = {inner.dim}")
    for t, D in enumerate(der.basis, 1):
        _out(f"D{t} =")
        _out(_matrix_text(D))
    return OK


def cmd_complete(args) -> int:
    rep = completeness_report(io.load_algebra(args.file))
    if args.json:
        _out(io.dumps(rep.to_dict()))
    else:
        for key, value in rep.to_dict().items():
            _out(f"{key} {value}")
    return OK if rep.complete_def22 else FAILED


def cmd_extend(args) -> int:
    P = io.load_presentation(args.presentation)
    flags = {}
    for k, v in _parse_pairs(args.flags).items():
        if v not in ("0", "1"):
            raise FormatError(f"flag for {k} must be 0 or 1", "--flags")
        flags[k] = int(v)
    result = build_extension(P, flags or None)
    for w in result.warnings:
        _err(f"warning: {w}")
    table = io.algebra_to_dict(result.table)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(table))
        if args.json:
            _out(io.dumps(result.to_dict()))
        else:
            _out(f"wrote {result.table.dim}-dim extension to {args.output}")
            _out(f"b flags {dict(result.b_flags)}")
    elif args.json:
        _out(io.dumps({"extension": result.to_dict(), "table": table}))
    else:
        _out(io.dumps(table))
    return OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = catalog_list()
        if args.json:
            _out(io.dumps([{"name": e.name, "description": e.description,
                            "defaults": e.defaults, "presentation": e.has_presentation}
                           for e in entries]))
        else:
            for e in entries:
                params = ", ".join(f"{k}={v}" for k, v in e.defaults.items())
                _out(f"{e.name:10s} {e.description}" + (f"  [{params}]" if params else ""))
        return OK
    if not args.name:
        raise FormatError("catalog get needs an entry name", "arguments")
    inst = catalog_get(args.name, _parse_pairs(args.param))
    if args.presentation:
        if inst.presentation is None:
            raise CatalogError(f"{args.name} has no word presentation")
        _out(io.dumps(io.presentation_to_dict(inst.presentation)))
    else:
        _out(io.dumps_algebra(inst.table))
    return OK


def cmd_basis_change(args) -> int:
    A = io.load_algebra(args.file)
    M = io.load_matrix(args.matrix)
    _out(io.dumps_algebra(basis_change(A, M)))
    return OK


def cmd_compare(args) -> int:
    A = io.load_algebra(args.a)
    B = io.load_algebra(args.b)
    if args.via:
        A = basis_change(A, io.load_matrix(args.via))
    equal = tables_equal(A, B)
    diffs = [] if equal else table_differences(A, B)
    if args.json:
        _out(io.dumps({"equal": equal, "differences": diffs}))
    else:
        _out("equal" if equal else "different")
        for d in diffs:
            _out(f"  {d}")
    return OK if equal else FAILED


def cmd_regress(args) -> int:
    cases = run_regressions()
    if args.json:
        _out(io.dumps([c.to_dict() for c in cases]))
    else:
        for c in cases:
            _out(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    return OK if all(c.passed for c in cases) else FAILED


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    parser = argparse.ArgumentParser(prog="leibniz-ext", parents=[common],
                                     description="Exact computations with Leibniz algebra tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Leibniz and Lie identity check")
    p.add_argument("file", help="algebra file, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", parents=[common], help="full structural report")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("derivations", parents=[common], help="derivation and inner derivation spaces")
    p.add_argument("file")
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("complete", parents=[common], help="completeness report")
    p.add_argument("file")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("extend", parents=[common], help="build the maximal solvable extension")
    p.add_argument("presentation")
    p.add_argument("--flags", action="append", help="abelian flags, e.g. e2=0,e3=1")
    p.add_argument("-o", "--output", help="write the extension table here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("catalog", parents=[common], help="built-in tables")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", help="k=v, repeatable or comma separated")
    p.add_argument("--presentation", action="store_true", help="emit the word presentation")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("basis-change", parents=[common], help="rewrite a table in a new basis")
    p.add_argument("file")
    p.add_argument("--matrix", required=True, help="matrix file; rows are the new basis")
    p.set_defaults(func=cmd_basis_change)

    p = sub.add_parser("compare", parents=[common], help="structural table equality")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--via", help="apply this basis change to the first table")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("regress", parents=[common], help="run the golden regression cases")
    p.set_defaults(func=cmd_regress)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (FormatError, CatalogError, ParameterError, PresentationError) as exc:
        _err(f"error: {exc}")
        return USAGE
    except (ExtensionError, NotLeibnizError) as exc:
        _err(f"failed: {exc}")
        return FAILED
    except LeibnizError as exc:
        _err(f"error: {exc}")
        return USAGE


def main():
    sys.exit(cli_main())
