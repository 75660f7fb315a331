"""``hopfind`` command line.

Inputs are JSON files (algebra or constructor documents), ``-`` for stdin, or
``fixture:NAME`` for a bundled example.  Exit codes: 0 success, 1 a
mathematical failure (axiom, predicate, missing hypothesis), 2 I/O or parse
failure.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fixtures, io, oracle
from .constructors import GroupTable
from .filtration import (
    FiniteAlgebra,
    GradingError,
    chevalley_summary,
    coradical_filtration,
    graded_from_coradical,
    graded_from_jadic,
    jacobson_radical,
    jadic_filtration,
)
from .hopf_core import co_opposite, dual, opposite, tensor, validate
from .indicators import indicator_report

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def _load(source: str):
    if source.startswith("fixture:"):
        try:
            return fixtures.fixture(source.split(":", 1)[1])
        except KeyError as exc:
            raise io.DocumentError(exc.args[0]) from exc
    return io.load(source)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _emit_algebra(H, degrees=None) -> None:
    print(io.dumps(io.to_document(H, degrees)))


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    H = _load(args.input)
    failures = validate(H, sample=args.fast)
    if args.json:
        _emit({"algebra": H.name or args.input, "valid": not failures,
               "failures": [{"axiom": f.axiom, "index": list(f.index)} for f in failures]})
    elif failures:
        for f in failures:
            print(f"FAIL {f}")
    else:
        print(f"valid: {H.name or args.input} (dim {H.dim} over GF({H.p}))")
    return EXIT_MATH if failures else EXIT_OK


def cmd_indicators(args) -> int:
    H = _load(args.input)
    report = indicator_report(H, args.n_from, args.n_to)
    print(report.dumps() if args.json else report.table())
    return EXIT_OK


def cmd_filtration(args) -> int:
    H = _load(args.input)
    F = coradical_filtration(H) if args.kind == "coradical" else jadic_filtration(H)
    _emit(F.to_json())
    return EXIT_OK


def cmd_gr(args) -> int:
    H = _load(args.input)
    G = graded_from_coradical(H) if args.kind == "c" else graded_from_jadic(H)
    _emit_algebra(G.base, G.degrees)
    return EXIT_OK


def cmd_radical(args) -> int:
    H = _load(args.input)
    J = jacobson_radical(FiniteAlgebra.of(H))
    _emit({"kind": "radical", "dims": [J.dim], "basis": J.basis.tolist()})
    return EXIT_OK


def cmd_unary(fn):
    def run(args) -> int:
        _emit_algebra(fn(_load(args.input)))
        return EXIT_OK
    return run


def cmd_tensor(args) -> int:
    _emit_algebra(tensor(_load(args.left), _load(args.right)))
    return EXIT_OK


def cmd_check(args) -> int:
    _emit(chevalley_summary(_load(args.input)))
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.name is None:
        print("\n".join(fixtures.names()))
        return EXIT_OK
    _emit_algebra(_load("fixture:" + args.name))
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.what == "count":
        try:
            with open(args.input) as fh:
                G = GroupTable.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
            raise io.DocumentError(str(exc)) from exc
        _emit({"n": args.n, "p": args.p, "count": oracle.group_indicator_count(G, args.n, args.p)})
        return EXIT_OK
    H = _load(args.input)
    if args.what == "sweedler":
        vec = np.zeros(H.dim, dtype=np.int64)
        if args.vector:
            vec = np.array([int(v) for v in args.vector.split(",")], dtype=np.int64)
            if vec.shape != (H.dim,):
                raise io.DocumentError(f"vector must have {H.dim} comma-separated entries")
        else:
            vec[args.basis] = 1
        _emit({"m": args.m, "result": oracle.sweedler_bruteforce(H, vec, args.m).tolist()})
    elif args.what == "radical":
        J = oracle.radical_enumeration(FiniteAlgebra.of(H))
        _emit({"kind": "radical", "dims": [J.dim], "basis": J.basis.tolist()})
    else:
        vectors, table = oracle.grouplike_enumeration(H)
        _emit({"grouplikes": [v.tolist() for v in vectors], "table": table})
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfind", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check every Hopf algebra axiom")
    p.add_argument("input")
    p.add_argument("--fast", type=int, metavar="N", help="sample N index tuples per axiom")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("indicators", help="indicator sequence, min poly, period, p-pertinence")
    p.add_argument("input")
    p.add_argument("--from", dest="n_from", type=int, default=None)
    p.add_argument("--to", dest="n_to", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_indicators)

    p = sub.add_parser("filtration", help="coradical or J-adic filtration dimensions")
    p.add_argument("input")
    p.add_argument("--kind", choices=("coradical", "jadic"), default="coradical")
    p.set_defaults(run=cmd_filtration)

    p = sub.add_parser("gr", help="associated graded Hopf algebra as a document")
    p.add_argument("input")
    p.add_argument("--kind", choices=("c", "j"), default="c")
    p.set_defaults(run=cmd_gr)

    p = sub.add_parser("radical", help="Jacobson radical")
    p.add_argument("input")
    p.set_defaults(run=cmd_radical)

    for name, fn in (("dual", dual), ("op", opposite), ("cop", co_opposite)):
        p = sub.add_parser(name, help=f"emit the {name} algebra document")
        p.add_argument("input")
        p.set_defaults(run=cmd_unary(fn))

    p = sub.add_parser("tensor", help="emit the tensor product document")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_tensor)

    p = sub.add_parser("check", help="Chevalley-type predicates and the dimension check")
    p.add_argument("input")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("fixture", help="list bundled examples or emit one as a document")
    p.add_argument("name", nargs="?")
    p.set_defaults(run=cmd_fixture)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    p.add_argument("what", choices=("sweedler", "radical", "grouplikes", "count"))
    p.add_argument("input", help="algebra document, or a Cayley table for 'count'")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--basis", type=int, default=0, help="basis index fed to 'sweedler'")
    p.add_argument("--vector", help="comma-separated coefficients fed to 'sweedler'")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(run=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except io.DocumentError as exc:
        print(f"hopfind: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GradingError as exc:
        print(f"hopfind: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        print(f"hopfind: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
