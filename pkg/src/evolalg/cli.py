"""Command-line interface.

Exit codes: 0 success, 1 negative answer (not isomorphic / verification
failed), 2 parse error, 3 validation error, 4 non-regular algebra, 5 algebra
not in the image of the graph functor, 6 realization failed, 7 size cap hit.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import formats
from .errors import (CapExceeded, EvolalgError, KindMismatch, NotInImage, NotRegular,
                     ParseError, RealizationFailed, ValidationError)
from .fields import FieldDescriptor
from .frucht import realize_graph, verify_realization
from .functor import build_algebra, recover_graph
from .graph import brute_force_group, graph_automorphisms, graph_isomorphism
from .monomial import algebra_automorphisms, algebra_isomorphism
from .monomial import brute_force_group as brute_force_algebra_group

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NOT_REGULAR = 4
EXIT_NOT_IN_IMAGE = 5
EXIT_REALIZATION = 6
EXIT_CAP = 7


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(path: str):
    text = _read(path)
    kind = formats.detect_kind(text)
    if kind == "graph":
        return kind, formats.read_graph(text)
    if kind == "algebra":
        return kind, formats.read_algebra(text)
    raise KindMismatch(f"{path} holds a {kind}, expected a graph or an algebra")


def cmd_build(args) -> int:
    G = formats.read_graph(_read(args.graph))
    X = build_algebra(G, FieldDescriptor.parse(args.field))
    _emit(formats.write_algebra(X), args.out)
    return EXIT_OK


def cmd_aut(args) -> int:
    kind, obj = _load(args.target)
    if kind == "graph":
        P = brute_force_group(obj) if args.brute_force else graph_automorphisms(obj)
        sys.stdout.write(formats.write_permgroup(P))
        print(f"order: {P.order}")
        return EXIT_OK
    aut = brute_force_algebra_group(obj) if args.brute_force else algebra_automorphisms(obj)
    sys.stdout.write(formats.write_permgroup(aut.group))
    print(f"order: {aut.order}")
    print(f"all scales = 1: {'yes' if aut.all_scales_one() else 'no'}")
    return EXIT_OK


def cmd_iso(args) -> int:
    kind_a, a = _load(args.file_a)
    kind_b, b = _load(args.file_b)
    if kind_a != kind_b:
        raise KindMismatch(f"cannot compare a {kind_a} with a {kind_b}")
    if kind_a == "graph":
        f = graph_isomorphism(a, b)
        witness = None if f is None else formats.write_vertexmap(f)
    else:
        m = algebra_isomorphism(a, b)
        witness = None if m is None else formats.write_monomial(m)
    if witness is None:
        print("isomorphic: no")
        return EXIT_NEGATIVE
    print("isomorphic: yes")
    sys.stdout.write(witness)
    return EXIT_OK


def cmd_recover(args) -> int:
    X = formats.read_algebra(_read(args.algebra))
    G, m = recover_graph(X)
    _emit(formats.write_graph(G), args.out)
    sys.stdout.write(formats.write_monomial(m))
    return EXIT_OK


def cmd_realize(args) -> int:
    start = time.perf_counter()
    G = formats.read_group(_read(args.group))
    field = FieldDescriptor.parse(args.field)
    H = realize_graph(G, args.variant)
    X = build_algebra(H, field)
    report = verify_realization(G, X)
    elapsed = time.perf_counter() - start
    _emit(formats.write_algebra(X), args.out)
    lines = [
        f"group order: {G.order}",
        f"variant: {args.variant}",
        f"graph vertices: {H.n}",
        f"graph edges: {H.m}",
        f"algebra dim: {X.dim}",
        f"aut order: {report.aut_order}",
        f"isomorphic: {'yes' if report.isomorphic else 'no'}",
        f"all scales = 1: {'yes' if report.all_scales_one else 'no'}",
        f"wall time: {elapsed:.3f}s",
    ]
    text = "\n".join(lines) + "\n"
    if args.report:
        _emit(text, args.report)
    else:
        sys.stderr.write(text)
    if not report.isomorphic:
        raise RealizationFailed("automorphism group of the realized algebra is not the input group")
    return EXIT_OK


def cmd_verify(args) -> int:
    G = formats.read_group(_read(args.group))
    X = formats.read_algebra(_read(args.algebra))
    report = verify_realization(G, X)
    print("\n".join(report.lines()))
    return EXIT_OK if report.isomorphic else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evolalg", description="Regular evolution algebras from graphs and groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="algebra of a graph")
    p.add_argument("graph", help="graph v1 file")
    p.add_argument("--field", default="Q", help="Q or GF:p (default Q)")
    p.add_argument("--out", help="output algebra file (default stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("aut", help="automorphism group of a graph or algebra")
    p.add_argument("target", help="graph v1 or evolalg v1 file")
    p.add_argument("--brute-force", action="store_true", help="enumerate all permutations instead of searching")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test with witness")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("recover", help="recover the graph behind a graph algebra")
    p.add_argument("algebra", help="evolalg v1 file")
    p.add_argument("--out", help="output graph file (default stdout)")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("realize", help="algebra whose automorphism group is a given group")
    p.add_argument("group", help="group v1 file")
    p.add_argument("--field", default="Q", help="Q or GF:p (default Q)")
    p.add_argument("--variant", type=int, default=0, help="tail-length offset t >= 0 (default 0)")
    p.add_argument("--out", help="output algebra file (default stdout)")
    p.add_argument("--report", help="verification report file (default stderr)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="compare Aut(algebra) with a group")
    p.add_argument("group", help="group v1 file")
    p.add_argument("algebra", help="evolalg v1 file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        code = EXIT_PARSE
        msg = exc
    except ValidationError as exc:
        code = EXIT_VALIDATION
        msg = exc
    except NotRegular as exc:
        code = EXIT_NOT_REGULAR
        msg = exc
    except NotInImage as exc:
        code = EXIT_NOT_IN_IMAGE
        msg = exc
    except RealizationFailed as exc:
        code = EXIT_REALIZATION
        msg = exc
    except CapExceeded as exc:
        code = EXIT_CAP
        msg = exc
    except EvolalgError as exc:  # pragma: no cover - every subclass is mapped above
        code = EXIT_VALIDATION
        msg = exc
    print(f"evolalg: {type(msg).__name__}: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
