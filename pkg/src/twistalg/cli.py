"""Command-line interface.

Exit status: 0 on success, 1 when a mathematical property fails (the
counterexample is printed), 2 on unreadable or ill-typed input.
"""
from __future__ import annotations

import argparse
import sys

from .catequiv import find_isomorphism, roundtrip
from .errors import (
    AlgebraError,
    MultipleCenters,
    NotACongruence,
    NotAnIFilter,
    NotBijective,
    ParseError,
    SignatureMismatch,
    SizeBound,
    TheoremViolation,
)
from .fileformat import load_algebra, serialize_algebra
from .filters import dense_elements, enumerate_filters, enumerate_ifilters, format_set, parse_set, positives
from .finlat import hasse_dot
from .twist import center, nhf, quotient_sh, vk, vk_dsh
from .varieties import check, enumerate_semi_heyting

OK, FAIL, INPUT = 0, 1, 2

# errors meaning "the mathematics says no" rather than "bad input"
_MATH_ERRORS = (NotAnIFilter, NotACongruence, NotBijective, MultipleCenters, TheoremViolation)


class InputError(Exception):
    pass


def _load(path):
    try:
        return load_algebra(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except ParseError as exc:
        raise InputError(f"{path}:{exc}") from None


def cmd_check(args, out):
    a = _load(args.file)
    kwargs = {}
    if args.strict_sn5:
        kwargs["strict_sn5"] = True
    if args.strict_dsn3:
        kwargs["strict_dsn3"] = True
    try:
        report = check(a, **kwargs)
    except TypeError:
        raise InputError(f"strict flags do not apply to signature {a.signature.kind}") from None
    out.write(report.to_json() if args.json else report.to_text())
    return OK if report.passed else FAIL


def cmd_twist(args, out):
    a = _load(args.file)
    tw = vk_dsh(a) if "tilde" in a.ops else vk(a)
    out.write(serialize_algebra(tw.algebra))
    return OK


def cmd_nhf(args, out):
    a = _load(args.file)
    try:
        members = parse_set(a.lattice, args.filter)
    except KeyError as exc:
        raise InputError(f"unknown element {exc.args[0]!r} in --filter") from None
    out.write(serialize_algebra(nhf(a, members).algebra))
    return OK


def cmd_quotient(args, out):
    a = _load(args.file)
    q = quotient_sh(a)
    for c, members in enumerate(q.classes):
        out.write(f"# {q.algebra.elements[c]} = {{{format_set(a.lattice, members)}}}\n")
    out.write(serialize_algebra(q.algebra))
    return OK


def cmd_filters(args, out):
    a = _load(args.file)
    found = enumerate_ifilters(a) if args.i else enumerate_filters(a)
    for fs in found:
        out.write(format_set(a.lattice, fs.members) + "\n")
    return OK


def cmd_dense(args, out):
    a = _load(args.file)
    out.write(format_set(a.lattice, dense_elements(a)) + "\n")
    return OK


def cmd_positives(args, out):
    a = _load(args.file)
    out.write(format_set(a.lattice, positives(a)) + "\n")
    return OK


def cmd_center(args, out):
    a = _load(args.file)
    c = center(a)
    out.write(("none" if c is None else a.elements[c]) + "\n")
    return OK


def cmd_iso(args, out):
    a, b = _load(args.a), _load(args.b)
    f = find_isomorphism(a, b)
    if f is None:
        out.write(f"no isomorphism {a.name} -> {b.name}\n")
        return FAIL
    out.write(f.lines())
    return OK


def cmd_roundtrip(args, out):
    a = _load(args.file)
    f = roundtrip(a, dual=args.dsn)
    out.write(f.lines())
    if not (f.certified and f.bijective):
        out.write(f.describe() + "\n")
        if not f.bijective:
            out.write("map is not bijective\n")
        return FAIL
    return OK


def cmd_enum_sh(args, out):
    lat = _load(args.lattice).lattice
    try:
        found = list(enumerate_semi_heyting(lat, max_size=args.max))
    except SizeBound as exc:
        raise InputError(str(exc)) from None
    out.write(f"# {len(found)} semi-Heyting structures\n")
    for a in found:
        out.write(serialize_algebra(a))
    return OK


def cmd_hasse(args, out):
    lat = _load(args.file).lattice
    if args.dot:
        out.write(hasse_dot(lat))
    else:
        for x, y in lat.covers():
            out.write(f"{lat.elements[x]} < {lat.elements[y]}\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistalg", description="Finite semi-Heyting and semi-Nelson algebra tools.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="check the axioms of the declared signature")
    s.add_argument("file")
    s.add_argument("--json", action="store_true", help="emit a JSON report")
    s.add_argument("--strict-sn5", action="store_true", help="use SN5 with a join on the right")
    s.add_argument("--strict-dsn3", action="store_true", help="use the strong arrow in DSN3")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("twist", help="full twist algebra of a semi-Heyting algebra")
    s.add_argument("file")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("nhf", help="twist restricted by an i-filter")
    s.add_argument("file")
    s.add_argument("--filter", required=True, help="comma separated elements, e.g. e,1")
    s.set_defaults(func=cmd_nhf)

    s = sub.add_parser("quotient", help="semi-Heyting quotient of a semi-Nelson algebra")
    s.add_argument("file")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("filters", help="list lattice filters")
    s.add_argument("file")
    s.add_argument("--i", action="store_true", help="only i-filters")
    s.set_defaults(func=cmd_filters)

    for verb, fn, text in (
        ("dense", cmd_dense, "dense elements"),
        ("positives", cmd_positives, "positive elements"),
        ("center", cmd_center, "fixed point of ~"),
    ):
        s = sub.add_parser(verb, help=text)
        s.add_argument("file")
        s.set_defaults(func=fn)

    s = sub.add_parser("iso", help="find an isomorphism between two algebras")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("roundtrip", help="canonical map into the twist/quotient round trip")
    s.add_argument("file")
    s.add_argument("--dsn", action="store_true", help="keep the prime operation through the round trip")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("enum-sh", help="enumerate semi-Heyting implications on a lattice")
    s.add_argument("--lattice", required=True, help="algebra file whose lattice is used")
    s.add_argument("--max", type=int, default=4, help="largest lattice size accepted (default 4)")
    s.set_defaults(func=cmd_enum_sh)

    s = sub.add_parser("hasse", help="covering relation of the lattice")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    s.set_defaults(func=cmd_hasse)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT if exc.code else OK
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return INPUT
    except SignatureMismatch as exc:
        err.write(f"error: {exc}\n")
        return INPUT
    except NotAnIFilter as exc:
        out.write(str(exc) + "\n")
        return FAIL
    except _MATH_ERRORS as exc:
        out.write(f"{type(exc).__name__}: {exc}\n")
        return FAIL
    except AlgebraError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return INPUT


if __name__ == "__main__":
    sys.exit(main())
