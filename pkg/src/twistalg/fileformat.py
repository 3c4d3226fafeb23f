"""Line-oriented text format for finite algebras.

::

    # comment
    algebra NAME
    elements n1 n2 ... nk
    cover a b            # a is covered by b; repeatable
    op NAME ARITY        # then 1 row (arity 1) or k rows (arity 2, row = left argument)
    const NAME element
    signature sh|h|n|sn|dsh|dsn|pcl|lat
    end

Blank lines are ignored and ``#`` starts a comment.  The canonical form
written by :func:`serialize_algebra` lists coverings sorted by index, then
operations and constants sorted by name.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import (
    AlgebraError,
    ArityMismatch,
    DuplicateOp,
    LatticeError,
    ParseError,
    SignatureMismatch,
    UnknownElement,
)
from .finlat import build_lattice
from .varieties import SIGNATURES, AlgebraTable, Signature

_ARITY = re.compile(r"[12]\Z")
_WS = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    text = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _WS.finditer(text)]


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        before = data[: exc.start]
        line = before.count(b"\n") + 1
        col = exc.start - (before.rfind(b"\n") + 1) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line, col) from None


def parse_algebra(text: str | bytes) -> AlgebraTable:
    """Parse one algebra; every malformed input raises :class:`ParseError`."""
    if isinstance(text, (bytes, bytearray)):
        text = _decode(bytes(text))
    lines = text.split("\n")

    name = None
    names: list[str] | None = None
    pos: dict[str, int] = {}
    covers: list[tuple[str, str]] = []
    ops: dict[str, list] = {}
    consts: dict[str, int] = {}
    signature = None
    elements_line = sig_line = None
    pending = None  # [op name, arity, rows, header line]
    ended = False

    def element(tok, col, lineno):
        if tok not in pos:
            raise UnknownElement(f"unknown element {tok!r}", lineno, col)
        return pos[tok]

    for lineno, raw in enumerate(lines, start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        word, col = toks[0]
        if ended:
            raise ParseError("text after 'end'", lineno, col)

        if pending is not None:
            op_name, arity, rows, header = pending
            if len(toks) != len(names):
                raise ArityMismatch(
                    f"row of operation {op_name} has {len(toks)} entries, expected {len(names)}", lineno, col
                )
            rows.append([element(t, c, lineno) for t, c in toks])
            if len(rows) == (1 if arity == 1 else len(names)):
                ops[op_name] = rows[0] if arity == 1 else rows
                pending = None
            continue

        args = toks[1:]
        if name is None:
            if word != "algebra":
                raise ParseError(f"expected 'algebra', found {word!r}", lineno, col)
            if len(args) != 1:
                raise ParseError("'algebra' takes exactly one name", lineno, col)
            name = args[0][0]
            continue
        if names is None:
            if word != "elements":
                raise ParseError(f"expected 'elements', found {word!r}", lineno, col)
            if not args:
                raise ParseError("'elements' needs at least one name", lineno, col)
            names = []
            for tok, c in args:
                if tok in pos:
                    raise ParseError(f"duplicate element {tok!r}", lineno, c)
                pos[tok] = len(names)
                names.append(tok)
            elements_line = lineno
            continue

        if word == "cover":
            if len(args) != 2:
                raise ParseError("'cover' takes two elements", lineno, col)
            for tok, c in args:
                element(tok, c, lineno)
            covers.append((args[0][0], args[1][0]))
        elif word == "op":
            if len(args) != 2:
                raise ParseError("'op' takes a name and an arity", lineno, col)
            (op_name, ncol), (ar, acol) = args
            if op_name in ops:
                raise DuplicateOp(f"operation {op_name!r} defined twice", lineno, ncol)
            if not _ARITY.match(ar):
                raise ParseError(f"arity must be 1 or 2, found {ar!r}", lineno, acol)
            pending = [op_name, int(ar), [], lineno]
            ops[op_name] = None
        elif word == "const":
            if len(args) != 2:
                raise ParseError("'const' takes a name and an element", lineno, col)
            (cname, ccol), (el, ecol) = args
            if cname in consts:
                raise DuplicateOp(f"constant {cname!r} defined twice", lineno, ccol)
            consts[cname] = element(el, ecol, lineno)
        elif word == "signature":
            if len(args) != 1:
                raise ParseError("'signature' takes one kind", lineno, col)
            if signature is not None:
                raise ParseError("signature declared twice", lineno, col)
            if args[0][0] not in SIGNATURES:
                raise ParseError(f"unknown signature {args[0][0]!r}", lineno, args[0][1])
            signature, sig_line = args[0][0], lineno
        elif word == "end":
            if args:
                raise ParseError("'end' takes no arguments", lineno, args[0][1])
            ended = True
            end_line = lineno
        elif word in ("algebra", "elements"):
            raise ParseError(f"{word!r} given twice", lineno, col)
        else:
            raise ParseError(f"unknown keyword {word!r}", lineno, col)

    eof = len(lines) + 1 if lines[-1:] != [""] else len(lines)
    if pending is not None:
        raise ArityMismatch(f"operation {pending[0]} is missing rows", eof, 1)
    if not ended:
        raise ParseError("missing 'end'", eof, 1)
    if signature is None:
        raise ParseError("missing 'signature'", end_line, 1)

    try:
        lat = build_lattice(names, covers)
    except LatticeError as exc:
        raise ParseError(f"not a bounded lattice: {exc}", elements_line, 1) from None
    try:
        return AlgebraTable(lat, ops, Signature(signature), consts, name)
    except SignatureMismatch as exc:
        raise ParseError(str(exc), sig_line, 1) from None


def load_algebra(path) -> AlgebraTable:
    return parse_algebra(Path(path).read_bytes())


def _token(s: str) -> str:
    s = re.sub(r"\s+", "_", s).replace("#", "_")
    return s or "_"


def serialize_algebra(a: AlgebraTable) -> str:
    el = a.elements
    out = [f"algebra {_token(a.name)}", "elements " + " ".join(el)]
    for x, y in a.lattice.covers():
        out.append(f"cover {el[x]} {el[y]}")
    for op_name, table in sorted(a.ops.items()):
        out.append(f"op {op_name} {table.ndim}")
        rows = [table] if table.ndim == 1 else list(table)
        for row in rows:
            out.append(" ".join(el[v] for v in row))
    for cname, v in sorted(a.consts.items()):
        out.append(f"const {cname} {el[v]}")
    out.append(f"signature {a.signature.kind}")
    out.append("end")
    return "\n".join(out) + "\n"


def save_algebra(a: AlgebraTable, path) -> None:
    Path(path).write_text(serialize_algebra(a), encoding="utf-8", newline="\n")


__all__ = ["parse_algebra", "serialize_algebra", "load_algebra", "save_algebra", "ParseError", "AlgebraError"]
