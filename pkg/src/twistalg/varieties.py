"""Operation tables over finite lattices and exhaustive equational checking.

Every identity is evaluated on all tuples of the carrier at once: variables
are broadcast index grids, so ``imp[x, meet[x, y]]`` is a whole table.  The
first failing tuple in lexicographic order is kept as the witness.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from .errors import SignatureMismatch, SizeBound
from .finlat import FiniteLattice

# kind -> (required operations with arities, required constants)
SIGNATURES: dict[str, tuple[dict[str, int], tuple[str, ...]]] = {
    "lat": ({}, ()),
    "pcl": ({"star": 1}, ()),
    "sh": ({"imp": 2}, ()),
    "h": ({"imp": 2}, ()),
    "dsh": ({"imp": 2, "tilde": 1}, ()),
    "sn": ({"imp": 2, "neg": 1}, ("one",)),
    "n": ({"imp": 2, "neg": 1}, ("one",)),
    "dsn": ({"imp": 2, "neg": 1, "prime": 1}, ("one",)),
}

# Kinds whose constants are the lattice bounds 0 and 1.
BOUNDED_KINDS = frozenset({"lat", "pcl", "sh", "h", "dsh"})


@dataclass(frozen=True)
class Signature:
    kind: str

    def __post_init__(self):
        if self.kind not in SIGNATURES:
            raise SignatureMismatch(f"unknown signature kind {self.kind!r}")

    @property
    def required_ops(self) -> dict[str, int]:
        return SIGNATURES[self.kind][0]

    @property
    def required_consts(self) -> tuple[str, ...]:
        return SIGNATURES[self.kind][1]

    @property
    def bounded(self) -> bool:
        return self.kind in BOUNDED_KINDS


def _as_signature(sig) -> Signature:
    return sig if isinstance(sig, Signature) else Signature(sig)


def _freeze(arr) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    lattice: FiniteLattice
    ops: Mapping[str, np.ndarray]
    signature: Signature
    consts: Mapping[str, int] = field(default_factory=dict)
    name: str = "A"

    def __post_init__(self):
        sig = _as_signature(self.signature)
        object.__setattr__(self, "signature", sig)
        n = len(self.lattice)
        ops = {}
        for op_name, table in self.ops.items():
            table = _freeze(table)
            if table.ndim not in (1, 2) or any(d != n for d in table.shape):
                raise SignatureMismatch(f"operation {op_name} has shape {table.shape} on a carrier of size {n}")
            if table.size and (table.min() < 0 or table.max() >= n):
                raise SignatureMismatch(f"operation {op_name} has entries outside the carrier")
            ops[op_name] = table
        object.__setattr__(self, "ops", dict(sorted(ops.items())))
        consts = {k: int(v) for k, v in sorted(self.consts.items())}
        for c, v in consts.items():
            if not 0 <= v < n:
                raise SignatureMismatch(f"constant {c} is not an element")
        object.__setattr__(self, "consts", consts)
        for op_name, arity in sig.required_ops.items():
            if op_name not in ops:
                raise SignatureMismatch(f"signature {sig.kind} requires operation {op_name}")
            if ops[op_name].ndim != arity:
                raise SignatureMismatch(f"operation {op_name} must have arity {arity}")
        for c in sig.required_consts:
            if c not in consts:
                raise SignatureMismatch(f"signature {sig.kind} requires constant {c}")

    def __len__(self):
        return len(self.lattice)

    def __eq__(self, other):
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.signature == other.signature
            and self.consts == other.consts
            and self.ops.keys() == other.ops.keys()
            and all(np.array_equal(self.ops[k], other.ops[k]) for k in self.ops)
        )

    __hash__ = None

    @property
    def elements(self) -> tuple[str, ...]:
        return self.lattice.elements

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def one(self) -> int:
        """The constant written 1: ``one`` if declared, else the lattice top."""
        return self.consts.get("one", self.lattice.top)

    def op(self, name: str) -> np.ndarray:
        try:
            return self.ops[name]
        except KeyError:
            raise SignatureMismatch(f"algebra {self.name} has no operation {name}") from None

    def index(self, name: str) -> int:
        return self.lattice.index(name)

    def names(self, idxs) -> list[str]:
        return [self.elements[i] for i in idxs]

    def with_ops(self, signature=None, name=None, drop=(), **ops) -> "AlgebraTable":
        new_ops = {k: v for k, v in self.ops.items() if k not in drop}
        new_ops.update(ops)
        return replace(
            self,
            ops=new_ops,
            signature=_as_signature(signature) if signature is not None else self.signature,
            name=name if name is not None else self.name,
        )


def make_algebra(lattice: FiniteLattice, ops: Mapping[str, Sequence], signature, consts=None, name="A") -> AlgebraTable:
    """Build an algebra from tables written with element names."""
    pos = {x: i for i, x in enumerate(lattice.elements)}

    def conv(v):
        if isinstance(v, (list, tuple)):
            return [conv(u) for u in v]
        return pos[str(v)]

    int_ops = {k: conv(list(v)) for k, v in ops.items()}
    int_consts = {k: pos[str(v)] for k, v in (consts or {}).items()}
    return AlgebraTable(lattice, int_ops, _as_signature(signature), int_consts, name)


def restrict(a: AlgebraTable, members: Sequence[int], name=None) -> AlgebraTable:
    """The subalgebra on ``members`` (must be closed under every operation)."""
    from .finlat import lattice_from_order
    from .errors import NotASubalgebra

    members = sorted(set(int(m) for m in members))
    pos = {m: i for i, m in enumerate(members)}
    idx = np.array(members)
    for op_name, table in a.ops.items():
        sub = table[idx] if table.ndim == 1 else table[np.ix_(idx, idx)]
        outside = ~np.isin(sub, idx)
        if outside.any():
            raise NotASubalgebra(f"{op_name} leaves the subset at {np.argwhere(outside)[0].tolist()}")
    for c, v in a.consts.items():
        if v not in pos:
            raise NotASubalgebra(f"constant {c} is not in the subset")
    lat = lattice_from_order([a.elements[m] for m in members], a.lattice.leq[np.ix_(idx, idx)])
    remap = np.full(len(a), -1)
    remap[idx] = np.arange(len(idx))
    ops = {}
    for op_name, table in a.ops.items():
        sub = table[idx] if table.ndim == 1 else table[np.ix_(idx, idx)]
        ops[op_name] = remap[sub]
    sub_alg = AlgebraTable(lat, ops, a.signature, {c: pos[v] for c, v in a.consts.items()}, name or a.name)
    # meets and joins of the subset must be those of the ambient lattice
    for x, y in product(range(len(idx)), repeat=2):
        if members[lat.meet[x, y]] != a.lattice.meet[idx[x], idx[y]] or members[lat.join[x, y]] != a.lattice.join[idx[x], idx[y]]:
            raise NotASubalgebra(f"subset is not a sublattice at ({a.elements[idx[x]]}, {a.elements[idx[y]]})")
    return sub_alg


# --------------------------------------------------------------------------
# Check reports


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    variables: tuple[str, ...]
    witness: tuple[str, ...] | None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.axiom}"
        binding = " ".join(f"{v}={w}" for v, w in zip(self.variables, self.witness))
        return f"FAIL {self.axiom} {binding}".rstrip()


@dataclass(frozen=True)
class CheckReport:
    variety: str
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[tuple[str, tuple[str, ...]]]:
        return [(r.axiom, r.witness) for r in self.results if not r.passed]

    @property
    def axioms_checked(self) -> int:
        return len(self.results)

    def failed(self, axiom: str) -> bool:
        return any(r.axiom == axiom and not r.passed for r in self.results)

    def witness(self, axiom: str) -> dict[str, str] | None:
        for r in self.results:
            if r.axiom == axiom and r.witness is not None:
                return dict(zip(r.variables, r.witness))
        return None

    def to_text(self) -> str:
        return "".join(r.line() + "\n" for r in self.results)

    def to_json(self) -> str:
        doc = [
            {
                "axiom": r.axiom,
                "status": "pass" if r.passed else "fail",
                "witness": None if r.passed else dict(zip(r.variables, r.witness)),
            }
            for r in self.results
        ]
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    def __add__(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(other.variety, self.results + other.results)


# --------------------------------------------------------------------------
# Term evaluation


class _Terms:
    """Vectorised term operations over an algebra's tables."""

    def __init__(self, a: AlgebraTable):
        lat = a.lattice
        self.a = a
        self.M, self.J, self.L = lat.meet, lat.join, lat.leq
        self.bot, self.top, self.one = lat.bottom, lat.top, a.one
        self.ops = a.ops

    def meet(self, x, y):
        return self.M[x, y]

    def join(self, x, y):
        return self.J[x, y]

    def le(self, x, y):
        return self.L[x, y]

    def imp(self, x, y):
        return self.ops["imp"][x, y]

    def nimp(self, x, y):
        # weak implication x ->_N y := x -> (x & y)
        return self.imp(x, self.meet(x, y))

    def neg(self, x):
        return self.ops["neg"][x]

    def tilde(self, x):
        return self.ops["tilde"][x]

    def prime(self, x):
        return self.ops["prime"][x]

    def star(self, x):
        return self.ops["star"][x]


Axiom = tuple[str, int, Callable]


def _evaluate(a: AlgebraTable, variety: str, axioms: Sequence[Axiom]) -> CheckReport:
    n = len(a)
    t = _Terms(a)
    results = []
    for label, arity, fn in axioms:
        grids = [np.arange(n).reshape((1,) * i + (n,) + (1,) * (arity - i - 1)) for i in range(arity)]
        out = fn(t, *grids)
        ok = out if not isinstance(out, tuple) else (np.asarray(out[0]) == np.asarray(out[1]))
        ok = np.broadcast_to(np.asarray(ok, dtype=bool), (n,) * arity)
        witness = None
        if not ok.all():
            bad = np.argwhere(~ok)[0] if arity else ()
            witness = tuple(a.elements[i] for i in bad)
        results.append(AxiomResult(label, tuple("xyz"[:arity]), witness))
    return CheckReport(variety, tuple(results))


def _require(a: AlgebraTable, ops: Mapping[str, int], consts=()):
    for op_name, arity in ops.items():
        if op_name not in a.ops:
            raise SignatureMismatch(f"algebra {a.name} lacks operation {op_name}")
        if a.ops[op_name].ndim != arity:
            raise SignatureMismatch(f"operation {op_name} of {a.name} must have arity {arity}")
    for c in consts:
        if c not in a.consts:
            raise SignatureMismatch(f"algebra {a.name} lacks constant {c}")


def _lattice_agreement(a: AlgebraTable) -> list[Axiom]:
    """Explicit meet/join tables, when an algebra carries them, must match the order."""
    axioms = []
    if "meet" in a.ops or "join" in a.ops:
        def agree(t, x, y):
            ok = np.ones((len(a), len(a)), dtype=bool)
            if "meet" in t.ops:
                ok &= t.ops["meet"][x, y] == t.M[x, y]
            if "join" in t.ops:
                ok &= t.ops["join"][x, y] == t.J[x, y]
            return ok
        axioms.append(("LatticeMismatch", 2, agree))
    return axioms


def _bounded_lattice_laws(t, x, y, z):
    M, J = t.M, t.J
    return (
        (M[x, y] == M[y, x])
        & (J[x, y] == J[y, x])
        & (M[x, M[y, z]] == M[M[x, y], z])
        & (J[x, J[y, z]] == J[J[x, y], z])
        & (M[x, J[x, y]] == x)
        & (J[x, M[x, y]] == x)
        & (M[x, t.bot] == t.bot)
        & (J[x, t.top] == t.top)
    )


SH_AXIOMS: list[Axiom] = [
    ("SH1", 3, _bounded_lattice_laws),
    ("SH2", 2, lambda t, x, y: (t.meet(x, t.imp(x, y)), t.meet(x, y))),
    ("SH3", 3, lambda t, x, y, z: (t.meet(x, t.imp(y, z)), t.meet(x, t.imp(t.meet(x, y), t.meet(x, z))))),
    ("SH4", 1, lambda t, x: (t.imp(x, x), t.top)),
]

H_AXIOM: Axiom = ("H", 2, lambda t, x, y: (t.imp(t.meet(x, y), x), t.top))

SN_AXIOMS: list[Axiom] = [
    ("SN1", 2, lambda t, x, y: (t.meet(x, t.join(x, y)), x)),
    ("SN2", 3, lambda t, x, y, z: (t.meet(x, t.join(y, z)), t.join(t.meet(z, x), t.meet(y, x)))),
    ("SN3", 1, lambda t, x: (t.neg(t.neg(x)), x)),
    ("SN4", 2, lambda t, x, y: (t.neg(t.meet(x, y)), t.join(t.neg(x), t.neg(y)))),
    ("SN5", 2, lambda t, x, y: (t.meet(x, t.neg(x)), t.meet(t.meet(x, t.neg(x)), t.join(y, t.neg(y))))),
    ("SN6", 2, lambda t, x, y: (t.meet(x, t.nimp(x, y)), t.meet(x, t.join(t.neg(x), y)))),
    ("SN7", 3, lambda t, x, y, z: (t.nimp(x, t.nimp(y, z)), t.nimp(t.meet(x, y), z))),
    ("SN8", 3, lambda t, x, y, z: (
        t.nimp(t.nimp(x, y), t.nimp(t.nimp(y, x), t.nimp(t.imp(x, z), t.imp(y, z)))), t.one)),
    ("SN9", 3, lambda t, x, y, z: (
        t.nimp(t.nimp(x, y), t.nimp(t.nimp(y, x), t.nimp(t.imp(z, x), t.imp(z, y)))), t.one)),
    ("SN10", 2, lambda t, x, y: (t.nimp(t.neg(t.imp(x, y)), t.meet(x, t.neg(y))), t.one)),
    ("SN11", 2, lambda t, x, y: (t.nimp(t.meet(x, t.neg(y)), t.neg(t.imp(x, y))), t.one)),
]

# The identity exactly as printed, with a join where the Kleene law has a meet.
SN5_LITERAL: Axiom = (
    "SN5",
    2,
    lambda t, x, y: (t.meet(x, t.neg(x)), t.join(t.meet(x, t.neg(x)), t.join(y, t.neg(y)))),
)

N_AXIOMS: list[Axiom] = [
    ("N1", 2, lambda t, x, y: (t.meet(x, t.join(x, y)), x)),
    ("N2", 3, lambda t, x, y, z: (t.meet(x, t.join(y, z)), t.join(t.meet(z, x), t.meet(y, x)))),
    ("N3", 1, lambda t, x: (t.neg(t.neg(x)), x)),
    ("N4", 2, lambda t, x, y: (t.neg(t.meet(x, y)), t.join(t.neg(x), t.neg(y)))),
    ("N5", 2, lambda t, x, y: (t.meet(x, t.neg(x)), t.meet(t.meet(x, t.neg(x)), t.join(y, t.neg(y))))),
    ("N6", 1, lambda t, x: (t.imp(x, x), t.one)),
    ("N7", 3, lambda t, x, y, z: (t.imp(x, t.imp(y, z)), t.imp(t.meet(x, y), z))),
    ("N8", 2, lambda t, x, y: (t.meet(x, t.imp(x, y)), t.meet(x, t.join(t.neg(x), y)))),
]

DSM_AXIOMS: list[Axiom] = [
    ("DSM1", 0, lambda t: (t.tilde(t.bot), t.top)),
    ("DSM2", 0, lambda t: (t.tilde(t.top), t.bot)),
    ("DSM3", 2, lambda t, x, y: (t.tilde(t.meet(x, y)), t.join(t.tilde(x), t.tilde(y)))),
]


def _dsn3(t, x, y):
    # outer arrow is the weak implication; with -> the identity fails on
    # twists over non-Heyting bases (see DSN3_LITERAL)
    both = t.meet(t.imp(x, y), t.imp(y, x))
    return (t.nimp(t.meet(both, t.prime(x)), t.prime(t.meet(both, y))), t.one)


def _dsn3_literal(t, x, y):
    both = t.meet(t.imp(x, y), t.imp(y, x))
    return (t.imp(t.meet(both, t.prime(x)), t.prime(t.meet(both, y))), t.one)


DSN3_LITERAL: Axiom = ("DSN3", 2, _dsn3_literal)


DSN_AXIOMS: list[Axiom] = [
    ("DSN1", 0, lambda t: (t.prime(t.neg(t.one)), t.one)),
    ("DSN2", 0, lambda t: (t.imp(t.prime(t.one), t.neg(t.one)), t.one)),
    ("DSN3", 2, _dsn3),
    ("DSN4", 1, lambda t, x: (t.imp(t.neg(t.prime(x)), t.meet(t.neg(x), t.imp(t.prime(x), x))), t.one)),
    ("DSN5", 1, lambda t, x: (t.imp(t.meet(t.neg(x), t.imp(t.prime(x), x)), t.neg(t.prime(x))), t.one)),
    ("DSN6", 2, lambda t, x, y: (t.imp(t.prime(t.meet(x, y)), t.join(t.prime(x), t.prime(y))), t.one)),
    ("DSN7", 2, lambda t, x, y: (t.imp(t.join(t.prime(x), t.prime(y)), t.prime(t.meet(x, y))), t.one)),
]

PCL_AXIOMS: list[Axiom] = [
    ("PS1", 3, _bounded_lattice_laws),
    ("PS2", 2, lambda t, x, y: (t.meet(x, t.star(t.meet(x, y))), t.meet(x, t.star(y)))),
    ("PS3", 0, lambda t: (t.star(t.bot) == t.top) & (t.star(t.top) == t.bot)),
    ("PS-meet", 1, lambda t, x: (t.meet(x, t.star(x)), t.bot)),
    ("PS-join", 2, lambda t, x, y: (t.star(t.join(x, y)), t.meet(t.star(x), t.star(y)))),
    ("PS-disjoint", 2, lambda t, x, y: (t.meet(x, y) != t.bot) | t.le(x, t.star(y))),
]


def check_semi_heyting(a: AlgebraTable) -> CheckReport:
    _require(a, {"imp": 2})
    return _evaluate(a, "sh", _lattice_agreement(a) + SH_AXIOMS)


def check_heyting(a: AlgebraTable) -> CheckReport:
    _require(a, {"imp": 2})
    return _evaluate(a, "h", _lattice_agreement(a) + SH_AXIOMS + [H_AXIOM])


def check_semi_nelson(a: AlgebraTable, strict_sn5: bool = False) -> CheckReport:
    """Check SN1-SN11.

    SN5 is the Kleene law ``x & ~x = (x & ~x) & (y | ~y)`` unless
    ``strict_sn5`` asks for the variant with a join in the middle, which
    forces ``x & ~x`` above every ``y | ~y`` and so fails on almost
    everything.
    """
    _require(a, {"imp": 2, "neg": 1}, ("one",))
    axioms = list(SN_AXIOMS)
    if strict_sn5:
        axioms[4] = SN5_LITERAL
    return _evaluate(a, "sn", _lattice_agreement(a) + axioms)


def check_nelson(a: AlgebraTable) -> CheckReport:
    _require(a, {"imp": 2, "neg": 1}, ("one",))
    return _evaluate(a, "n", _lattice_agreement(a) + N_AXIOMS)


def check_dsh(a: AlgebraTable) -> CheckReport:
    _require(a, {"imp": 2, "tilde": 1})
    return _evaluate(a, "dsh", _lattice_agreement(a) + SH_AXIOMS + DSM_AXIOMS)


def check_dsn(a: AlgebraTable, strict_sn5: bool = False, strict_dsn3: bool = False) -> CheckReport:
    """SN1-SN11 followed by DSN1-DSN7.

    DSN3 is ``((x->y) & (y->x) & x') ->_N ((x->y) & (y->x) & y)' = 1``.
    ``strict_dsn3`` uses the strong arrow in the middle instead; that form
    holds over Heyting bases but not over general semi-Heyting ones.
    """
    _require(a, {"imp": 2, "neg": 1, "prime": 1}, ("one",))
    axioms = list(DSN_AXIOMS)
    if strict_dsn3:
        axioms[2] = DSN3_LITERAL
    return check_semi_nelson(a, strict_sn5) + _evaluate(a, "dsn", axioms)


def check_pseudocomplemented(a: AlgebraTable) -> CheckReport:
    """PS1-PS3 plus the standard consequences ``x & x* = 0``,
    ``(x | y)* = x* & y*`` and ``x & y = 0 => x <= y*``."""
    _require(a, {"star": 1})
    return _evaluate(a, "pcl", _lattice_agreement(a) + PCL_AXIOMS)


CHECKERS: dict[str, Callable[..., CheckReport]] = {
    "sh": check_semi_heyting,
    "h": check_heyting,
    "sn": check_semi_nelson,
    "n": check_nelson,
    "dsh": check_dsh,
    "dsn": check_dsn,
    "pcl": check_pseudocomplemented,
    "lat": lambda a: _evaluate(a, "lat", _lattice_agreement(a) + [("LAT", 3, _bounded_lattice_laws)]),
}


def check(a: AlgebraTable, **kwargs) -> CheckReport:
    """Run the checker for the variety the algebra claims."""
    return CHECKERS[a.signature.kind](a, **kwargs)


# --------------------------------------------------------------------------
# Derived operations


def derived_heyting_arrow(a: AlgebraTable) -> AlgebraTable:
    """Add ``himp[x, y] = imp[x, x & y]``, a Heyting implication on the same lattice."""
    _require(a, {"imp": 2})
    imp, meet = a.op("imp"), a.lattice.meet
    return a.with_ops(himp=imp[np.arange(len(a))[:, None], meet])


def heyting_reduct(a: AlgebraTable) -> AlgebraTable:
    """The Heyting algebra (lattice, himp)."""
    d = derived_heyting_arrow(a)
    return AlgebraTable(a.lattice, {"imp": d.ops["himp"]}, Signature("h"), {}, f"{a.name}_H")


def pseudocomplement(a: AlgebraTable, x: int) -> int:
    return int(a.op("imp")[x, a.bottom])


def pseudocomplement_table(a: AlgebraTable) -> np.ndarray:
    return a.op("imp")[:, a.bottom].copy()


def with_pseudocomplement(a: AlgebraTable) -> AlgebraTable:
    return AlgebraTable(a.lattice, {"star": pseudocomplement_table(a)}, Signature("pcl"), {}, f"{a.name}*")


def weak_implication(a: AlgebraTable) -> AlgebraTable:
    """Add ``nimp[x, y] = imp[x, x & y]``."""
    _require(a, {"imp": 2, "neg": 1}, ("one",))
    imp, meet = a.op("imp"), a.lattice.meet
    return a.with_ops(nimp=imp[np.arange(len(a))[:, None], meet])


def nelson_reduct(a: AlgebraTable) -> AlgebraTable:
    """The Nelson algebra (lattice, nimp, neg, one)."""
    w = weak_implication(a)
    return AlgebraTable(a.lattice, {"imp": w.ops["nimp"], "neg": a.ops["neg"]}, Signature("n"), {"one": a.one}, f"{a.name}_N")


# --------------------------------------------------------------------------
# Enumeration

DEFAULT_ENUM_BOUND = 4


def enumerate_semi_heyting(lat: FiniteLattice, max_size: int = DEFAULT_ENUM_BOUND, name: str = "H") -> Iterator[AlgebraTable]:
    """Yield every semi-Heyting implication on ``lat`` in lexicographic table order.

    Cells are filled row by row.  The diagonal is forced to the top, each
    cell ``(x, y)`` only takes values ``c`` with ``x & c = x & y``, and every
    instance of the three-variable identity whose two implication cells are
    both filled is checked as soon as the second one is.
    """
    n = len(lat)
    if n > max_size:
        raise SizeBound(f"lattice has {n} elements, enumeration bound is {max_size}")
    meet = lat.meet.tolist()
    cells = [(x, y) for x in range(n) for y in range(n)]
    candidates = {
        (x, y): [lat.top] if x == y else [c for c in range(n) if meet[x][c] == meet[x][y]]
        for x, y in cells
    }
    # constraints: meet[u][T[y][z]] == meet[u][T[meet[u][y]][meet[u][z]]]
    watch: dict[tuple[int, int], list[tuple[int, tuple[int, int], tuple[int, int]]]] = {c: [] for c in cells}
    for u, y, z in product(range(n), repeat=3):
        outer, inner = (y, z), (meet[u][y], meet[u][z])
        watch[outer].append((u, outer, inner))
        if inner != outer:
            watch[inner].append((u, outer, inner))

    table = [[-1] * n for _ in range(n)]

    def consistent(cell):
        for u, (y, z), (p, q) in watch[cell]:
            a, b = table[y][z], table[p][q]
            if a >= 0 and b >= 0 and meet[u][a] != meet[u][b]:
                return False
        return True

    def fill(k):
        if k == len(cells):
            yield [row[:] for row in table]
            return
        x, y = cells[k]
        for c in candidates[(x, y)]:
            table[x][y] = c
            if consistent((x, y)):
                yield from fill(k + 1)
        table[x][y] = -1

    for i, imp in enumerate(fill(0)):
        yield AlgebraTable(lat, {"imp": imp}, Signature("sh"), {}, f"{name}{i}")


def enumerate_dsh(a: AlgebraTable) -> Iterator[AlgebraTable]:
    """Yield ``a`` expanded by every dual hemimorphism, in lexicographic order."""
    _require(a, {"imp": 2})
    lat = a.lattice
    n = len(lat)
    free = [x for x in range(n) if x not in (lat.bottom, lat.top)]
    meet, join = lat.meet, lat.join
    k = 0
    for values in product(range(n), repeat=len(free)):
        tilde = np.zeros(n, dtype=np.int64)
        tilde[lat.bottom] = lat.top
        tilde[lat.top] = lat.bottom
        tilde[free] = values
        if np.array_equal(tilde[meet], join[tilde[:, None], tilde[None, :]]):
            yield a.with_ops(signature="dsh", name=f"{a.name}~{k}", tilde=tilde)
            k += 1
