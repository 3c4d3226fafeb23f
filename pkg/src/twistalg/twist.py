"""Twist algebras on pairs and the quotient back to a semi-Heyting algebra.

Pairs ``(a, b)`` with ``a & b = 0`` carry

    (a,b) & (c,d) = (a & c, b | d)
    (a,b) | (c,d) = (a | c, b & d)
    (a,b) -> (c,d) = (a => c, a & d)
    ~(a,b) = (b, a)
    top = (1, 0)

and, over a base with a dual hemimorphism ``¬``,
``(a,b)' = (¬a, b & (¬a => a))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import MultipleCenters, SignatureMismatch, NotACongruence, NotAnIFilter, TheoremViolation
from .filters import is_ifilter
from .finlat import lattice_from_order
from .varieties import AlgebraTable, Signature, _require


@dataclass(frozen=True, eq=False)
class TwistAlgebra:
    base: AlgebraTable
    pairs: tuple[tuple[int, int], ...]
    algebra: AlgebraTable
    ifilter: frozenset[int] | None = None

    def __len__(self):
        return len(self.pairs)

    def pair_of(self, i: int) -> tuple[int, int]:
        return self.pairs[i]

    def index_of(self, pair) -> int:
        return self._index[(int(pair[0]), int(pair[1]))]

    @property
    def _index(self) -> dict[tuple[int, int], int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.pairs)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def first_projection(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)


def pair_name(base: AlgebraTable, pair) -> str:
    return f"({base.elements[pair[0]]},{base.elements[pair[1]]})"


def _twist(base: AlgebraTable, pairs, name: str, ifilter=None, with_prime=False) -> TwistAlgebra:
    pairs = tuple(sorted((int(a), int(b)) for a, b in pairs))
    lat = base.lattice
    meet, join, imp = lat.meet, lat.join, base.op("imp")
    A = np.array([p[0] for p in pairs], dtype=np.int64)
    B = np.array([p[1] for p in pairs], dtype=np.int64)

    leq = lat.leq[np.ix_(A, A)] & lat.leq[np.ix_(B, B)].T
    tlat = lattice_from_order([pair_name(base, p) for p in pairs], leq)

    n = len(base)
    code = np.full(n * n, -1, dtype=np.int64)
    code[A * n + B] = np.arange(len(pairs))

    def lookup(first, second, what):
        out = code[np.asarray(first) * n + np.asarray(second)]
        if np.any(out < 0):
            pos = np.argwhere(np.atleast_1d(out) < 0)[0]
            key = (int(np.atleast_1d(first)[tuple(pos)]), int(np.atleast_1d(second)[tuple(pos)]))
            raise TheoremViolation(f"{what} leaves the pair set: {pair_name(base, key)}")
        return out

    Ac, Bc = A[:, None], B[:, None]
    Ar, Br = A[None, :], B[None, :]
    # the order-theoretic meet and join must be the componentwise formulas
    if not np.array_equal(tlat.meet, lookup(meet[Ac, Ar], join[Bc, Br], "meet")):
        raise TheoremViolation("pair order meet disagrees with (a & c, b | d)")
    if not np.array_equal(tlat.join, lookup(join[Ac, Ar], meet[Bc, Br], "join")):
        raise TheoremViolation("pair order join disagrees with (a | c, b & d)")

    ops = {
        "imp": lookup(imp[Ac, Ar], meet[Ac, Br], "implication"),
        "neg": lookup(B, A, "negation"),
    }
    one = lookup(np.array(lat.top), np.array(lat.bottom), "top")
    kind = "sn"
    if with_prime:
        tilde = base.op("tilde")
        na = tilde[A]
        ops["prime"] = lookup(na, meet[B, imp[na, A]], "prime")
        kind = "dsn"
    alg = AlgebraTable(tlat, ops, Signature(kind), {"one": int(one)}, name)
    return TwistAlgebra(base, pairs, alg, ifilter)


_SH_KINDS = ("sh", "h", "dsh")


def _require_sh(a: AlgebraTable):
    if a.signature.kind not in _SH_KINDS:
        raise SignatureMismatch(f"twists need a semi-Heyting base, {a.name} has signature {a.signature.kind}")


def twist_pairs(base: AlgebraTable) -> list[tuple[int, int]]:
    meet = base.lattice.meet
    n = len(base)
    return [(a, b) for a in range(n) for b in range(n) if meet[a, b] == base.bottom]


def vk(a: AlgebraTable) -> TwistAlgebra:
    """Full twist: every pair with ``a & b = 0``, ordered lexicographically."""
    _require(a, {"imp": 2})
    _require_sh(a)
    return _twist(a, twist_pairs(a), f"Vk({a.name})", frozenset(range(len(a))))


def vk_dsh(a: AlgebraTable) -> TwistAlgebra:
    """Full twist of a dually hemimorphic semi-Heyting algebra, with ``'``."""
    _require(a, {"imp": 2, "tilde": 1})
    _require_sh(a)
    tw = _twist(a, twist_pairs(a), f"Vk({a.name})", frozenset(range(len(a))), with_prime=True)
    meet = a.lattice.meet
    prime = tw.algebra.ops["prime"]
    for i in range(len(tw)):
        p, q = tw.pairs[prime[i]]
        if meet[p, q] != a.bottom:
            raise TheoremViolation(f"prime of {tw.algebra.elements[i]} is not a twist pair")
    return tw


def nhf(a: AlgebraTable, f) -> TwistAlgebra:
    """Pairs ``(x, y)`` with ``x & y = 0`` and ``x | y`` in the i-filter ``f``."""
    _require_sh(a)
    fs = is_ifilter(a, f)
    if not fs.is_ifilter:
        raise NotAnIFilter(fs)
    join = a.lattice.join
    pairs = [(x, y) for x, y in twist_pairs(a) if int(join[x, y]) in fs.members]
    from .filters import format_set

    return _twist(a, pairs, f"N({a.name},{{{format_set(a.lattice, fs.members)}}})", fs.members)


@dataclass(frozen=True, eq=False)
class QuotientResult:
    source: AlgebraTable
    classes: tuple[frozenset[int], ...]
    repmap: tuple[int, ...]
    algebra: AlgebraTable

    def cls(self, x: int) -> int:
        return self.repmap[x]

    def representative(self, c: int) -> int:
        return min(self.classes[c])


def congruence_relation(a: AlgebraTable) -> np.ndarray:
    imp = a.op("imp")
    one = a.one
    return (imp == one) & (imp.T == one)


def _quotient(a: AlgebraTable, dual: bool) -> QuotientResult:
    _require(a, {"imp": 2, "neg": 1}, ("one",))
    n = len(a)
    el = a.elements
    eq = congruence_relation(a)
    if not np.all(np.diag(eq)):
        x = int(np.flatnonzero(~np.diag(eq))[0])
        raise NotACongruence(f"not reflexive at x={el[x]}")
    if not np.array_equal(eq, eq.T):
        x, y = np.argwhere(eq != eq.T)[0]
        raise NotACongruence(f"not symmetric at x={el[x]} y={el[y]}")
    trans = (eq.astype(np.int64) @ eq.astype(np.int64)) > 0
    if np.any(trans & ~eq):
        x, y = np.argwhere(trans & ~eq)[0]
        raise NotACongruence(f"not transitive at x={el[x]} y={el[y]}")

    repmap = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if repmap[x] < 0:
            repmap[np.flatnonzero(eq[x])] = len(reps)
            reps.append(x)
    classes = tuple(frozenset(int(y) for y in np.flatnonzero(repmap == c)) for c in range(len(reps)))
    R = np.array(reps, dtype=np.int64)

    def lift2(table, label):
        C = repmap[table]
        canon = C[np.ix_(R[repmap], R[repmap])]
        if not np.array_equal(C, canon):
            x, y = np.argwhere(C != canon)[0]
            raise NotACongruence(f"{label} is not compatible at x={el[x]} y={el[y]}")
        return C[np.ix_(R, R)]

    def lift1(table, label):
        C = repmap[table]
        canon = C[R[repmap]]
        if not np.array_equal(C, canon):
            x = int(np.flatnonzero(C != canon)[0])
            raise NotACongruence(f"{label} is not compatible at x={el[x]}")
        return C[R]

    lat = a.lattice
    qmeet = lift2(lat.meet, "meet")
    qjoin = lift2(lat.join, "join")
    qimp = lift2(a.op("imp"), "implication")
    nc = len(reps)
    qleq = qmeet == np.arange(nc)[:, None]
    qlat = lattice_from_order([f"[{el[r]}]" for r in reps], qleq)
    if not (np.array_equal(qlat.meet, qmeet) and np.array_equal(qlat.join, qjoin)):
        raise TheoremViolation("quotient order does not reproduce the quotient meet and join")
    if qlat.bottom != repmap[a.op("neg")[a.one]] or qlat.top != repmap[a.one]:
        raise TheoremViolation("quotient bounds are not [~1] and [1]")

    ops = {"imp": qimp}
    kind = "sh"
    if dual:
        ops["tilde"] = lift1(a.op("prime"), "prime")
        kind = "dsh"
    alg = AlgebraTable(qlat, ops, Signature(kind), {}, f"sH({a.name})")
    return QuotientResult(a, classes, tuple(int(c) for c in repmap), alg)


def quotient_sh(a: AlgebraTable) -> QuotientResult:
    """Quotient by ``x ~ y iff x -> y = 1 and y -> x = 1``.

    Representatives are least indices; every operation is re-derived from all
    representative choices and must agree.
    """
    return _quotient(a, dual=False)


def quotient_dsh(a: AlgebraTable) -> QuotientResult:
    """As :func:`quotient_sh`, plus ``[x]¬ = [x']``."""
    _require(a, {"prime": 1})
    return _quotient(a, dual=True)


def center(a: AlgebraTable) -> int | None:
    """The unique fixed point of ``~``, if any."""
    neg = a.op("neg")
    fixed = np.flatnonzero(neg == np.arange(len(a)))
    if len(fixed) > 1:
        raise MultipleCenters(", ".join(a.elements[i] for i in fixed))
    if len(fixed) == 0:
        if "prime" in a.ops:
            raise TheoremViolation("a dually hemimorphic algebra without a center")
        return None
    c = int(fixed[0])
    if "prime" in a.ops and c != a.op("prime")[a.one]:
        raise TheoremViolation(f"center {a.elements[c]} differs from 1' = {a.elements[a.op('prime')[a.one]]}")
    return c


def subalgebra_pairs(tw: TwistAlgebra, members: Iterable[int]) -> set[tuple[int, int]]:
    return {tw.pairs[i] for i in members}
