"""Dense elements, lattice filters, i-filters and positive elements."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DenseCharacterizationMismatch,
    NotASubalgebra,
    PositiveCharacterizationMismatch,
    ProjectionNotOnto,
    SizeBound,
    TheoremViolation,
)
from .finlat import FiniteLattice
from .varieties import AlgebraTable, _require

DEFAULT_FILTER_BOUND = 64


@dataclass(frozen=True, eq=False)
class FilterSet:
    """A subset of a carrier together with the conditions it was found to meet.

    ``contains_dense`` and ``closed_under_if3`` are ``None`` when the base is a
    bare lattice.  ``if3_witness`` is the first ``(z, t, x)`` with ``z | t``
    in the set but ``(x => z) | (x & t)`` outside it; ``if3_value`` is that
    offending element.
    """

    base: AlgebraTable | FiniteLattice
    members: frozenset[int]
    is_filter: bool
    contains_dense: bool | None = None
    closed_under_if3: bool | None = None
    if3_witness: tuple[int, int, int] | None = None
    if3_value: int | None = None

    @property
    def lattice(self) -> FiniteLattice:
        return self.base.lattice if isinstance(self.base, AlgebraTable) else self.base

    @property
    def is_ifilter(self) -> bool:
        return bool(self.is_filter and self.contains_dense and self.closed_under_if3)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    @property
    def names(self) -> list[str]:
        return [self.lattice.elements[i] for i in sorted(self.members)]

    def __eq__(self, other):
        if not isinstance(other, FilterSet):
            return NotImplemented
        return self.members == other.members and self.lattice == other.lattice

    __hash__ = None

    def describe(self) -> str:
        lines = [f"set {format_set(self.lattice, self.members)}"]
        lines.append(f"IF1 {'PASS' if self.is_filter else 'FAIL'}")
        if self.contains_dense is not None:
            lines.append(f"IF2 {'PASS' if self.contains_dense else 'FAIL'}")
        if self.closed_under_if3 is not None:
            if self.closed_under_if3:
                lines.append("IF3 PASS")
            else:
                el = self.lattice.elements
                z, t, x = self.if3_witness
                lines.append(f"IF3 FAIL z={el[z]} t={el[t]} x={el[x]} value={el[self.if3_value]}")
        return "\n".join(lines)


def format_set(lat: FiniteLattice, members: Iterable[int]) -> str:
    return ",".join(lat.elements[i] for i in sorted(members))


def parse_set(lat: FiniteLattice, text: str) -> frozenset[int]:
    """Parse ``e,1`` into indices; an empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in lat.elements:
            raise KeyError(tok)
        out.add(lat.index(tok))
    return frozenset(out)


def _as_members(lat: FiniteLattice, f) -> frozenset[int]:
    if isinstance(f, FilterSet):
        return f.members
    if isinstance(f, str):
        return parse_set(lat, f)
    return frozenset(int(i) for i in f)


def is_lattice_filter(lat: FiniteLattice, members: frozenset[int]) -> bool:
    if not members:
        return False
    idx = np.fromiter(members, dtype=np.int64)
    inside = np.zeros(len(lat), dtype=bool)
    inside[idx] = True
    upward = bool(np.all(inside[np.flatnonzero(lat.leq[idx].any(axis=0))]))
    meets = bool(np.all(inside[lat.meet[np.ix_(idx, idx)]]))
    return upward and meets


def dense_elements(a: AlgebraTable) -> frozenset[int]:
    """Elements whose pseudocomplement ``x => 0`` is the bottom.

    Cross-checked against the elements of the form ``y | y*``; the two sets
    agree on every semi-Heyting algebra.
    """
    _require(a, {"imp": 2})
    star = a.op("imp")[:, a.bottom]
    dense = frozenset(int(x) for x in np.flatnonzero(star == a.bottom))
    joins = frozenset(int(v) for v in a.lattice.join[np.arange(len(a)), star])
    if dense != joins:
        raise DenseCharacterizationMismatch(
            f"{{x : x*=0}} = {format_set(a.lattice, dense)} but {{y | y*}} = {format_set(a.lattice, joins)}"
        )
    return dense


def enumerate_filters(lat: FiniteLattice | AlgebraTable, max_size: int = DEFAULT_FILTER_BOUND) -> list[FilterSet]:
    """All lattice filters, ordered by size and then by sorted member list.

    A finite lattice has exactly one filter per element, the principal up-set
    of that element, so no subset search is needed.
    """
    lattice = lat.lattice if isinstance(lat, AlgebraTable) else lat
    if len(lattice) > max_size:
        raise SizeBound(f"lattice has {len(lattice)} elements, filter bound is {max_size}")
    ups = {lattice.upset(x) for x in range(len(lattice))}
    ordered = sorted(ups, key=lambda s: (len(s), sorted(s)))
    return [FilterSet(lat, s, True) for s in ordered]


def is_ifilter(a: AlgebraTable, f) -> FilterSet:
    """Evaluate IF1, IF2 and IF3 for a subset of a semi-Heyting algebra."""
    _require(a, {"imp": 2})
    lat = a.lattice
    members = _as_members(lat, f)
    n = len(a)
    inside = np.zeros(n, dtype=bool)
    inside[list(members)] = True

    filt = is_lattice_filter(lat, members)
    dense = dense_elements(a) <= members

    # value[z, t, x] = (x => z) | (x & t)
    z = np.arange(n).reshape(n, 1, 1)
    t = np.arange(n).reshape(1, n, 1)
    x = np.arange(n).reshape(1, 1, n)
    value = lat.join[a.op("imp")[x, z], lat.meet[x, t]]
    bad = inside[lat.join[z, t]] & ~inside[value]
    witness = wvalue = None
    if bad.any():
        zi, ti, xi = (int(v) for v in np.argwhere(bad)[0])
        witness, wvalue = (zi, ti, xi), int(value[zi, ti, xi])
    return FilterSet(a, members, filt, dense, witness is None, witness, wvalue)


def enumerate_ifilters(a: AlgebraTable) -> list[FilterSet]:
    return [g for g in (is_ifilter(a, f) for f in enumerate_filters(a.lattice)) if g.is_ifilter]


def positives(a: AlgebraTable) -> frozenset[int]:
    """Elements with ``~x <= x``, cross-checked against ``{x | ~x}``."""
    _require(a, {"neg": 1})
    neg = a.op("neg")
    ar = np.arange(len(a))
    pos = frozenset(int(x) for x in np.flatnonzero(a.lattice.leq[neg, ar]))
    joins = frozenset(int(v) for v in a.lattice.join[ar, neg])
    if pos != joins:
        raise PositiveCharacterizationMismatch(
            f"{{x : ~x<=x}} = {format_set(a.lattice, pos)} but {{x | ~x}} = {format_set(a.lattice, joins)}"
        )
    return pos


def _closed_under_twist_ops(base: AlgebraTable, pairs: set[tuple[int, int]]) -> tuple | None:
    """First violation of closure under the pair operations, or None."""
    meet, join, imp = base.lattice.meet, base.lattice.join, base.op("imp")
    top = (base.top, base.bottom)
    if top not in pairs:
        return ("top", top)
    ordered = sorted(pairs)
    for a, b in ordered:
        if (b, a) not in pairs:
            return ("neg", (a, b))
    for (a, b), (c, d) in ((p, q) for p in ordered for q in ordered):
        for label, r in (
            ("meet", (meet[a, c], join[b, d])),
            ("join", (join[a, c], meet[b, d])),
            ("imp", (imp[a, c], meet[a, d])),
        ):
            r = (int(r[0]), int(r[1]))
            if r not in pairs:
                return (label, (a, b), (c, d))
    return None


def extract_ifilter(base: AlgebraTable, sub: Iterable[Sequence[int]]) -> FilterSet:
    """Recover the i-filter ``{a | b : (a, b) in sub}`` of a subalgebra of the
    full twist whose first projection is onto."""
    from .twist import nhf

    _require(base, {"imp": 2})
    pairs = {(int(a), int(b)) for a, b in sub}
    meet = base.lattice.meet
    for a, b in sorted(pairs):
        if meet[a, b] != base.bottom:
            raise NotASubalgebra(f"({base.elements[a]},{base.elements[b]}) is not a twist pair")
    bad = _closed_under_twist_ops(base, pairs)
    if bad is not None:
        raise NotASubalgebra(f"not closed under {bad[0]} at {bad[1:]}")
    firsts = {a for a, _ in pairs}
    if firsts != set(range(len(base))):
        missing = sorted(set(range(len(base))) - firsts)
        raise ProjectionNotOnto(f"first projection misses {format_set(base.lattice, missing)}")

    join = base.lattice.join
    e = frozenset(int(join[a, b]) for a, b in pairs)
    fs = is_ifilter(base, e)
    if not fs.is_ifilter:
        raise TheoremViolation("extracted set is not an i-filter:\n" + fs.describe())
    if set(nhf(base, e).pairs) != pairs:
        raise TheoremViolation("the twist over the extracted i-filter differs from the subalgebra")
    return fs
