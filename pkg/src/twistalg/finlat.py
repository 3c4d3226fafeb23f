"""Finite bounded lattices on dense integer carriers.

Elements are the indices ``0..n-1``; ``elements[i]`` is the display name of
index ``i``.  All tables are numpy integer arrays and are frozen after
construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CycleInOrder, NotALattice, NotBounded


def _frozen(arr):
    arr = np.array(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    elements: tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    __hash__ = None

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(name) from None

    def name(self, i: int) -> str:
        return self.elements[i]

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(x, y)`` with ``x < y`` and nothing strictly between,
        sorted by index."""
        n = len(self)
        lt = self.leq & ~np.eye(n, dtype=bool)
        # x < z < y for some z
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cov = lt & ~between
        return [(int(x), int(y)) for x, y in np.argwhere(cov)]

    def upset(self, x: int) -> frozenset[int]:
        return frozenset(int(y) for y in np.flatnonzero(self.leq[x]))

    def downset(self, x: int) -> frozenset[int]:
        return frozenset(int(y) for y in np.flatnonzero(self.leq[:, x]))

    def is_distributive(self) -> bool:
        m, j = self.meet, self.join
        n = len(self)
        x = np.arange(n).reshape(n, 1, 1)
        y = np.arange(n).reshape(1, n, 1)
        z = np.arange(n).reshape(1, 1, n)
        return bool(np.all(m[x, j[y, z]] == j[m[x, y], m[x, z]]))


def lattice_from_order(names: Sequence[str], leq) -> FiniteLattice:
    """Validate a partial order given as a boolean matrix and derive meet/join.

    ``leq`` must already be reflexive and transitive; antisymmetry, bounds and
    the existence of all meets and joins are checked here.
    """
    names = tuple(str(x) for x in names)
    leq = np.asarray(leq, dtype=bool)
    n = len(names)
    if n == 0:
        raise ValueError("a lattice needs at least one element")
    if leq.shape != (n, n):
        raise ValueError(f"order matrix has shape {leq.shape}, expected {(n, n)}")

    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        x, y = np.argwhere(both)[0]
        raise CycleInOrder(f"{names[x]} and {names[y]} lie on a cycle of the order")

    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) == 0 or len(tops) == 0:
        missing = "least" if len(bottoms) == 0 else "greatest"
        raise NotBounded(f"the order has no {missing} element")

    meet = _extremal_bounds(leq, names, "meet")
    join = _extremal_bounds(leq.T, names, "join")
    return FiniteLattice(
        elements=names,
        leq=_frozen(leq),
        meet=_frozen(meet),
        join=_frozen(join),
        bottom=int(bottoms[0]),
        top=int(tops[0]),
    )


def _extremal_bounds(leq, names, kind):
    # lower[x, y, l]: l is a lower bound of x and y
    lower = leq.T[:, None, :] & leq.T[None, :, :]
    # l is above every other lower bound m
    greatest = lower & np.all(~lower[:, :, :, None] | leq[None, None, :, :], axis=2)
    counts = greatest.sum(axis=2)
    if np.any(counts != 1):
        x, y = np.argwhere(counts != 1)[0]
        raise NotALattice((names[x], names[y]), kind)
    return greatest.argmax(axis=2).astype(np.int64)


def build_lattice(names: Sequence, coverings: Sequence[tuple]) -> FiniteLattice:
    """Build a lattice from element names and (possibly redundant) covering pairs.

    >>> lat = build_lattice(["0", "1"], [("0", "1")])
    >>> lat.meet[1, 1], lat.bottom, lat.top
    (1, 0, 1)
    """
    names = [str(x) for x in names]
    if not names:
        raise ValueError("names must be nonempty")
    if len(set(names)) != len(names):
        raise ValueError("element names must be distinct")
    pos = {x: i for i, x in enumerate(names)}
    n = len(names)
    leq = np.eye(n, dtype=bool)
    for lo, hi in coverings:
        lo, hi = str(lo), str(hi)
        for v in (lo, hi):
            if v not in pos:
                raise KeyError(v)
        leq[pos[lo], pos[hi]] = True
    # Warshall closure
    for k in range(n):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    return lattice_from_order(names, leq)


def chain(n: int, names: Sequence[str] | None = None) -> FiniteLattice:
    names = list(names) if names is not None else [str(i) for i in range(n)]
    return build_lattice(names, list(zip(names, names[1:])))


def relabel(lat: FiniteLattice, perm: Sequence[int], names: Sequence[str] | None = None) -> FiniteLattice:
    """Return the lattice with old index ``i`` moved to position ``perm[i]``."""
    n = len(lat)
    inv = np.empty(n, dtype=np.int64)
    inv[np.asarray(perm)] = np.arange(n)
    new_names = list(names) if names is not None else [lat.elements[inv[i]] for i in range(n)]
    return lattice_from_order(new_names, lat.leq[np.ix_(inv, inv)])


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(lat: FiniteLattice, graph_name: str = "lattice") -> str:
    """DOT digraph of the covering relation, edges pointing upward."""
    lines = [f"digraph {_dot_id(graph_name)} {{", "  rankdir=BT;"]
    for name in lat.elements:
        lines.append(f"  {_dot_id(name)};")
    for x, y in lat.covers():
        lines.append(f"  {_dot_id(lat.elements[x])} -> {_dot_id(lat.elements[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
