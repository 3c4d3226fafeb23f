"""Homomorphisms, isomorphism search, and the equivalence between semi-Nelson
algebras and semi-Heyting algebras paired with an i-filter.

``alpha`` sends ``(H, F)`` to the twist ``N(H, F)``; ``beta`` sends a
semi-Nelson algebra ``A`` to its quotient together with the classes of its
positive elements.  ``eta`` and ``delta`` are the components
``x -> [(x, x*)]`` and ``x -> ([x], [~x])`` of the natural isomorphisms
``id -> beta alpha`` and ``id -> alpha beta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .errors import NotAnIFilter, NotBijective, SignatureMismatch, TheoremViolation
from .filters import FilterSet, is_ifilter, positives
from .twist import QuotientResult, TwistAlgebra, nhf, quotient_dsh, quotient_sh, vk, vk_dsh
from .varieties import AlgebraTable, pseudocomplement_table

Witness = tuple[str, ...]


@dataclass(frozen=True, eq=False)
class HomMap:
    source: AlgebraTable
    target: AlgebraTable
    map: tuple[int, ...]
    certificate: dict[str, Witness | None] = field(default_factory=dict)

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def certified(self) -> bool:
        return all(w is None for w in self.certificate.values())

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def bijective(self) -> bool:
        return self.injective and len(self.map) == len(self.target)

    def image(self, xs) -> frozenset[int]:
        return frozenset(self.map[x] for x in xs)

    def lines(self) -> str:
        s, t = self.source.elements, self.target.elements
        return "".join(f"{s[x]} -> {t[y]}\n" for x, y in enumerate(self.map))

    def describe(self) -> str:
        out = []
        for op, w in self.certificate.items():
            out.append(f"PASS {op}" if w is None else f"FAIL {op} at ({', '.join(w)})")
        return "\n".join(out)


def _preserved(a: AlgebraTable, b: AlgebraTable) -> list[tuple[str, np.ndarray, np.ndarray]]:
    """(label, source table, target table) for every operation a morphism must respect."""
    if a.signature.required_ops != b.signature.required_ops or a.signature.bounded != b.signature.bounded:
        raise SignatureMismatch(f"{a.name} has signature {a.signature.kind}, {b.name} has {b.signature.kind}")
    items = [("meet", a.lattice.meet, b.lattice.meet), ("join", a.lattice.join, b.lattice.join)]
    for name in sorted(a.signature.required_ops):
        items.append((name, a.ops[name], b.ops[name]))
    if a.signature.bounded:
        items.append(("0", np.array(a.bottom), np.array(b.bottom)))
        items.append(("1", np.array(a.top), np.array(b.top)))
    for c in a.signature.required_consts:
        items.append((c, np.array(a.consts[c]), np.array(b.consts[c])))
    return items


def is_homomorphism(f, a: AlgebraTable, b: AlgebraTable, filters=None) -> HomMap:
    """Check pointwise that ``f`` preserves every operation of the shared signature.

    ``f`` is a sequence of target indices or a mapping between element names.
    With ``filters=(F, G)`` the map must also send ``F`` into ``G``.
    """
    if isinstance(f, HomMap):
        f = f.map
    if isinstance(f, Mapping):
        fmap = np.array([b.index(str(f[x])) for x in a.elements], dtype=np.int64)
    else:
        fmap = np.asarray(list(f), dtype=np.int64)
    if fmap.shape != (len(a),) or (len(a) and (fmap.min() < 0 or fmap.max() >= len(b))):
        raise ValueError("map must send every source element to a target element")
    cert: dict[str, Witness | None] = {}
    for label, ta, tb in _preserved(a, b):
        if ta.ndim == 0:
            ok = fmap[ta] == tb
            cert[label] = None if ok else ()
            continue
        if ta.ndim == 1:
            bad = np.flatnonzero(fmap[ta] != tb[fmap])
            cert[label] = None if len(bad) == 0 else (a.elements[bad[0]],)
        else:
            bad = np.argwhere(fmap[ta] != tb[np.ix_(fmap, fmap)])
            cert[label] = None if len(bad) == 0 else tuple(a.elements[i] for i in bad[0])
    if filters is not None:
        src, dst = (_members(F) for F in filters)
        outside = sorted(x for x in src if int(fmap[x]) not in dst)
        cert["filter"] = None if not outside else (a.elements[outside[0]],)
    return HomMap(a, b, tuple(int(v) for v in fmap), cert)


def _members(F) -> frozenset[int]:
    return F.members if isinstance(F, FilterSet) else frozenset(F)


def identity(a: AlgebraTable) -> HomMap:
    return is_homomorphism(range(len(a)), a, a)


def compose(g: HomMap, f: HomMap) -> HomMap:
    """``g`` after ``f``."""
    if len(f.target) != len(g.source):
        raise ValueError("maps are not composable")
    return is_homomorphism([g.map[y] for y in f.map], f.source, g.target)


# --------------------------------------------------------------------------
# Search


def _invariants(a: AlgebraTable) -> list[tuple]:
    """Isomorphism-invariant fingerprint of each element."""
    lat = a.lattice
    n = len(a)
    cov = np.zeros((n, n), dtype=bool)
    for x, y in lat.covers():
        cov[x, y] = True
    up = lat.leq.sum(axis=1)
    down = lat.leq.sum(axis=0)
    one = a.one
    out = []
    for x in range(n):
        key = [int(up[x]), int(down[x]), int(cov[x].sum()), int(cov[:, x].sum())]
        for name in sorted(a.signature.required_ops):
            t = a.ops[name]
            if t.ndim == 1:
                orbit, y = 1, int(t[x])
                while y != x and orbit <= n:
                    y, orbit = int(t[y]), orbit + 1
                key += [int(t[x] == x), orbit if y == x else 0, int(t[x] == lat.bottom), int(t[x] == lat.top)]
            else:
                key += [int((t[x] == one).sum()), int((t[:, x] == one).sum()), int(t[x, x] == one)]
        for c in a.signature.required_consts:
            key.append(int(a.consts[c] == x))
        out.append(tuple(key))
    return out


def _search(a: AlgebraTable, b: AlgebraTable, injective: bool) -> Iterator[list[int]]:
    """Backtrack over maps in lexicographic order, pruning on partial tables."""
    tables = _preserved(a, b)
    n, m = len(a), len(b)
    if injective:
        ia, ib = _invariants(a), _invariants(b)
        cands = [[y for y in range(m) if ib[y] == ia[x]] for x in range(n)]
    else:
        cands = [list(range(m)) for _ in range(n)]
    for label, ta, tb in tables:
        if ta.ndim == 0:
            cands[int(ta)] = [y for y in cands[int(ta)] if y == int(tb)]

    f = np.full(n, -1, dtype=np.int64)
    finv = np.full(m, -1, dtype=np.int64)

    def ok(k):
        # only the leading (k+1) x (k+1) block is fully assigned
        fS = f[: k + 1]
        for _, ta, tb in tables:
            if ta.ndim == 1:
                res = f[ta[: k + 1]]
                tgt = tb[fS]
            elif ta.ndim == 2:
                res = f[ta[: k + 1, : k + 1]]
                tgt = tb[fS[:, None], fS[None, :]]
            else:
                continue
            assigned = res >= 0
            if np.any(assigned & (res != tgt)):
                return False
            if injective and np.any(~assigned & (finv[tgt] >= 0)):
                return False
        return True

    def go(k):
        if k == n:
            yield f.tolist()
            return
        for y in cands[k]:
            if injective and finv[y] >= 0:
                continue
            f[k] = y
            if injective:
                finv[y] = k
            if ok(k):
                yield from go(k + 1)
            if injective:
                finv[y] = -1
        f[k] = -1

    yield from go(0)


def find_isomorphism(a: AlgebraTable, b: AlgebraTable) -> HomMap | None:
    """First isomorphism ``a -> b`` in lexicographic order, or None."""
    _preserved(a, b)
    if len(a) != len(b):
        return None
    for cand in _search(a, b, injective=True):
        h = is_homomorphism(cand, a, b)
        inv = [0] * len(b)
        for x, y in enumerate(cand):
            inv[y] = x
        if h.certified and is_homomorphism(inv, b, a).certified:
            return h
    return None


def enumerate_homomorphisms(a: AlgebraTable, b: AlgebraTable, filters=None) -> Iterator[HomMap]:
    """Every homomorphism ``a -> b`` (sending ``filters[0]`` into ``filters[1]``
    when given), in lexicographic order."""
    for cand in _search(a, b, injective=False):
        h = is_homomorphism(cand, a, b, filters)
        if h.certified:
            yield h


# --------------------------------------------------------------------------
# Functors


@dataclass(frozen=True, eq=False)
class SHFObject:
    algebra: AlgebraTable
    ifilter: FilterSet

    def __post_init__(self):
        if not self.ifilter.is_ifilter:
            raise NotAnIFilter(self.ifilter)


def shf_object(a: AlgebraTable, f) -> SHFObject:
    return SHFObject(a, is_ifilter(a, f))


def shf_morphism(f, src: SHFObject, dst: SHFObject) -> HomMap:
    return is_homomorphism(f, src.algebra, dst.algebra, filters=(src.ifilter, dst.ifilter))


def _memo(owner, key, build):
    # inputs are immutable, so results can live on the owning object
    cache = owner.__dict__.get(key)
    if cache is None:
        cache = build()
        object.__setattr__(owner, key, cache)
    return cache


def alpha(obj: SHFObject) -> TwistAlgebra:
    """``N(H, F)``; the semi-Nelson algebra itself is ``.algebra``."""
    return _memo(obj, "_alpha", lambda: nhf(obj.algebra, obj.ifilter.members))


def alpha_mor(f: HomMap, src: SHFObject, dst: SHFObject) -> HomMap:
    """``(a, b) -> (f(a), f(b))`` between the twists of ``src`` and ``dst``."""
    ts, tt = alpha(src), alpha(dst)
    fmap = []
    for a, b in ts.pairs:
        image = (f.map[a], f.map[b])
        try:
            fmap.append(tt.index_of(image))
        except KeyError:
            raise TheoremViolation(f"alpha(f) leaves N(H',F') at {ts.algebra.elements[ts.index_of((a, b))]}") from None
    return is_homomorphism(fmap, ts.algebra, tt.algebra)


def beta_full(a: AlgebraTable) -> tuple[SHFObject, QuotientResult]:
    return _memo(a, "_beta", lambda: _beta_full(a))


def _beta_full(a: AlgebraTable) -> tuple[SHFObject, QuotientResult]:
    q = quotient_sh(a)
    pos = frozenset(q.cls(x) for x in positives(a))
    fs = is_ifilter(q.algebra, pos)
    if not fs.is_ifilter:
        raise TheoremViolation("classes of positive elements do not form an i-filter:\n" + fs.describe())
    return SHFObject(q.algebra, fs), q


def beta(a: AlgebraTable) -> SHFObject:
    """``(sH(A), [A+])``."""
    return beta_full(a)[0]


def beta_mor(f: HomMap) -> HomMap:
    """``[a] -> [f(a)]``, checked to be independent of the representative."""
    src, qs = beta_full(f.source)
    dst, qt = beta_full(f.target)
    fmap = []
    for c, members in enumerate(qs.classes):
        images = {qt.cls(f.map[x]) for x in members}
        if len(images) != 1:
            raise TheoremViolation(f"beta(f) is not well defined on {qs.algebra.elements[c]}")
        fmap.append(images.pop())
    return is_homomorphism(fmap, src.algebra, dst.algebra, filters=(src.ifilter, dst.ifilter))


def eta(obj: SHFObject) -> HomMap:
    """``x -> [(x, x*)]`` from ``H`` onto the quotient of ``N(H, F)``."""
    tw = alpha(obj)
    target, q = beta_full(tw.algebra)
    star = pseudocomplement_table(obj.algebra)
    fmap = [q.cls(tw.index_of((x, int(star[x])))) for x in range(len(obj.algebra))]
    h = is_homomorphism(fmap, obj.algebra, target.algebra, filters=(obj.ifilter, target.ifilter))
    if not h.bijective:
        raise NotBijective(f"eta of {obj.algebra.name} is not a bijection")
    return h


def delta(a: AlgebraTable) -> HomMap:
    """``x -> ([x], [~x])`` from ``A`` onto ``N(sH(A), [A+])``."""
    obj, q = beta_full(a)
    tw = alpha(obj)
    neg = a.op("neg")
    fmap = []
    for x in range(len(a)):
        pair = (q.cls(x), q.cls(int(neg[x])))
        try:
            fmap.append(tw.index_of(pair))
        except KeyError:
            raise NotBijective(f"delta sends {a.elements[x]} outside N(sH(A),[A+])") from None
    h = is_homomorphism(fmap, a, tw.algebra)
    if not h.bijective:
        raise NotBijective(f"delta of {a.name} is not a bijection")
    return h


def check_naturality(f: HomMap, side: str, src: SHFObject | None = None, dst: SHFObject | None = None):
    """Compare both paths around the naturality square pointwise.

    For ``side="eta"``, ``f`` is a morphism ``src -> dst`` of algebra/filter
    pairs; for ``side="delta"``, ``f`` is a semi-Nelson homomorphism.
    Returns ``(True, None)`` or ``(False, first disagreeing element name)``.
    """
    if side == "eta":
        if src is None or dst is None:
            raise ValueError("eta naturality needs the source and target objects")
        left = compose(eta(dst), f)
        right = compose(beta_mor(alpha_mor(f, src, dst)), eta(src))
    elif side == "delta":
        left = compose(delta(f.target), f)
        right = compose(alpha_mor(beta_mor(f), beta(f.source), beta(f.target)), delta(f.source))
    else:
        raise ValueError(f"side must be 'eta' or 'delta', not {side!r}")
    for x, (u, v) in enumerate(zip(left.map, right.map)):
        if u != v:
            return False, f.source.elements[x]
    return True, None


# --------------------------------------------------------------------------
# Representation maps


def g_map(h: AlgebraTable) -> HomMap:
    """``a -> [(a, a*)]`` from ``H`` into the quotient of its full twist.

    A dual hemimorphism on ``H`` is carried through ``'`` and back.
    """
    dual = "tilde" in h.signature.required_ops
    tw = vk_dsh(h) if dual else vk(h)
    q = quotient_dsh(tw.algebra) if dual else quotient_sh(tw.algebra)
    star = pseudocomplement_table(h)
    fmap = [q.cls(tw.index_of((x, int(star[x])))) for x in range(len(h))]
    return is_homomorphism(fmap, h, q.algebra)


def h_map(a: AlgebraTable, dual: bool = False) -> HomMap:
    """``x -> ([x], [~x])`` from ``A`` into the full twist of its quotient.

    With ``dual`` the quotient keeps ``¬`` and the twist carries ``'``.
    """
    q = quotient_dsh(a) if dual else quotient_sh(a)
    tw = vk_dsh(q.algebra) if dual else vk(q.algebra)
    neg = a.op("neg")
    fmap = [tw.index_of((q.cls(x), q.cls(int(neg[x])))) for x in range(len(a))]
    return is_homomorphism(fmap, a, tw.algebra)


def roundtrip(a: AlgebraTable, dual: bool = False) -> HomMap:
    """The canonical comparison map for an algebra of any supported kind.

    Semi-Heyting kinds use ``g``; semi-Nelson kinds use ``delta``; with
    ``dual`` a dually hemimorphic semi-Nelson algebra uses ``h`` onto the full
    twist of its quotient.
    """
    kind = a.signature.kind
    if kind in ("sh", "h", "dsh"):
        return g_map(a)
    if dual:
        return h_map(a, dual=True)
    return delta(a)
