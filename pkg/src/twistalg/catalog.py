"""Built-in lattices and algebras: small chains, the four-element Boolean
lattice, the worked examples shipped as data files, and the enumerated
semi-Heyting corpus used by the property suites."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .finlat import FiniteLattice, build_lattice, chain
from .fileformat import parse_algebra
from .varieties import AlgebraTable, Signature, enumerate_semi_heyting, make_algebra

DATA_FILES = ("skew2.alg", "grid9.alg", "grid9_sub.alg", "grid9_quotient.alg")


def data_text(filename: str) -> str:
    return resources.files("twistalg").joinpath("data", filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load(filename: str) -> AlgebraTable:
    return parse_algebra(data_text(filename))


def skew2() -> AlgebraTable:
    """Two-element semi-Heyting algebra with 0=>1 = 1=>0 = 0."""
    return load("skew2.alg")


def grid9() -> AlgebraTable:
    return load("grid9.alg")


def grid9_sub() -> AlgebraTable:
    return load("grid9_sub.alg")


def grid9_quotient() -> AlgebraTable:
    return load("grid9_quotient.alg")


GRID9_SUB_MEMBERS = ("0", "a", "d", "e", "g", "1")


def diamond() -> FiniteLattice:
    """The four-element Boolean lattice (the 2x2 grid)."""
    return build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def m3() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"], [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def n5() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def corpus_lattices() -> dict[str, FiniteLattice]:
    """Chains of size 1-4 and the 2x2 grid (also called the diamond)."""
    lats = {f"chain{n}": chain(n) for n in range(1, 5)}
    lats["diamond"] = diamond()
    return lats


def boolean2() -> AlgebraTable:
    """The two-element Heyting (Boolean) algebra."""
    return make_algebra(chain(2), {"imp": [["1", "1"], ["0", "1"]]}, "sh", name="bool2")


def trivial_sh() -> AlgebraTable:
    return make_algebra(chain(1), {"imp": [["0"]]}, "sh", name="trivial")


def trivial_sn() -> AlgebraTable:
    return make_algebra(chain(1), {"imp": [["0"]], "neg": ["0"]}, "sn", {"one": "0"}, name="trivial")


def trivial_lattice() -> AlgebraTable:
    return AlgebraTable(chain(1), {}, Signature("lat"), {}, "trivial")


@lru_cache(maxsize=None)
def corpus_sh() -> tuple[AlgebraTable, ...]:
    """Every semi-Heyting structure on every corpus lattice."""
    out = []
    for lname, lat in corpus_lattices().items():
        out.extend(enumerate_semi_heyting(lat, name=f"{lname}_"))
    return tuple(out)
