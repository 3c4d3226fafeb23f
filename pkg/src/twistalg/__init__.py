"""Finite semi-Heyting and semi-Nelson algebras, twist constructions and
the equivalence between semi-Nelson algebras and semi-Heyting algebras with
an i-filter, all checked exhaustively on explicit tables."""

from .errors import *  # noqa: F401,F403
from .finlat import FiniteLattice, build_lattice, chain, hasse_dot, lattice_from_order
from .varieties import (
    AlgebraTable,
    CheckReport,
    Signature,
    check,
    check_dsh,
    check_dsn,
    check_heyting,
    check_nelson,
    check_pseudocomplemented,
    check_semi_heyting,
    check_semi_nelson,
    derived_heyting_arrow,
    enumerate_dsh,
    enumerate_semi_heyting,
    make_algebra,
    pseudocomplement,
    restrict,
    weak_implication,
)
from .filters import (
    FilterSet,
    dense_elements,
    enumerate_filters,
    enumerate_ifilters,
    extract_ifilter,
    is_ifilter,
    positives,
)
from .twist import QuotientResult, TwistAlgebra, center, nhf, quotient_dsh, quotient_sh, vk, vk_dsh
from .catequiv import (
    HomMap,
    SHFObject,
    alpha,
    alpha_mor,
    beta,
    beta_mor,
    check_naturality,
    compose,
    delta,
    enumerate_homomorphisms,
    eta,
    find_isomorphism,
    g_map,
    h_map,
    identity,
    is_homomorphism,
    shf_morphism,
    shf_object,
)
from .fileformat import load_algebra, parse_algebra, serialize_algebra

__version__ = "0.1.0"
