import json
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg import catalog
from twistalg.errors import SignatureMismatch, SizeBound
from twistalg.finlat import chain
from twistalg.twist import vk, vk_dsh
from twistalg.varieties import (
    AlgebraTable,
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
    nelson_reduct,
    pseudocomplement,
    restrict,
    weak_implication,
    with_pseudocomplement,
)

import oracles

CORPUS = catalog.corpus_sh()


def ex32():
    return catalog.skew2()


def H():
    return catalog.grid9_quotient()


def A():
    return catalog.grid9()


def S():
    return catalog.grid9_sub()


def with_tilde(a, row):
    return a.with_ops(signature="dsh", tilde=[a.index(v) for v in row])


# -------------------------------------------------------------- semi-Heyting

def test_quotient_H_is_semi_heyting():
    assert check_semi_heyting(H()).passed


def test_skew2_is_semi_heyting():
    r = check_semi_heyting(ex32())
    assert r.passed and r.axioms_checked == 4


def test_sh4_failure_witness():
    a = make_algebra(chain(2), {"imp": [["0", "0"], ["0", "1"]]}, "sh")
    r = check_semi_heyting(a)
    assert r.failed("SH4")
    assert r.witness("SH4") == {"x": "0"}


def test_boolean_is_heyting():
    assert check_heyting(catalog.boolean2()).passed


def test_skew2_not_heyting():
    r = check_heyting(ex32())
    assert r.witness("H") == {"x": "1", "y": "0"}


def test_quotient_H_not_heyting():
    h = H()
    r = check_heyting(h)
    assert r.witness("H") == {"x": "[d]", "y": "[0]"}
    imp, meet, ix = h.op("imp"), h.lattice.meet, h.index
    # the instance x=[1], y=[0] fails too: [0] => [1] = [e]
    assert imp[meet[ix("[1]"), ix("[0]")], ix("[1]")] == ix("[e]")


def test_report_text_format():
    r = check_heyting(ex32())
    assert r.to_text().splitlines() == ["PASS SH1", "PASS SH2", "PASS SH3", "PASS SH4", "FAIL H x=1 y=0"]


def test_report_json_format():
    doc = json.loads(check_heyting(ex32()).to_json())
    assert [d["axiom"] for d in doc] == ["SH1", "SH2", "SH3", "SH4", "H"]
    assert doc[-1] == {"axiom": "H", "status": "fail", "witness": {"x": "1", "y": "0"}}
    assert doc[0] == {"axiom": "SH1", "status": "pass", "witness": None}


def test_lattice_mismatch_is_reported():
    a = ex32()
    bad = a.with_ops(meet=[[0, 0], [0, 0]])
    r = check_semi_heyting(bad)
    assert r.failed("LatticeMismatch")
    assert r.witness("LatticeMismatch") == {"x": "1", "y": "1"}


def test_all_axioms_evaluated_after_failure():
    a = make_algebra(chain(2), {"imp": [["0", "0"], ["0", "0"]]}, "sh")
    r = check_heyting(a)
    assert r.axioms_checked == 5
    assert not r.passed


def test_signature_enforced():
    with pytest.raises(SignatureMismatch):
        AlgebraTable(chain(2), {}, Signature("sh"))
    with pytest.raises(SignatureMismatch):
        AlgebraTable(chain(2), {"imp": [0, 1]}, Signature("sh"))
    with pytest.raises(SignatureMismatch):
        make_algebra(chain(2), {"imp": [["1", "1"], ["0", "1"]], "neg": ["1", "0"]}, "sn")
    with pytest.raises(SignatureMismatch):
        Signature("bogus")


# -------------------------------------------------------------- semi-Nelson

def test_grid9_semi_nelson():
    r = check_semi_nelson(A())
    assert r.passed
    assert r.axioms_checked == 11


def test_grid9_sub_semi_nelson():
    assert check_semi_nelson(S()).passed


def test_S_is_subalgebra_of_A():
    a = A()
    sub = restrict(a, [a.index(x) for x in catalog.GRID9_SUB_MEMBERS], name="S")
    assert sub == S()


def test_perturbed_negation_fails_sn3():
    a = A()
    neg = a.op("neg").copy()
    neg[a.index("a")] = a.index("f")
    r = check_semi_nelson(a.with_ops(neg=neg))
    assert r.failed("SN3")
    # ~~a = ~f = b
    assert a.op("neg")[a.index("f")] == a.index("b")


def test_strict_sn5_collapses_A():
    r = check_semi_nelson(A(), strict_sn5=True)
    assert r.failures == [("SN5", ("0", "0"))]


def test_weak_implication_of_A_is_nelson():
    assert check_nelson(nelson_reduct(A())).passed


def test_A_is_not_nelson():
    r = check_nelson(A())
    assert r.failures == [("N7", ("0", "0", "0"))]


def test_trivial_is_nelson():
    assert check_nelson(catalog.trivial_sn().with_ops(signature="n")).passed


def test_nimp_values():
    a = weak_implication(A())
    nimp, ix = a.op("nimp"), a.index
    assert nimp[ix("e"), ix("d")] == ix("d")
    assert all(nimp[x, x] == a.one for x in range(len(a)))
    t = weak_implication(catalog.trivial_sn())
    assert t.op("nimp").tolist() == [[0]]


# -------------------------------------------------------------- dual hemimorphisms

def test_two_chain_dsh():
    assert check_dsh(with_tilde(ex32(), ["1", "0"])).passed


def test_H_with_pseudocomplement_is_dsh():
    h = H()
    star = [int(pseudocomplement(h, x)) for x in range(len(h))]
    assert check_dsh(h.with_ops(signature="dsh", tilde=star)).passed


def test_dsm2_failure():
    r = check_dsh(with_tilde(H(), ["[1]", "[e]", "[d]", "[1]"]))
    assert r.failed("DSM2")


def test_dsn_twist_of_two_chain():
    tw = vk_dsh(with_tilde(ex32(), ["1", "0"]))
    r = check_dsn(tw.algebra)
    assert r.passed and r.axioms_checked == 18


def test_identity_prime_fails_dsn1():
    tw = vk_dsh(with_tilde(ex32(), ["1", "0"]))
    a = tw.algebra
    r = check_dsn(a.with_ops(prime=np.arange(len(a))))
    assert r.failed("DSN1")


def test_trivial_dsn():
    a = catalog.trivial_sn().with_ops(signature="dsn", prime=[0])
    assert check_dsn(a).passed


def test_literal_dsn3_differs_off_heyting_bases():
    tw = vk_dsh(with_tilde(ex32(), ["1", "0"]))
    r = check_dsn(tw.algebra, strict_dsn3=True)
    assert r.failures == [("DSN3", ("(0,0)", "(1,0)"))]
    # over the Boolean base both readings agree
    tw = vk_dsh(with_tilde(catalog.boolean2(), ["1", "0"]))
    assert check_dsn(tw.algebra, strict_dsn3=True).passed


def test_enumerate_dsh_two_chain():
    # on the 2-chain the bounds force the dual hemimorphism
    assert [list(d.op("tilde")) for d in enumerate_dsh(ex32())] == [[1, 0]]


def test_check_dispatch():
    assert check(A()).variety == "sn"
    assert check(H()).variety == "sh"


# -------------------------------------------------------------- derived operations

def test_derived_heyting_arrow_skew2():
    a = derived_heyting_arrow(ex32())
    assert a.op("himp").tolist() == [[1, 1], [0, 1]]


def test_derived_heyting_arrow_on_heyting_is_imp():
    a = derived_heyting_arrow(catalog.boolean2())
    assert np.array_equal(a.op("himp"), a.op("imp"))


def test_derived_heyting_arrow_H():
    a = derived_heyting_arrow(H())
    assert a.op("himp")[a.index("[e]"), a.index("[d]")] == a.index("[d]")


def test_pseudocomplement_values():
    h = H()
    assert pseudocomplement(h, h.index("[d]")) == h.index("[e]")
    e = ex32()
    assert (pseudocomplement(e, 1), pseudocomplement(e, 0)) == (0, 1)


# -------------------------------------------------------------- enumeration

def tables(algs):
    return sorted(a.op("imp").tolist() for a in algs)


@pytest.mark.parametrize("name", ["chain1", "chain2", "chain3", "chain4", "diamond"])
def test_enumeration_matches_oracle(name):
    lat = catalog.corpus_lattices()[name]
    meet, _ = oracles.lattice_ops(len(lat), lat.le)
    expected = sorted(oracles.semi_heyting_tables(len(lat), meet, lat.top))
    assert tables(enumerate_semi_heyting(lat)) == expected


def test_unfiltered_oracle_agrees_on_small_chains():
    for n in (1, 2, 3):
        lat = chain(n)
        meet, _ = oracles.chain_ops(n)
        assert tables(enumerate_semi_heyting(lat)) == sorted(oracles.semi_heyting_tables_unfiltered(n, meet, n - 1))


# frozen regression constants, produced by tests/oracles.py
FROZEN_COUNTS = {"chain1": 1, "chain2": 2, "chain3": 10, "chain4": 160, "diamond": 4}


def test_frozen_counts():
    for name, lat in catalog.corpus_lattices().items():
        assert sum(1 for _ in enumerate_semi_heyting(lat)) == FROZEN_COUNTS[name], name


def test_two_chain_structures_are_heyting_and_skew2():
    found = tables(enumerate_semi_heyting(chain(2)))
    assert found == [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]


def test_size_bound():
    with pytest.raises(SizeBound):
        next(enumerate_semi_heyting(chain(5)))
    assert sum(1 for _ in enumerate_semi_heyting(chain(5), max_size=5)) > 0
    # semi-Heyting lattices are distributive
    assert sum(1 for _ in enumerate_semi_heyting(catalog.m3(), max_size=5)) == 0
    assert sum(1 for _ in enumerate_semi_heyting(catalog.n5(), max_size=5)) == 0


def test_every_enumerated_algebra_passes():
    assert all(check_semi_heyting(a).passed for a in CORPUS)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_single_cell_mutations(a, data):
    n = len(a)
    if n == 1:
        return
    x, y = data.draw(st.sampled_from([(x, y) for x in range(n) for y in range(n) if x != y]))
    imp = a.op("imp").copy()
    v = data.draw(st.sampled_from([v for v in range(n) if v != imp[x, y]]))
    imp[x, y] = v
    meet = a.lattice.meet.tolist()
    expected = oracles.is_semi_heyting(n, meet, imp.tolist(), a.top)
    assert check_semi_heyting(a.with_ops(imp=imp)).passed == expected
    found = {str(b.op("imp").tolist()) for b in CORPUS if b.lattice == a.lattice}
    assert (str(imp.tolist()) in found) == expected


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
def test_checker_agrees_with_oracle_on_random_tables(cells):
    lat = chain(3)
    imp = np.array(cells).reshape(3, 3)
    a = AlgebraTable(lat, {"imp": imp}, Signature("sh"))
    meet, _ = oracles.chain_ops(3)
    assert check_semi_heyting(a).passed == oracles.is_semi_heyting(3, meet, imp.tolist(), 2)
    assert check_heyting(a).passed == oracles.is_heyting(3, meet, imp.tolist(), 2)


# -------------------------------------------------------------- property suites

@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS))
def test_sh2_smoke(a):
    n = len(a)
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    assert np.array_equal(a.lattice.meet[x, a.op("imp")[x, y]], a.lattice.meet[x, y])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS))
def test_derived_operations_land_in_subvarieties(a):
    from twistalg.varieties import heyting_reduct

    assert check_heyting(heyting_reduct(a)).passed
    assert check_nelson(nelson_reduct(vk(a).algebra)).passed
    assert check_pseudocomplemented(with_pseudocomplement(a)).passed


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS))
def test_pseudocomplement_laws(a):
    n = len(a)
    meet, join, le = a.lattice.meet, a.lattice.join, a.lattice.le
    star = [int(pseudocomplement(a, x)) for x in range(n)]
    for x in range(n):
        assert meet[x, star[x]] == a.bottom
        for y in range(n):
            if meet[x, y] == a.bottom:
                assert le(y, star[x])
            assert star[join[x, y]] == meet[star[x], star[y]]
    assert star[a.bottom] == a.top and star[a.top] == a.bottom


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS + (catalog.grid9_quotient(),)))
def test_congruence_via_weak_implication(h):
    a = vk(h).algebra
    imp, one = a.op("imp"), a.one
    nimp = weak_implication(a).op("nimp")
    strong = (imp == one) & (imp.T == one)
    weak = (nimp == one) & (nimp.T == one)
    assert np.array_equal(strong, weak)
    n = len(a)
    for x, y, z in product(range(n), repeat=3):
        if nimp[x, y] == one and nimp[y, z] == one:
            assert nimp[x, z] == one
