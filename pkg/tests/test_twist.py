import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg import catalog
from twistalg.catequiv import find_isomorphism, h_map
from twistalg.errors import MultipleCenters, NotACongruence, NotAnIFilter, SignatureMismatch
from twistalg.filters import enumerate_ifilters, format_set
from twistalg.fileformat import serialize_algebra
from twistalg.twist import center, nhf, pair_name, quotient_dsh, quotient_sh, vk, vk_dsh
from twistalg.varieties import (
    check_dsn,
    check_semi_nelson,
    derived_heyting_arrow,
    enumerate_dsh,
    pseudocomplement_table,
    weak_implication,
)

CORPUS = catalog.corpus_sh()
H_IMP = [
    ["[1]", "[e]", "[1]", "[e]"],
    ["[e]", "[1]", "[e]", "[1]"],
    ["[d]", "[0]", "[1]", "[e]"],
    ["[0]", "[d]", "[e]", "[1]"],
]


def pairs_by_name(tw):
    return [pair_name(tw.base, p) for p in tw.pairs]


def test_vk_H_pairs():
    tw = vk(catalog.grid9_quotient())
    assert pairs_by_name(tw) == [
        "([0],[0])", "([0],[d])", "([0],[e])", "([0],[1])",
        "([d],[0])", "([d],[e])", "([e],[0])", "([e],[d])", "([1],[0])",
    ]
    assert find_isomorphism(tw.algebra, catalog.grid9()) is not None


def test_vk_trivial_and_two_chain():
    assert vk(catalog.trivial_sh()).pairs == ((0, 0),)
    for a in (catalog.skew2(), catalog.boolean2()):
        assert vk(a).pairs == ((0, 0), (0, 1), (1, 0))


def test_vk_skew2_serialization():
    text = serialize_algebra(vk(catalog.skew2()).algebra)
    assert text.splitlines()[:2] == ["algebra Vk(skew2)", "elements (0,0) (0,1) (1,0)"]
    assert "const one (1,0)" in text


def test_nhf_E():
    tw = nhf(catalog.grid9_quotient(), "[e],[1]")
    assert pairs_by_name(tw) == ["([0],[e])", "([0],[1])", "([d],[e])", "([e],[0])", "([e],[d])", "([1],[0])"]
    assert find_isomorphism(tw.algebra, catalog.grid9_sub()) is not None


def test_nhf_full_is_vk():
    h = catalog.grid9_quotient()
    assert nhf(h, range(4)).algebra == vk(h).algebra


def test_nhf_rejects_non_ifilter():
    with pytest.raises(NotAnIFilter) as info:
        nhf(catalog.skew2(), "1")
    assert info.value.filterset.if3_witness == (1, 0, 0)


def test_twist_needs_semi_heyting_base():
    with pytest.raises(SignatureMismatch):
        vk(catalog.grid9())


def test_quotient_A():
    q = quotient_sh(catalog.grid9())
    el = catalog.grid9().elements
    assert [format_set(catalog.grid9().lattice, c) for c in q.classes] == ["0,a,b,c", "d,f", "e,g", "1"]
    assert q.algebra.elements == ("[0]", "[d]", "[e]", "[1]")
    names = q.algebra.elements
    assert [[names[v] for v in row] for row in q.algebra.op("imp")] == H_IMP
    assert el[q.representative(1)] == "d"


def test_quotient_S():
    s = catalog.grid9_sub()
    q = quotient_sh(s)
    assert [format_set(s.lattice, c) for c in q.classes] == ["0,a", "d", "e,g", "1"]
    names = q.algebra.elements
    assert [[names[v] for v in row] for row in q.algebra.op("imp")] == H_IMP


def test_quotient_trivial():
    assert len(quotient_sh(catalog.trivial_sn()).classes) == 1


def _chain3_sn(imp):
    from twistalg.finlat import chain
    from twistalg.varieties import make_algebra

    return make_algebra(chain(3), {"imp": imp, "neg": ["2", "1", "0"]}, "sn", {"one": "2"})


def test_quotient_rejects_non_transitive_relation():
    a = _chain3_sn([["2", "2", "0"], ["2", "2", "2"], ["0", "2", "2"]])
    with pytest.raises(NotACongruence, match="transitive"):
        quotient_sh(a)


def test_quotient_rejects_relation_incompatible_with_meet():
    # 0 and 2 are identified but 1 is not
    a = _chain3_sn([["2", "0", "2"], ["0", "2", "0"], ["2", "0", "2"]])
    with pytest.raises(NotACongruence, match="meet"):
        quotient_sh(a)


def test_center():
    a = catalog.grid9()
    assert a.elements[center(a)] == "c"
    assert center(catalog.grid9_sub()) is None


def test_multiple_centers():
    a = catalog.grid9()
    neg = a.op("neg").copy()
    neg[a.index("d")], neg[a.index("e")] = a.index("d"), a.index("e")
    with pytest.raises(MultipleCenters):
        center(a.with_ops(neg=neg))


def with_star(h):
    return h.with_ops(signature="dsh", tilde=pseudocomplement_table(h))


def test_vk_dsh_two_chain():
    d = with_star(catalog.skew2())
    tw = vk_dsh(d)
    a = tw.algebra
    top = a.one
    assert tw.pair_of(a.op("prime")[top]) == (0, 0)
    assert check_dsn(a).passed
    assert find_isomorphism(quotient_dsh(a).algebra, d) is not None


def test_vk_dsh_trivial():
    d = catalog.trivial_sh().with_ops(signature="dsh", tilde=[0])
    tw = vk_dsh(d)
    assert tw.algebra.op("prime").tolist() == [0]
    assert len(quotient_dsh(tw.algebra).classes) == 1


def test_vk_dsh_of_H_every_dual_hemimorphism():
    h = catalog.grid9_quotient()
    found = list(enumerate_dsh(h))
    assert found
    for d in found:
        tw = vk_dsh(d)
        assert check_dsn(tw.algebra).passed
        assert find_isomorphism(quotient_dsh(tw.algebra).algebra, d) is not None


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS + (catalog.grid9_quotient(),)))
def test_twist_invariants(h):
    tw = vk(h)
    a = tw.algebra
    meet, join, imp = h.lattice.meet, h.lattice.join, h.op("imp")
    himp = derived_heyting_arrow(h).op("himp")
    nimp = weak_implication(a).op("nimp")
    for i, (p, q) in enumerate(tw.pairs):
        assert meet[p, q] == h.bottom
        assert tw.pair_of(a.op("neg")[i]) == (q, p)
        for j, (r, s) in enumerate(tw.pairs):
            assert tw.pair_of(a.lattice.meet[i, j]) == (meet[p, r], join[q, s])
            assert tw.pair_of(a.lattice.join[i, j]) == (join[p, r], meet[q, s])
            assert tw.pair_of(a.op("imp")[i, j]) == (imp[p, r], meet[p, s])
            # weak implication of the twist uses the Heyting arrow
            assert tw.pair_of(nimp[i, j]) == (himp[p, r], meet[p, s])
    assert check_semi_nelson(a).passed


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS + (catalog.grid9_quotient(),)))
def test_nhf_is_subalgebra_of_vk(h):
    full = vk(h)
    for f in enumerate_ifilters(h):
        tw = nhf(h, f.members)
        assert set(tw.pairs) <= set(full.pairs)
        for i, p in enumerate(tw.pairs):
            assert h.lattice.join[p] in f.members
            big = full.index_of(p)
            assert tw.pair_of(tw.algebra.op("neg")[i]) == full.pair_of(full.algebra.op("neg")[big])
            for j, q in enumerate(tw.pairs):
                assert tw.pair_of(tw.algebra.op("imp")[i, j]) == full.pair_of(full.algebra.op("imp")[big, full.index_of(q)])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS + (catalog.grid9_quotient(),)))
def test_h_is_injective_into_full_twist(h):
    for f in enumerate_ifilters(h):
        a = nhf(h, f.members).algebra
        m = h_map(a)
        assert m.certified and m.injective


DSH_SAMPLE = tuple(d for a in CORPUS[:40] for d in enumerate_dsh(a))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(DSH_SAMPLE))
def test_dsn_center_and_h_bijection(d):
    a = vk_dsh(d).algebra
    c = center(a)
    assert c == a.op("prime")[a.one]
    assert a.op("neg")[c] == c
    m = h_map(a, dual=True)
    assert m.certified and m.bijective
