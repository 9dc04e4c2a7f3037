import pytest
from hypothesis import given, settings

from conftest import CYCLE4, PENTAGON, RP2
from oracles import faces_from_facets, hochster_betti_q, poincare_from_table
from strategies import complexes
from srtor.complement import ComplexTooLargeError, injected_sign_fault
from srtor.complexes import (
    SimplicialComplex,
    full_mask,
    full_subcomplex,
    maximal_complement,
    members,
    minimal_complement,
    to_mask,
)
from srtor.linalg import GF, QQ, ZZ, HomologyGroup
from srtor.simplicial import reduced_euler_characteristic
from srtor.tor import (
    BettiTable,
    Polynomial,
    betti_table,
    iter_table_diff,
    poincare_polynomial,
    tor_via_complement,
    tor_via_hochster,
    tor_via_nerve,
    verify,
)

C4 = SimplicialComplex.from_facets(4, CYCLE4)
C5 = SimplicialComplex.from_facets(5, PENTAGON)
RP2_K = SimplicialComplex.from_facets(6, RP2)
TWO_POINTS = SimplicialComplex.from_facets(2, [[1], [2]])
k1 = HomologyGroup(1)


def test_tor_via_complement_examples():
    P = minimal_complement(C4)
    assert tor_via_complement(C4, P, 1, to_mask([1, 3]), QQ) == k1
    assert tor_via_complement(C4, P, 2, full_mask(4), ZZ) == k1
    for K in (C4, C5, RP2_K, SimplicialComplex.simplex(3)):
        assert tor_via_complement(K, minimal_complement(K), 0, 0, ZZ) == k1


def test_tor_via_hochster_examples():
    assert tor_via_hochster(C4, 1, to_mask([2, 4]), QQ) == k1
    assert tor_via_hochster(C5, 3, full_mask(5), QQ) == k1
    assert tor_via_hochster(RP2_K, 3, full_mask(6), ZZ) == HomologyGroup(0, (2,))


def test_tor_via_nerve_examples():
    assert tor_via_nerve(TWO_POINTS, minimal_complement(TWO_POINTS), 1, QQ) == k1
    assert tor_via_nerve(C4, minimal_complement(C4), 2, QQ) == k1
    bd = SimplicialComplex.from_facets(3, [[1, 2], [1, 3], [2, 3]])
    assert tor_via_nerve(bd, minimal_complement(bd), 1, ZZ) == k1
    with pytest.raises(ValueError):
        tor_via_nerve(SimplicialComplex.simplex(2), minimal_complement(SimplicialComplex.simplex(2)), 0, QQ)


def _ranks(table):
    return {(i, members(J)): r for (i, J), r in table.ranks().items()}


@pytest.mark.parametrize("route", ["complement", "hochster"])
def test_betti_table_examples(route):
    t = betti_table(C4, QQ, route)
    assert _ranks(t) == {(0, ()): 1, (1, (1, 3)): 1, (1, (2, 4)): 1, (2, (1, 2, 3, 4)): 1}
    assert str(poincare_polynomial(t)) == "1 + 2t^3 + t^6"
    s = betti_table(SimplicialComplex.simplex(3), QQ, route)
    assert _ranks(s) == {(0, ()): 1}
    assert str(poincare_polynomial(s)) == "1"
    p = betti_table(C5, QQ, route)
    assert p.by_total_degree() == {0: 1, 3: 5, 4: 5, 7: 1}
    assert str(poincare_polynomial(p)) == "1 + 5t^3 + 5t^4 + t^7"


def test_tables_agree_with_brute_force_oracle():
    for facets, m in ((CYCLE4, 4), (PENTAGON, 5), (RP2, 6)):
        K = SimplicialComplex.from_facets(m, facets)
        want = hochster_betti_q(m, faces_from_facets(facets))
        got = {(i, frozenset(members(J))): r for (i, J), r in betti_table(K, QQ).ranks().items()}
        assert got == want
        assert poincare_polynomial(betti_table(K, QQ)).coeffs == poincare_from_table(want)


def test_rp2_torsion_and_mod2_classes():
    top = full_mask(6)
    tz = betti_table(RP2_K, ZZ, "complement")
    assert tz[(3, top)] == HomologyGroup(0, (2,))
    assert betti_table(RP2_K, ZZ, "hochster")[(3, top)] == HomologyGroup(0, (2,))
    tq, t2 = betti_table(RP2_K, QQ), betti_table(RP2_K, GF(2))
    assert t2[(3, top)].free_rank == tq[(3, top)].free_rank + 1
    assert t2[(4, top)].free_rank == tq[(4, top)].free_rank + 1
    with pytest.raises(ValueError):
        poincare_polynomial(tz)


def test_betti_table_rejects_torsion_over_field_and_drops_zeros():
    with pytest.raises(ValueError):
        BettiTable(2, QQ, {(1, 3): HomologyGroup(0, (2,))})
    t = BettiTable(2, QQ, {(1, 3): HomologyGroup(0), (0, 0): k1})
    assert len(t) == 1


def test_betti_table_refuses_oversize_complement():
    K = SimplicialComplex.from_facets(6, [[i, i % 6 + 1] for i in range(1, 7)])
    with pytest.raises(ComplexTooLargeError) as info:
        betti_table(K, QQ, "complement", complement=maximal_complement(K))
    assert info.value.J == full_mask(6) and info.value.count == 51


def test_polynomial_rendering():
    assert str(Polynomial({0: 1, 1: -2, 3: 1})) == "1 - 2t + t^3"
    assert str(Polynomial({})) == "0"
    assert Polynomial({0: 1, 3: 2})(2) == 17


def test_verify_examples():
    r = verify(C4, None, (QQ, ZZ, GF(2)))
    assert r.passed and r.verdict == "pass"
    checks = {c.check for c in r.comparisons}
    assert checks == {"hochster", "nerve", "maximal"}
    r = verify(RP2_K, None, (ZZ, GF(2), GF(3)))
    assert r.passed
    top = [c for c in r.comparisons if c.check == "hochster" and c.J == full_mask(6) and c.coeffs == ZZ and c.i == 3]
    assert top[0].results["complement"] == top[0].results["hochster"] == HomologyGroup(0, (2,))
    assert any("maximal complement" in s for s in r.skipped)
    r = verify(SimplicialComplex.simplex(3), None, (ZZ,))
    assert r.passed
    assert [(c.i, c.J) for c in r.comparisons] == [(0, 0)]


def test_verify_detects_injected_fault():
    with injected_sign_fault():
        r = verify(RP2_K, None, (ZZ,))
    assert not r.passed
    assert all(c.J for c in r.mismatches())


def test_iter_table_diff():
    a = betti_table(C4, QQ)
    b = betti_table(C5, QQ)
    assert list(iter_table_diff(a, a)) == []
    assert list(iter_table_diff(a, b))


@settings(max_examples=40)
@given(complexes(max_m=6))
def test_routes_agree_on_random_complexes(data):
    K, _ = data
    for c in (ZZ, GF(2)):
        try:
            a = betti_table(K, c, "complement")
        except ComplexTooLargeError:
            return
        assert a.entries == betti_table(K, c, "hochster").entries


@settings(max_examples=40)
@given(complexes(max_m=6))
def test_degree_bounds_and_euler(data):
    K, _ = data
    t = betti_table(K, QQ, "hochster")
    if not K.is_simplex:
        assert t[(0, 0)] == k1
    for (i, J), H in t.entries.items():
        assert i >= 0
        assert J.bit_count() - i - 1 <= full_subcomplex(K, J).dim
    for J in range(full_mask(K.m) + 1):
        alt = sum((-1) ** i * t[(i, J)].free_rank for i in range(J.bit_count() + 1))
        assert alt == (-1) ** (J.bit_count() - 1) * reduced_euler_characteristic(full_subcomplex(K, J))
