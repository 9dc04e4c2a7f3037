from hypothesis import given, settings

from conftest import CYCLE4, RP2
from oracles import faces_from_facets, reduced_betti, reduced_integral_homology
from strategies import complexes
from srtor.complexes import SimplicialComplex
from srtor.corpus import corpus
from srtor.linalg import GF, QQ, ZZ, HomologyGroup
from srtor.simplicial import (
    oriented_basis,
    reduced_chain_complex,
    reduced_cohomology,
    reduced_cohomology_groups,
    reduced_euler_characteristic,
    reduced_homology,
)

EMPTY = SimplicialComplex.from_facets(3, [])
POINT = SimplicialComplex.from_facets(1, [[1]])
C4 = SimplicialComplex.from_facets(4, CYCLE4)
RP2_K = SimplicialComplex.from_facets(6, RP2)


def test_chain_complex_examples():
    C = reduced_chain_complex(EMPTY)
    assert {k: C.rank(k) for k in C.degrees} == {-1: 1}
    assert reduced_homology(EMPTY, ZZ) == {-1: HomologyGroup(1)}
    assert reduced_homology(POINT, ZZ) == {}
    assert reduced_homology(C4, QQ) == {1: HomologyGroup(1)}


def test_cohomology_examples():
    for c in (ZZ, QQ, GF(2)):
        assert reduced_cohomology(EMPTY, -1, c) == HomologyGroup(1)
    assert reduced_cohomology(RP2_K, 2, ZZ) == HomologyGroup(0, (2,))
    assert reduced_cohomology(RP2_K, 1, GF(2)) == HomologyGroup(1)
    assert reduced_cohomology(RP2_K, 1, ZZ) == HomologyGroup(0)
    assert reduced_cohomology(RP2_K, 7, ZZ) == HomologyGroup(0)


def test_oriented_basis_is_closed_and_sorted():
    basis = oriented_basis(RP2_K)
    assert [len(basis[k]) for k in range(-1, 3)] == [1, 6, 15, 10]
    for k in range(1, 3):
        lower = set(basis[k - 1])
        for s in basis[k]:
            assert all(s[:j] + s[j + 1:] in lower for j in range(len(s)))
        assert basis[k] == sorted(basis[k])


def test_ghost_vertices_contribute_nothing():
    K = SimplicialComplex.from_facets(5, [[1, 2], [2, 3], [1, 3]])
    assert reduced_homology(K, ZZ) == {1: HomologyGroup(1)}


def test_euler_characteristic_on_corpus():
    for name, K in corpus().items():
        C = reduced_chain_complex(K)
        chi = sum((-1) ** k * C.rank(k) for k in C.degrees)
        assert chi == reduced_euler_characteristic(K), name
        H = reduced_homology(K, QQ)
        assert chi == sum((-1) ** k * g.free_rank for k, g in H.items()), name


@given(complexes(max_m=6))
def test_rational_homology_matches_brute_force(data):
    K, facets = data
    faces = faces_from_facets(facets)
    assert {k: H.free_rank for k, H in reduced_homology(K, QQ).items()} == reduced_betti(faces)
    assert {k: H.free_rank for k, H in reduced_homology(K, GF(2)).items()} == reduced_betti(faces, 2)


@settings(max_examples=40)
@given(complexes(max_m=6))
def test_integral_homology_matches_brute_force(data):
    K, facets = data
    got = {k: (H.free_rank, H.torsion) for k, H in reduced_homology(K, ZZ).items()}
    assert got == reduced_integral_homology(faces_from_facets(facets))


@given(complexes(max_m=7))
def test_rational_cohomology_ranks_equal_homology(data):
    K, _ = data
    h = {k: H.free_rank for k, H in reduced_homology(K, QQ).items()}
    c = {k: H.free_rank for k, H in reduced_cohomology_groups(K, QQ).items()}
    assert h == c


@given(complexes(max_m=7))
def test_integral_cohomology_torsion_shifts_up(data):
    K, _ = data
    h = reduced_homology(K, ZZ)
    c = reduced_cohomology_groups(K, ZZ)
    for k in set(h) | set(c):
        H_k = h.get(k, HomologyGroup())
        H_below = h.get(k - 1, HomologyGroup())
        assert c.get(k, HomologyGroup()) == HomologyGroup(H_k.free_rank, H_below.torsion)
