"""Reduced simplicial (co)homology of abstract simplicial complexes."""

from __future__ import annotations

from .chain import FreeChainComplex
from .complexes import SimplicialComplex, members
from .linalg import Coefficients, HomologyGroup, IntMatrix


def oriented_basis(K: SimplicialComplex) -> dict[int, list[tuple[int, ...]]]:
    """Faces by dimension as ascending vertex tuples, lexicographically sorted.

    Dimension ``-1`` holds the empty simplex.
    """
    basis: dict[int, list[tuple[int, ...]]] = {}
    for f in K.faces:
        vs = members(f)
        basis.setdefault(len(vs) - 1, []).append(vs)
    for k in basis:
        basis[k].sort()
    return basis


def reduced_chain_complex(K: SimplicialComplex) -> FreeChainComplex:
    """Augmented simplicial chain complex with the usual alternating signs."""
    basis = oriented_basis(K)
    boundaries = {}
    for k, simplices in basis.items():
        if k < 0:
            continue
        index = {s: i for i, s in enumerate(basis[k - 1])}
        triples = []
        for col, s in enumerate(simplices):
            for j in range(len(s)):
                triples.append((index[s[:j] + s[j + 1 :]], col, (-1) ** j))
        boundaries[k] = IntMatrix.from_triples((len(basis[k - 1]), len(simplices)), triples)
    return FreeChainComplex(basis, boundaries)


def reduced_homology(K: SimplicialComplex, coeffs: Coefficients) -> dict[int, HomologyGroup]:
    return reduced_chain_complex(K).homology(coeffs)


def reduced_cohomology_groups(K: SimplicialComplex, coeffs: Coefficients) -> dict[int, HomologyGroup]:
    """All nonzero reduced cohomology groups, keyed by cohomological degree."""
    dual = reduced_chain_complex(K).dual()
    return {-n: H for n, H in dual.homology(coeffs).items()}


def reduced_cohomology(K: SimplicialComplex, k: int, coeffs: Coefficients) -> HomologyGroup:
    return reduced_cohomology_groups(K, coeffs).get(k, HomologyGroup())


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    """``sum_k (-1)^k f_k`` over all faces, the empty one counted in degree -1."""
    return sum((-1) ** (f.bit_count() - 1) for f in K.faces)
