"""Exterior-algebra chain complexes attached to a simplicial complement.

A monomial ``tau_{i_1} ... tau_{i_n}`` (ascending indices) is encoded as a
bitmask over positions in the generator list; its total set is the union of
the referenced vertex sets. Three complexes are built here:

* ``build_complement_complex`` -- monomials with total set exactly ``J``;
  a factor may be deleted only if the total set survives.
* ``build_full_exterior_complex`` -- all monomials, every deletion allowed.
* ``build_nerve_complex`` -- index sets whose union is not ``[m]``, as a
  reduced simplicial chain complex (a size-``n`` set sits in degree ``n - 1``).
"""

from __future__ import annotations

import contextlib

import numpy as np

from .chain import FreeChainComplex
from .complexes import Complement, format_set, full_mask, is_subset
from .linalg import IntMatrix

DEFAULT_MAX_GENS = 24


class ComplexTooLargeError(RuntimeError):
    """More complement generators than the builder cap allows."""

    def __init__(self, J: int, count: int, cap: int):
        super().__init__(f"J = {format_set(J)} has |P_J| = {count} generators, over the cap of {cap}")
        self.J, self.count, self.cap = J, count, cap


# test hook: when set, one entry of the top nonzero differential is negated
_fault = {"active": False}


@contextlib.contextmanager
def injected_sign_fault():
    """Negate one boundary coefficient in every complement complex built inside."""
    _fault["active"] = True
    try:
        yield
    finally:
        _fault["active"] = False


def subset_unions(sets) -> np.ndarray:
    """``out[mask]`` is the union of ``sets[i]`` over the bits ``i`` of ``mask``."""
    out = np.zeros(1 << len(sets), dtype=np.int64)
    for b, t in enumerate(sets):
        out[1 << b : 1 << (b + 1)] = out[: 1 << b] | t
    return out


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def generators_within(P: Complement, J: int) -> tuple[int, ...]:
    return tuple(t for t in P.generators if is_subset(t, J))


def build_complement_complex(P: Complement, J: int, max_gens: int = DEFAULT_MAX_GENS) -> FreeChainComplex:
    """The ``J``-graded piece of the exterior algebra on ``P`` with differential ``d``.

    Generators in degree ``n`` are monomials of length ``n`` whose total set is
    ``J``. Only complement members inside ``J`` can occur, so the monomials are
    indexed by positions in that sublist (original order kept).
    """
    sub = generators_within(P, J)
    if len(sub) > max_gens:
        raise ComplexTooLargeError(J, len(sub), max_gens)
    unions = subset_unions(sub)
    is_cell = unions == J
    cells = np.flatnonzero(is_cell).astype(np.int64)
    deg = _popcount(cells)
    degrees = {int(n): cells[deg == n] for n in np.unique(deg)}
    boundaries = {}
    for n, gens in degrees.items():
        if n == 0 or n - 1 not in degrees:
            continue
        rows, cols, vals = [], [], []
        targets = degrees[n - 1]
        for j in range(len(sub)):
            bit = np.int64(1) << j
            col = np.flatnonzero(gens & bit)
            if not len(col):
                continue
            face = gens[col] ^ bit
            # delta_j: the deletion has to keep the total set
            keep = is_cell[face]
            col, face = col[keep], face[keep]
            # position of factor j among the factors, counted from zero
            pos = _popcount(gens[col] & (bit - 1))
            rows.append(np.searchsorted(targets, face))
            cols.append(col)
            vals.append(np.where(pos % 2 == 0, 1, -1))
        if rows:
            boundaries[n] = IntMatrix((len(targets), len(gens)), np.concatenate(rows), np.concatenate(cols), np.concatenate(vals))
    if _fault["active"] and boundaries:
        top = max(n for n, d in boundaries.items() if d.nnz)
        d = boundaries[top]
        vals = np.array(d.vals)
        vals[0] = -vals[0]
        boundaries[top] = IntMatrix(d.shape, d.rows, d.cols, vals)
    return FreeChainComplex(degrees, boundaries)


def build_full_exterior_complex(P: Complement) -> FreeChainComplex:
    """All monomials on ``P`` with the plain alternating-deletion differential."""
    r = len(P)
    cells = np.arange(1 << r, dtype=np.int64)
    deg = _popcount(cells)
    degrees = {n: cells[deg == n] for n in range(r + 1)}
    boundaries = {}
    for n in range(1, r + 1):
        gens, targets = degrees[n], degrees[n - 1]
        rows, cols, vals = [], [], []
        for j in range(r):
            bit = np.int64(1) << j
            col = np.flatnonzero(gens & bit)
            pos = _popcount(gens[col] & (bit - 1))
            rows.append(np.searchsorted(targets, gens[col] ^ bit))
            cols.append(col)
            vals.append(1 - 2 * (pos % 2))
        boundaries[n] = IntMatrix((len(targets), len(gens)), np.concatenate(rows), np.concatenate(cols), np.concatenate(vals))
    return FreeChainComplex(degrees, boundaries)


def nerve_simplices(P: Complement) -> np.ndarray:
    """Index sets (bitmasks over generator positions) whose union is not ``[m]``."""
    unions = subset_unions(P.generators)
    return np.flatnonzero(unions != full_mask(P.parent_m)).astype(np.int64)


def build_nerve_complex(P: Complement) -> FreeChainComplex:
    """Reduced simplicial chains of the nerve, empty simplex in degree -1."""
    simplices = nerve_simplices(P)
    dim = _popcount(simplices) - 1
    degrees = {int(k): simplices[dim == k] for k in np.unique(dim)}
    boundaries = {}
    for k, gens in degrees.items():
        if k - 1 not in degrees:
            continue
        targets = degrees[k - 1]
        rows, cols, vals = [], [], []
        for j in range(len(P)):
            bit = np.int64(1) << j
            col = np.flatnonzero(gens & bit)
            if not len(col):
                continue
            face = gens[col] ^ bit
            pos = _popcount(gens[col] & (bit - 1))
            rows.append(np.searchsorted(targets, face))
            cols.append(col)
            vals.append(1 - 2 * (pos % 2))
        boundaries[k] = IntMatrix((len(targets), len(gens)), np.concatenate(rows), np.concatenate(cols), np.concatenate(vals))
    return FreeChainComplex(degrees, boundaries)


def monomial_labels(P: Complement, J: int | None, cell: int) -> tuple[int, ...]:
    """Vertex sets of the factors of a monomial, in ascending index order."""
    gens = P.generators if J is None else generators_within(P, J)
    return tuple(gens[j] for j in range(len(gens)) if cell >> j & 1)
