"""Free chain complexes with integer boundary matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._collapse import reduce_cells
from .linalg import (
    Coefficients,
    HomologyGroup,
    IntMatrix,
    NonComposableError,
    homology_from_ranks,
    rank_mod_p,
    smith_normal_form,
)


@dataclass(frozen=True, eq=False)
class FreeChainComplex:
    """Ordered generators per degree and differentials ``d_n: C_n -> C_{n-1}``.

    ``degrees`` maps a degree to its generator labels (any sequence; the
    builders use numpy arrays of bitmasks). Degrees without generators may be
    left out; a missing differential is the zero map.
    """

    degrees: dict[int, Sequence]
    boundaries: dict[int, IntMatrix]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for n, d in self.boundaries.items():
            want = (self.rank(n - 1), self.rank(n))
            if d.shape != want:
                raise NonComposableError(f"d_{n} has shape {d.shape}, expected {want}")

    def rank(self, n: int) -> int:
        g = self.degrees.get(n)
        return 0 if g is None else len(g)

    @property
    def size(self) -> int:
        return sum(len(g) for g in self.degrees.values())

    @property
    def degree_range(self) -> range:
        ks = [n for n, g in self.degrees.items() if len(g)]
        return range(min(ks), max(ks) + 1) if ks else range(0)

    def differential(self, n: int) -> IntMatrix:
        d = self.boundaries.get(n)
        return d if d is not None else IntMatrix.zeros(self.rank(n - 1), self.rank(n))

    def compositions(self):
        """Yield ``(n, d_{n-1} @ d_n)`` for every pair of adjacent nonzero maps."""
        for n in sorted(self.boundaries):
            if n - 1 in self.boundaries:
                yield n, self.boundaries[n - 1] @ self.boundaries[n]

    def is_chain_complex(self) -> bool:
        if "dd" not in self._cache:
            self._cache["dd"] = all(p.is_zero() for _, p in self.compositions())
        return self._cache["dd"]

    def check(self) -> None:
        if not self.is_chain_complex():
            bad = [n for n, p in self.compositions() if not p.is_zero()]
            raise NonComposableError(f"d_{bad[0] - 1} @ d_{bad[0]} is not zero")

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * len(g) for n, g in self.degrees.items())

    def dual(self) -> "FreeChainComplex":
        """Cochain complex re-indexed as a chain complex: ``C^k`` sits in degree ``-k``.

        Its differential out of degree ``-k`` is the transpose of ``d_{k+1}``,
        so ``H_{-k}`` of the result is ``H^k`` of this complex.
        """
        degs = {-n: g for n, g in self.degrees.items()}
        bds = {-(n - 1): d.T for n, d in self.boundaries.items()}
        return FreeChainComplex(degs, bds)

    def reduced(self) -> "FreeChainComplex":
        """Homotopy-equivalent subquotient after unit collapses and coreductions."""
        if "reduced" in self._cache:
            return self._cache["reduced"]
        self.check()
        out = _reduce(self)
        out._cache["dd"] = True
        self._cache["reduced"] = out
        return out

    def homology(self, coeffs: Coefficients) -> dict[int, HomologyGroup]:
        """Nonzero homology groups by degree."""
        key = ("H", coeffs)
        if key in self._cache:
            return self._cache[key]
        R = self.reduced()
        if coeffs.kind == "F":
            ranks = {n: rank_mod_p(d, coeffs.p) for n, d in R.boundaries.items()}
            factors = {n: [1] * r for n, r in ranks.items()}
        else:
            snf = {n: smith_normal_form(d) for n, d in R.boundaries.items()}
            ranks = {n: s[1] for n, s in snf.items()}
            factors = {n: list(s[0]) for n, s in snf.items()}
        out = {}
        for n in R.degree_range:
            H = homology_from_ranks(R.rank(n), ranks.get(n, 0), factors.get(n + 1, []), coeffs)
            if not H.is_zero:
                out[n] = H
        self._cache[key] = out
        return out

    def homology_at(self, n: int, coeffs: Coefficients) -> HomologyGroup:
        return self.homology(coeffs).get(n, HomologyGroup())


def _reduce(C: FreeChainComplex) -> FreeChainComplex:
    degs = sorted(n for n in C.degrees if C.rank(n))
    if not degs:
        return FreeChainComplex({}, {})
    offset = {}
    total = 0
    for n in degs:
        offset[n] = total
        total += C.rank(n)
    src, dst, unit = [], [], []
    for n, d in C.boundaries.items():
        if d.nnz == 0:
            continue
        src.append(d.cols + offset[n])
        dst.append(d.rows + offset[n - 1])
        v = d.vals
        unit.append(np.array([abs(int(x)) == 1 for x in v], dtype=np.bool_) if v.dtype == object else np.abs(v) == 1)
    if src:
        src_a, dst_a, unit_a = np.concatenate(src), np.concatenate(dst), np.concatenate(unit)
    else:
        src_a = dst_a = np.zeros(0, dtype=np.int64)
        unit_a = np.zeros(0, dtype=np.bool_)
    bptr, bidx, bunit = _csr(total, src_a, dst_a, unit_a)
    cptr, cidx, cunit = _csr(total, dst_a, src_a, unit_a)
    alive = reduce_cells(total, bptr, bidx, bunit, cptr, cidx, cunit)

    new_degs, keep_idx, remap = {}, {}, {}
    for n in degs:
        local = np.flatnonzero(alive[offset[n] : offset[n] + C.rank(n)])
        if len(local):
            gens = C.degrees[n]
            new_degs[n] = gens[local] if isinstance(gens, np.ndarray) else [gens[i] for i in local]
            keep_idx[n] = local
            m = np.full(C.rank(n), -1, dtype=np.int64)
            m[local] = np.arange(len(local))
            remap[n] = m
    new_bds = {}
    for n, d in C.boundaries.items():
        if n not in remap or n - 1 not in remap or d.nnz == 0:
            continue
        r, c = remap[n - 1][d.rows], remap[n][d.cols]
        ok = (r >= 0) & (c >= 0)
        if ok.any():
            new_bds[n] = IntMatrix((len(keep_idx[n - 1]), len(keep_idx[n])), r[ok], c[ok], d.vals[ok])
    return FreeChainComplex(new_degs, new_bds)


def _csr(n: int, src: np.ndarray, dst: np.ndarray, flag: np.ndarray):
    order = np.argsort(src, kind="stable")
    counts = np.bincount(src, minlength=n)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=ptr[1:])
    return ptr, dst[order].astype(np.int64), flag[order]
