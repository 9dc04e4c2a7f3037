"""Exact linear algebra over Z, Q and F_p.

Matrices are sparse COO triples held in numpy arrays. Anything that can grow
(Smith normal form, elimination) runs on Python ints, so there is no overflow
path regardless of how the input entries are stored.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp


class NonComposableError(ValueError):
    """Raised when ``d_out @ d_in`` is nonzero or the shapes do not chain."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Coefficients:
    """Coefficient ring: ``Z``, ``Q`` or the prime field ``F_p``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "F" and not _is_prime(self.p):
            raise ValueError(f"F_p needs a prime p, got {self.p}")
        if self.kind != "F" and self.p != 0:
            raise ValueError("only prime fields carry a characteristic")

    @classmethod
    def parse(cls, text: str) -> "Coefficients":
        """Accepts ``Z``, ``Q``, ``Fp:<p>`` and the shorthand ``F<p>``."""
        t = text.strip()
        if t in ("Z", "ZZ"):
            return ZZ
        if t in ("Q", "QQ"):
            return QQ
        if t.startswith("Fp:"):
            num = t[3:]
        elif t.startswith("F") and t[1:].isdigit():
            num = t[1:]
        else:
            raise ValueError(f"cannot parse coefficients {text!r}; use Z, Q or Fp:<p>")
        if not num.isdigit():
            raise ValueError(f"cannot parse coefficients {text!r}; use Z, Q or Fp:<p>")
        return cls("F", int(num))

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"Fp:{self.p}" if self.kind == "F" else self.kind


ZZ = Coefficients("Z")
QQ = Coefficients("Q")


def GF(p: int) -> Coefficients:
    return Coefficients("F", p)


class IntMatrix:
    """Immutable sparse integer matrix.

    Entries are canonicalised on construction: duplicates summed, zeros
    dropped, column-major order. Values stay ``int64`` when they fit and
    fall back to Python ints (``object`` arrays) otherwise.
    """

    __slots__ = ("shape", "rows", "cols", "vals")

    def __init__(self, shape: tuple[int, int], rows=(), cols=(), vals=()):
        nr, nc = int(shape[0]), int(shape[1])
        if nr < 0 or nc < 0:
            raise ValueError(f"bad shape {shape}")
        rows = np.asarray(rows, dtype=np.int64).reshape(-1)
        cols = np.asarray(cols, dtype=np.int64).reshape(-1)
        vals = _as_int_array(vals)
        if not (len(rows) == len(cols) == len(vals)):
            raise ValueError("rows, cols and vals must have equal length")
        if len(rows) and (rows.min() < 0 or rows.max() >= nr or cols.min() < 0 or cols.max() >= nc):
            raise IndexError(f"entry index out of range for shape {(nr, nc)}")
        if len(rows):
            key = cols * max(nr, 1) + rows
            order = np.argsort(key, kind="stable")
            key, rows, cols, vals = key[order], rows[order], cols[order], vals[order]
            if len(key) > 1 and (key[1:] == key[:-1]).any():
                uniq, start = np.unique(key, return_index=True)
                vals = _as_int_array(np.add.reduceat(vals, start))
                rows, cols = rows[start], cols[start]
            nz = vals != 0
            if not nz.all():
                rows, cols, vals = rows[nz], cols[nz], vals[nz]
        for a in (rows, cols, vals):
            a.setflags(write=False)
        self.shape = (nr, nc)
        self.rows, self.cols, self.vals = rows, cols, vals

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls((nrows, ncols))

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        data = [list(r) for r in data]
        nc = ncols if ncols is not None else (len(data[0]) if data else 0)
        trip = [(i, j, v) for i, r in enumerate(data) for j, v in enumerate(r) if v]
        if not trip:
            return cls((len(data), nc))
        r, c, v = zip(*trip)
        return cls((len(data), nc), r, c, list(v))

    @classmethod
    def from_triples(cls, shape, triples: Iterable[tuple[int, int, int]]) -> "IntMatrix":
        trip = list(triples)
        if not trip:
            return cls(shape)
        r, c, v = zip(*trip)
        return cls(shape, r, c, list(v))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        idx = np.arange(n)
        return cls((n, n), idx, idx, np.ones(n, dtype=np.int64))

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def triples(self) -> list[tuple[int, int, int]]:
        return [(int(r), int(c), int(v)) for r, c, v in zip(self.rows, self.cols, self.vals)]

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.shape[1] for _ in range(self.shape[0])]
        for r, c, v in self.triples():
            out[r][c] = v
        return out

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix((self.shape[1], self.shape[0]), self.cols, self.rows, self.vals)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.shape, self.rows, self.cols, -self.vals)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n, k, m = self.shape[0], self.shape[1], other.shape[1]
        if self.nnz == 0 or other.nnz == 0:
            return IntMatrix((n, m))
        small = (
            self.vals.dtype != object
            and other.vals.dtype != object
            and int(np.abs(self.vals).max()) * int(np.abs(other.vals).max()) * max(k, 1) < 2**62
        )
        if small:
            a = sp.csr_matrix((self.vals, (self.rows, self.cols)), shape=self.shape, dtype=np.int64)
            b = sp.csr_matrix((other.vals, (other.rows, other.cols)), shape=other.shape, dtype=np.int64)
            c = (a @ b).tocoo()
            return IntMatrix((n, m), c.row, c.col, c.data)
        by_row: dict[int, list[tuple[int, int]]] = {}
        for r, c, v in other.triples():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for r, c, v in self.triples():
            for cc, w in by_row.get(c, ()):
                acc[(r, cc)] = acc.get((r, cc), 0) + v * w
        return IntMatrix.from_triples((n, m), ((r, c, v) for (r, c), v in acc.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.cols, other.cols)
            and all(int(a) == int(b) for a, b in zip(self.vals, other.vals))
        )

    def __hash__(self):
        return hash((self.shape, tuple(self.triples())))

    def __repr__(self) -> str:
        if self.shape[0] * self.shape[1] <= 64 * 64 and self.shape[0] <= 8:
            return f"IntMatrix({self.to_dense()!r})"
        return f"IntMatrix(shape={self.shape}, nnz={self.nnz})"


def _as_int_array(vals) -> np.ndarray:
    if isinstance(vals, np.ndarray) and vals.dtype == np.int64:
        return vals.reshape(-1).copy()
    if isinstance(vals, np.ndarray) and vals.dtype.kind in "iu" and vals.dtype != np.uint64:
        return vals.astype(np.int64).reshape(-1)
    seq = [int(v) for v in np.asarray(vals, dtype=object).reshape(-1)]
    if all(-(2**62) < v < 2**62 for v in seq):
        return np.array(seq, dtype=np.int64)
    out = np.empty(len(seq), dtype=object)
    out[:] = seq
    return out


# ---------------------------------------------------------------------------
# elimination


def _rows_of(M: IntMatrix, p: int) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for r, c, v in M.triples():
        if p:
            v %= p
            if v == 0:
                continue
        rows.setdefault(r, {})[c] = v
    return rows


def _eliminate(rows: dict[int, dict[int, int]], p: int) -> tuple[int, dict[int, dict[int, int]]]:
    """Pivot on unit entries until none are left.

    Over ``F_p`` (``p > 0``) every nonzero entry is a unit so the residual is
    empty. Over ``Z`` (``p == 0``) the residual holds only non-unit entries.
    Returns ``(number_of_pivots, residual_rows)``; the input is consumed.
    """
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    heap = [(len(s), c) for c, s in cols.items()]
    heapq.heapify(heap)
    pivots = 0
    while heap:
        n, c = heapq.heappop(heap)
        rs = cols.get(c)
        if rs is None:
            continue
        if len(rs) != n:
            heapq.heappush(heap, (len(rs), c))
            continue
        best = None
        for r in rs:
            v = rows[r][c]
            if p or v in (1, -1):
                if best is None or len(rows[r]) < len(rows[best]):
                    best = r
        if best is None:
            continue  # re-queued if a later pivot changes this column
        prow = rows.pop(best)
        pv = prow[c]
        inv = pow(pv, -1, p) if p else pv
        for cc in prow:
            cols[cc].discard(best)
        for r in list(rs):
            row = rows[r]
            f = row[c] * inv
            if p:
                f %= p
            for cc, v in prow.items():
                nv = row.get(cc, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    if cc not in row:
                        cols[cc].add(r)
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
                    cols[cc].discard(r)
            if not row:
                del rows[r]
        del cols[c]
        pivots += 1
        for cc in prow:
            if cc in cols:
                if cols[cc]:
                    heapq.heappush(heap, (len(cols[cc]), cc))
                else:
                    del cols[cc]
    return pivots, rows


def _dense_snf_diagonal(A: list[list[int]]) -> list[int]:
    """Invariant factors of a dense integer matrix by min-|pivot| reduction."""
    nr = len(A)
    nc = len(A[0]) if nr else 0
    diag: list[int] = []
    t = 0
    while t < min(nr, nc):
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            a = A[t][t]
            done = True
            for i in range(t + 1, nr):
                if A[i][t]:
                    q = A[i][t] // a
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, nc):
                            ri[j] -= q * rt[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if A[t][j]:
                    q = A[t][j] // a
                    if q:
                        for row in A[t:]:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if not done:
                # move the smallest leftover in row/column t onto the pivot
                best = (t, t)
                for i in range(t + 1, nr):
                    if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t + 1, nc):
                    if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                        best = (t, j)
                i, j = best
                if i != t:
                    A[t], A[i] = A[i], A[t]
                if j != t:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] % a:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rb, rt = A[bad], A[t]
            for j in range(t, nc):
                rt[j] += rb[j]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_normal_form(M: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of ``M`` and its rank ``r``.

    Unit pivots are eliminated sparsely first; whatever remains (entries with
    no unit anywhere in their column) goes through a dense reduction.
    """
    units, residual = _eliminate(_rows_of(M, 0), 0)
    rest: list[int] = []
    if residual:
        rkeys = sorted(residual)
        ckeys = sorted({c for row in residual.values() for c in row})
        cidx = {c: j for j, c in enumerate(ckeys)}
        dense = [[0] * len(ckeys) for _ in rkeys]
        for i, r in enumerate(rkeys):
            for c, v in residual[r].items():
                dense[i][cidx[c]] = v
        rest = _dense_snf_diagonal(dense)
    factors = tuple([1] * units + sorted(rest))
    return factors, len(factors)


def rank_mod_p(M: IntMatrix, p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    pivots, residual = _eliminate(_rows_of(M, p), p)
    assert not residual
    return pivots


def rank(M: IntMatrix, coeffs: Coefficients = QQ) -> int:
    if coeffs.kind == "F":
        return rank_mod_p(M, coeffs.p)
    return smith_normal_form(M)[1]


def rank_fraction_free(M: IntMatrix) -> int:
    """Rank over Q by Bareiss elimination on the dense matrix.

    Independent of :func:`smith_normal_form`; used as a cross-check.
    """
    A = M.to_dense()
    nr, nc = M.shape
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                A[i][j] = (A[i][j] * A[r][c] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == nr:
            break
    return r


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^free_rank`` (or ``k^free_rank``) plus cyclic torsion summands."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        t = tuple(int(x) for x in self.torsion)
        if any(x <= 1 for x in t):
            raise ValueError(f"invariant factors must exceed 1, got {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {t}")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("k" if self.free_rank == 1 else f"k^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_from_ranks(dim: int, out_rank: int, in_factors: Sequence[int], coeffs: Coefficients) -> HomologyGroup:
    """Assemble ``ker(d_out) / im(d_in)`` from ranks and invariant factors.

    ``in_factors`` are the Smith invariant factors of ``d_in`` over Z, or
    just ``[1] * rank`` over a field.
    """
    in_rank = len(in_factors)
    free = dim - out_rank - in_rank
    torsion = tuple(f for f in in_factors if f > 1) if coeffs.kind == "Z" else ()
    return HomologyGroup(free, torsion)


def check_composable(d_in: IntMatrix, d_out: IntMatrix) -> None:
    if d_out.shape[1] != d_in.shape[0]:
        raise NonComposableError(f"d_out has {d_out.shape[1]} columns but d_in has {d_in.shape[0]} rows")
    if not (d_out @ d_in).is_zero():
        raise NonComposableError("d_out @ d_in is not zero")


def homology_of_pair(d_in: IntMatrix, d_out: IntMatrix, coeffs: Coefficients) -> HomologyGroup:
    """Homology at the middle of ``C_{n+1} --d_in--> C_n --d_out--> C_{n-1}``."""
    check_composable(d_in, d_out)
    dim = d_in.shape[0]
    if coeffs.kind == "F":
        return homology_from_ranks(dim, rank_mod_p(d_out, coeffs.p), [1] * rank_mod_p(d_in, coeffs.p), coeffs)
    out_rank = smith_normal_form(d_out)[1]
    factors, _ = smith_normal_form(d_in)
    return homology_from_ranks(dim, out_rank, factors, coeffs)
