"""Compiled kernel for elementary reductions of a free chain complex.

Two moves, both on pairs joined by a unit coefficient:

* coreduction: a cell whose boundary has exactly one surviving face;
* collapse: a cell with exactly one surviving coface.

Either pair can be deleted and every other differential simply restricted to
the survivors; no fill-in ever happens.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _remove(x, alive, bptr, bidx, cptr, cidx, bcount, ccount, stack, top):
    alive[x] = False
    for e in range(bptr[x], bptr[x + 1]):
        f = bidx[e]
        if alive[f]:
            ccount[f] -= 1
            stack[top] = f
            top += 1
    for e in range(cptr[x], cptr[x + 1]):
        g = cidx[e]
        if alive[g]:
            bcount[g] -= 1
            stack[top] = g
            top += 1
    return top


@numba.njit(cache=True)
def _sweep(mode, alive, bptr, bidx, bunit, cptr, cidx, cunit, bcount, ccount, queue):
    # mode 0: coreductions only, mode 1: collapses only; FIFO from low index
    n = len(alive)
    tail = 0
    for i in range(n):
        if alive[i]:
            queue[tail] = i
            tail += 1
    head = 0
    removed = 0
    while head < tail:
        a = queue[head]
        head += 1
        if not alive[a]:
            continue
        partner = -1
        if mode == 0 and bcount[a] == 1:
            for e in range(bptr[a], bptr[a + 1]):
                if alive[bidx[e]]:
                    if bunit[e]:
                        partner = bidx[e]
                    break
        elif mode == 1 and ccount[a] == 1:
            for e in range(cptr[a], cptr[a + 1]):
                if alive[cidx[e]]:
                    if cunit[e]:
                        partner = cidx[e]
                    break
        if partner < 0:
            continue
        tail = _remove(a, alive, bptr, bidx, cptr, cidx, bcount, ccount, queue, tail)
        tail = _remove(partner, alive, bptr, bidx, cptr, cidx, bcount, ccount, queue, tail)
        removed += 2
    return removed


@numba.njit(cache=True)
def reduce_cells(n, bptr, bidx, bunit, cptr, cidx, cunit):
    """Return the survivor mask after exhausting both reduction moves.

    ``bptr/bidx`` is the CSR boundary (cell -> faces) and ``cptr/cidx`` the
    CSR coboundary (cell -> cofaces); ``bunit``/``cunit`` flag entries whose
    coefficient is +-1. Cells must be numbered with degree non-decreasing.
    """
    alive = np.ones(n, dtype=np.bool_)
    bcount = np.empty(n, dtype=np.int64)
    ccount = np.empty(n, dtype=np.int64)
    for i in range(n):
        bcount[i] = bptr[i + 1] - bptr[i]
        ccount[i] = cptr[i + 1] - cptr[i]
    # a sweep enqueues every live cell once plus one entry per incidence hit
    queue = np.empty(n + len(bidx) + len(cidx) + 1, dtype=np.int64)
    idle = 0
    mode = 0
    while idle < 2:
        if _sweep(mode, alive, bptr, bidx, bunit, cptr, cidx, cunit, bcount, ccount, queue):
            idle = 0
        else:
            idle += 1
        mode = 1 - mode
    return alive
