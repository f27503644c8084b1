"""Pure-numpy pivot loop, the fallback for the compiled kernel.

Pivot selection and arithmetic follow ``_simplex_core.pyx`` exactly so that
both backends walk the same path through the polytope.
"""

import numpy as np

OPTIMAL = 0
UNBOUNDED = 1
ITERATION_LIMIT = 2


def pivot(T, r, c):
    T[r] = T[r] / T[r, c]
    col = T[:, c].copy()
    col[r] = 0.0
    nz = np.flatnonzero(col)
    if nz.size:
        T[nz] = T[nz] - np.outer(col[nz], T[r])
    T[:, c] = 0.0
    T[r, c] = 1.0


def iterate(T, basis, n_enter, opt_tol, piv_tol, max_iter, bland_after):
    m = T.shape[0] - 1
    rhs = T.shape[1] - 1
    bland = bland_after <= 0
    degenerate = 0
    it = 0
    while it < max_iter:
        costs = T[m, :n_enter]
        if bland:
            cand = np.flatnonzero(costs < -opt_tol)
            c = int(cand[0]) if cand.size else -1
        else:
            c = int(np.argmin(costs)) if n_enter else -1
            if c >= 0 and not costs[c] < -opt_tol:
                c = -1
        if c < 0:
            return OPTIMAL, it, -1

        r = -1
        best = 0.0
        column = T[:m, c]
        for i in np.flatnonzero(column > piv_tol):
            ratio = T[i, rhs] / column[i]
            if r < 0 or ratio < best - 1e-12:
                best, r = ratio, i
            elif abs(ratio - best) <= 1e-12 and basis[i] < basis[r]:
                best, r = ratio, i
        if r < 0:
            return UNBOUNDED, it, c

        if best <= opt_tol:
            degenerate += 1
            if degenerate >= bland_after:
                bland = True
        else:
            degenerate = 0
        pivot(T, int(r), c)
        basis[r] = c
        it += 1
    return ITERATION_LIMIT, it, -1
