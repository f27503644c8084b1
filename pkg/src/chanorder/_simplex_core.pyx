# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled pivot loop for the dense tableau simplex.

Mirrors ``chanorder._simplex_py`` operation for operation; both must pick the
same pivots and perform the same floating-point updates.
"""

from libc.math cimport fabs

cdef enum:
    OPTIMAL = 0
    UNBOUNDED = 1
    ITERATION_LIMIT = 2


cdef void _pivot(double[:, ::1] T, Py_ssize_t r, Py_ssize_t c) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef Py_ssize_t nrows = T.shape[0]
    cdef Py_ssize_t ncols = T.shape[1]
    cdef double p = T[r, c]
    cdef double f
    for j in range(ncols):
        T[r, j] = T[r, j] / p
    for i in range(nrows):
        if i == r:
            continue
        f = T[i, c]
        if f != 0.0:
            for j in range(ncols):
                T[i, j] = T[i, j] - f * T[r, j]
        T[i, c] = 0.0
    T[r, c] = 1.0


def pivot(double[:, ::1] T, Py_ssize_t r, Py_ssize_t c):
    _pivot(T, r, c)


def iterate(double[:, ::1] T, Py_ssize_t[::1] basis, Py_ssize_t n_enter,
            double opt_tol, double piv_tol, Py_ssize_t max_iter,
            Py_ssize_t bland_after):
    """Run simplex pivots in place until optimal, unbounded or out of budget.

    The last row of ``T`` holds reduced costs (minimisation), the last column
    the right-hand side. Returns ``(status, iterations, column)`` where
    ``column`` is the unbounded direction for status 1 and -1 otherwise.
    """
    cdef Py_ssize_t m = T.shape[0] - 1
    cdef Py_ssize_t rhs = T.shape[1] - 1
    cdef Py_ssize_t it = 0, degenerate = 0
    cdef Py_ssize_t i, j, c = -1, r
    cdef int status = ITERATION_LIMIT
    cdef bint bland = bland_after <= 0
    cdef double best, d, ratio, a
    with nogil:
        while it < max_iter:
            c = -1
            if bland:
                for j in range(n_enter):
                    if T[m, j] < -opt_tol:
                        c = j
                        break
            else:
                best = -opt_tol
                for j in range(n_enter):
                    d = T[m, j]
                    if d < best:
                        best = d
                        c = j
            if c < 0:
                status = OPTIMAL
                break
            r = -1
            best = 0.0
            for i in range(m):
                a = T[i, c]
                if a > piv_tol:
                    ratio = T[i, rhs] / a
                    if r < 0 or ratio < best - 1e-12:
                        best = ratio
                        r = i
                    elif fabs(ratio - best) <= 1e-12 and basis[i] < basis[r]:
                        best = ratio
                        r = i
            if r < 0:
                status = UNBOUNDED
                break
            if best <= opt_tol:
                degenerate += 1
                if degenerate >= bland_after:
                    bland = True
            else:
                degenerate = 0
            _pivot(T, r, c)
            basis[r] = c
            it += 1
    if status == UNBOUNDED:
        return status, it, c
    return status, it, -1
