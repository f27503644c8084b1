"""The compiled pivot kernel must agree bit for bit with the numpy fallback."""

import numpy as np
import pytest

from chanorder import _kernel
from chanorder.geometry import BLAND_AFTER, OPT_TOL, PIV_TOL, hull_membership, solve_lp

backends = _kernel.backends()
needs_ext = pytest.mark.skipif("cython" not in backends, reason="compiled kernel not built")


def random_tableau(rng):
    m, n = rng.integers(1, 6), rng.integers(1, 9)
    A = rng.normal(size=(m, n))
    b = np.abs(rng.normal(size=m))
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n], T[:m, n:n + m], T[:m, -1] = A, np.eye(m), b
    T[m, :n], T[m, -1] = -A.sum(axis=0), -b.sum()
    return T, np.arange(n, n + m, dtype=np.intp)


def test_backend_is_reported():
    assert _kernel.BACKEND in backends


@needs_ext
def test_iterate_bit_identical():
    rng = np.random.default_rng(5)
    for _ in range(300):
        T, basis = random_tableau(rng)
        out = {}
        for name, (iterate, _) in backends.items():
            T2, b2 = T.copy(), basis.copy()
            res = iterate(T2, b2, T.shape[1] - 1, OPT_TOL, PIV_TOL, 500, BLAND_AFTER)
            out[name] = (res, T2, b2)
        (r1, T1, b1), (r2, T2, b2) = out["python"], out["cython"]
        assert tuple(r1) == tuple(r2)
        assert np.array_equal(T1, T2) and np.array_equal(b1, b2)


@needs_ext
def test_bland_fallback_identical_on_degenerate_problems():
    # many zero right-hand sides force degenerate pivots
    rng = np.random.default_rng(11)
    for _ in range(100):
        m, n = 5, 10
        A = rng.integers(-2, 3, size=(m, n)).astype(float)
        b = np.zeros(m)
        c = rng.integers(-3, 3, size=n).astype(float)
        vals = [solve_lp(c, A, b, kernel=k) for k in backends.values()]
        assert len({v.status for v in vals}) == 1
        if vals[0].x is not None:
            assert np.array_equal(vals[0].x, vals[1].x)


@needs_ext
def test_membership_identical_across_backends():
    rng = np.random.default_rng(3)
    for _ in range(200):
        d = rng.integers(2, 6)
        G = rng.dirichlet(np.ones(d), size=rng.integers(1, 6))
        q = rng.dirichlet(np.ones(d))
        a, b = (hull_membership(q, G, kernel=k) for k in backends.values())
        assert a.inside == b.inside
        if a.inside:
            assert np.array_equal(a.weights, b.weights)
        else:
            assert np.array_equal(a.separator[0], b.separator[0])


def test_pivot_matches_definition():
    rng = np.random.default_rng(0)
    for name, (_, pivot) in backends.items():
        T = rng.normal(size=(4, 6))
        T[1, 2] = 2.0
        ref = T.copy()
        ref[1] /= ref[1, 2]
        for i in (0, 2, 3):
            ref[i] -= ref[i, 2] * ref[1]
        pivot(T, 1, 2)
        np.testing.assert_allclose(T, ref, atol=1e-14, err_msg=name)
        assert T[1, 2] == 1.0 and np.all(T[[0, 2, 3], 2] == 0.0)
