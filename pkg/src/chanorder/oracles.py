"""Brute-force oracles used to cross-check the LP-based routines.

None of these touch the simplex kernel: they enumerate weight grids or
codebooks directly, so an agreement is evidence rather than a tautology.
"""

import functools
import itertools

import numpy as np

try:
    from scipy.spatial import cKDTree
except ImportError:  # exact nearest neighbours either way; the tree is only faster
    cKDTree = None

from .coding import pe_encoder, Encoder


@functools.lru_cache(maxsize=16)
def simplex_grid(k, step):
    """All weight vectors on the ``k``-simplex whose entries are multiples of ``step``.

    Cached; the returned array is read-only.
    """
    return _simplex_grid(k, step)


def _simplex_grid(k, step):
    n = int(round(1.0 / step))
    if k == 1:
        return np.ones((1, 1))
    # stars and bars: choose k-1 cut points among n + k - 1 slots
    cuts = np.array(list(itertools.combinations(range(n + k - 1), k - 1)))
    bounds = np.hstack([np.full((len(cuts), 1), -1), cuts, np.full((len(cuts), 1), n + k - 1)])
    grid = (np.diff(bounds, axis=1) - 1) / n
    grid.flags.writeable = False
    return grid


def grid_hull_distance(q, gens, step=1e-3):
    """Smallest L1 distance from ``q`` to grid combinations of ``gens``."""
    G = np.asarray(gens, dtype=float)
    pts = simplex_grid(len(G), step) @ G
    return float(np.abs(pts - np.asarray(q, dtype=float)).sum(axis=1).min())


def grid_hull_membership(q, gens, step=1e-3, slack=2e-3):
    return grid_hull_distance(q, gens, step) <= slack


def grid_hull_samples(gens, step):
    G = np.asarray(gens, dtype=float)
    return simplex_grid(len(G), step) @ G


def _directed_sampled(A, B, chunk=1024):
    if cKDTree is not None:
        return 0.5 * float(cKDTree(B).query(A, p=1)[0].max())
    worst = 0.0
    for i in range(0, len(A), chunk):
        block = A[i:i + chunk]
        d = np.zeros((len(block), len(B)))
        for j in range(B.shape[1]):
            d += np.abs(block[:, j, None] - B[None, :, j])
        d = d.min(axis=1)
        worst = max(worst, float(d.max()))
    return 0.5 * worst


def grid_hausdorff_tv(A, B, step=1e-2):
    """Hausdorff distance in total variation between two hulls, sampled on weight grids."""
    SA, SB = grid_hull_samples(A, step), grid_hull_samples(B, step)
    return max(_directed_sampled(SA, SB), _directed_sampled(SB, SA))


def grid_pc(p, W, D, step=0.05):
    """Success probability maximised over randomized encoders with grid-valued rows.

    The objective is a sum over messages of terms that each involve one
    encoder row only, so the joint grid maximum is the sum of per-row maxima.
    """
    G = W.rows @ D.rows
    rows = simplex_grid(W.input_size, step)
    return float(np.asarray(p, dtype=float) @ (rows @ G).max(axis=0))


def brute_pe_opt(W, n, M):
    """Minimum of ``pe_encoder`` over every ordered ``(n, M)`` codebook."""
    words = list(itertools.product(range(W.input_size), repeat=n))
    best = 1.0
    for book in itertools.product(words, repeat=M):
        best = min(best, pe_encoder(W, Encoder(n, M, book)))
    return best
