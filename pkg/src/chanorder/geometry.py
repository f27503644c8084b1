"""Convex geometry over the probability simplex, backed by a dense LP.

Everything here reduces to one primitive, :func:`solve_lp`, a two-phase
tableau simplex (largest-coefficient entering rule, switching to Bland's rule
after a run of degenerate pivots). Infeasible programs come back with a
Farkas certificate read off the phase-1 reduced costs, which is what turns a
failed hull-membership test into a separating functional.

Points are plain numpy rows; a set of points is a 2-D array with one point
per row.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernel
from .errors import ChanorderError, DimensionError, NumericalError

OPT_TOL = 1e-11
PIV_TOL = 1e-10
BLAND_AFTER = 25


@dataclass(frozen=True)
class ToleranceConfig:
    feasibility_tol: float = 1e-9
    dedup_tol: float = 1e-9
    certificate_tol: float = 1e-7

    def __post_init__(self):
        for name in ("feasibility_tol", "dedup_tol", "certificate_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOL = ToleranceConfig()


def as_distribution(p, atol=1e-9):
    """Validate a probability vector; clamp round-off negatives to zero.

    Entries below ``-1e-12`` or a total mass off by more than ``atol`` raise
    :class:`ChanorderError`. The returned array is a read-only copy.
    """
    p = np.array(p, dtype=float).ravel()
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise ChanorderError("distribution must be a nonempty finite vector")
    if p.min() < -1e-12:
        raise ChanorderError(f"negative probability {p.min():.3g}")
    p = np.clip(p, 0.0, None)
    total = p.sum()
    if abs(total - 1.0) > atol:
        raise ChanorderError(f"probabilities sum to {total!r}, not 1")
    p = p / total
    p.flags.writeable = False
    return p


def _as_points(points, what="generator list"):
    P = np.asarray(points, dtype=float)
    if P.ndim == 1 and P.size:
        P = P[None, :]
    if P.ndim != 2 or P.shape[0] == 0:
        raise ChanorderError(f"empty {what}")
    if not np.all(np.isfinite(P)):
        raise ChanorderError(f"non-finite entry in {what}")
    return P


def _as_query(q, dim):
    q = np.asarray(q, dtype=float).ravel()
    if q.size != dim:
        raise DimensionError(f"query has {q.size} coordinates, generators have {dim}")
    return q


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`solve_lp`.

    ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``. ``x`` and
    ``value`` are set when optimal; ``farkas`` holds ``y`` with ``y @ A <= 0``
    on nonnegative columns, ``y @ A == 0`` on free ones and ``y @ b > 0`` when
    infeasible.
    """

    status: str
    x: np.ndarray | None = None
    value: float | None = None
    farkas: np.ndarray | None = None
    iterations: int = 0

    @property
    def feasible(self):
        return self.status != "infeasible"


def solve_lp(c, A_eq, b_eq, nonneg=None, tol=DEFAULT_TOL, kernel=None):
    """Minimise ``c @ x`` subject to ``A_eq @ x == b_eq``.

    ``nonneg`` flags which variables carry ``x >= 0`` (all of them by
    default); unflagged variables are free. ``kernel`` is an
    ``(iterate, pivot)`` pair overriding the import-time backend.
    """
    iterate, pivot = kernel or (_kernel.iterate, _kernel.pivot)
    c = np.asarray(c, dtype=float).ravel()
    A = np.asarray(A_eq, dtype=float)
    b = np.asarray(b_eq, dtype=float).ravel()
    if A.ndim != 2:
        raise DimensionError("constraint matrix must be 2-D")
    m, n = A.shape
    if c.size != n or b.size != m:
        raise DimensionError(f"A is {m}x{n} but c has {c.size} and b has {b.size} entries")
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
        raise ChanorderError("LP data must be finite")
    nonneg = np.ones(n, dtype=bool) if nonneg is None else np.asarray(nonneg, dtype=bool).ravel()
    if nonneg.size != n:
        raise DimensionError("nonneg must have one flag per variable")

    free = np.flatnonzero(~nonneg)
    A_std = np.hstack([A, -A[:, free]])
    c_std = np.concatenate([c, -c[free]])
    N = A_std.shape[1]
    max_iter = 50 * (m + N) + 1000

    # phase 1: artificial basis on rows flipped to a nonnegative rhs
    sign = np.where(b < 0, -1.0, 1.0)
    A1 = A_std * sign[:, None]
    b1 = b * sign
    T = np.zeros((m + 1, N + m + 1))
    T[:m, :N] = A1
    T[:m, N:N + m] = np.eye(m)
    T[:m, -1] = b1
    T[m, :N] = -A1.sum(axis=0)
    T[m, -1] = -b1.sum()
    basis = np.arange(N, N + m, dtype=np.intp)
    status, it1, _ = iterate(T, basis, N + m, OPT_TOL, PIV_TOL, max_iter, BLAND_AFTER)
    if status != _kernel._simplex_py.OPTIMAL:
        raise NumericalError("phase 1 did not terminate")

    if -T[m, -1] > tol.feasibility_tol:
        y = (1.0 - T[m, N:N + m]) * sign
        yA, yb = y @ A, y @ b
        scale = max(1.0, np.abs(y).max())
        bad = np.concatenate([yA[nonneg], np.abs(yA[~nonneg])])
        if yb <= 0 or (bad.size and bad.max() > tol.certificate_tol * scale):
            raise NumericalError("Farkas certificate failed verification")
        return LPResult("infeasible", farkas=y, iterations=it1)

    # drive remaining artificials out of the basis; rows that cannot pivot are redundant
    keep = []
    for i in range(m):
        if basis[i] >= N:
            row = np.abs(T[i, :N])
            j = int(np.argmax(row)) if N else -1
            if j < 0 or row[j] <= PIV_TOL:
                continue
            pivot(T, i, j)
            basis[i] = j
        keep.append(i)

    T2 = np.empty((len(keep) + 1, N + 1))
    T2[:-1, :N] = T[keep, :N]
    T2[:-1, -1] = T[keep, -1]
    basis2 = np.ascontiguousarray(basis[keep])
    cB = c_std[basis2]
    T2[-1, :N] = c_std - cB @ T2[:-1, :N]
    T2[-1, -1] = -(cB @ T2[:-1, -1])
    status, it2, _ = iterate(T2, basis2, N, OPT_TOL, PIV_TOL, max_iter, BLAND_AFTER)
    if status == _kernel._simplex_py.UNBOUNDED:
        return LPResult("unbounded", iterations=it1 + it2)
    if status != _kernel._simplex_py.OPTIMAL:
        raise NumericalError("phase 2 did not terminate")

    x_std = np.zeros(N)
    x_std[basis2] = T2[:-1, -1]
    x_std = np.clip(x_std, 0.0, None)
    x = x_std[:n].copy()
    x[free] -= x_std[n:]
    residual = np.abs(A @ x - b).sum()
    if residual > tol.certificate_tol * max(1.0, np.abs(b).max(initial=0.0)):
        raise NumericalError(f"primal residual {residual:.3g} after phase 2")
    return LPResult("optimal", x=x, value=float(c @ x), iterations=it1 + it2)


@dataclass(frozen=True)
class MembershipResult:
    """Hull-membership verdict with a certificate either way.

    Inside: ``weights`` are convex coefficients reproducing the query.
    Outside: ``separator = (h, gap)`` with
    ``h @ q >= max_i h @ gens[i] + gap`` and ``gap > 0``.
    """

    inside: bool
    weights: np.ndarray | None = None
    separator: tuple[np.ndarray, float] | None = None


def hull_membership(q, gens, tol=DEFAULT_TOL, kernel=None):
    """Decide whether ``q`` lies in the convex hull of the rows of ``gens``."""
    G = _as_points(gens)
    k, d = G.shape
    q = _as_query(q, d)
    A = np.vstack([G.T, np.ones(k)])
    b = np.append(q, 1.0)
    res = solve_lp(np.zeros(k), A, b, tol=tol, kernel=kernel)
    if res.feasible:
        w = np.clip(res.x, 0.0, None)
        w /= w.sum()
        err = np.abs(w @ G - q).sum()
        if err > tol.certificate_tol:
            raise NumericalError(f"membership weights reconstruct the query only to {err:.3g}")
        return MembershipResult(True, weights=w)
    h = res.farkas[:d]
    h = h / np.abs(h).max()
    gap = float(h @ q - (G @ h).max())
    if not gap > 0:
        raise NumericalError("separating functional has no positive gap")
    return MembershipResult(False, separator=(h, gap))


def l1_distance_to_hull(q, gens, tol=DEFAULT_TOL, kernel=None):
    """L1 distance from ``q`` to the hull of ``gens`` and the nearest-point weights."""
    G = _as_points(gens)
    k, d = G.shape
    q = _as_query(q, d)
    eye = np.eye(d)
    A = np.block([
        [G.T, eye, -eye],
        [np.ones((1, k)), np.zeros((1, 2 * d))],
    ])
    b = np.append(q, 1.0)
    c = np.concatenate([np.zeros(k), np.ones(2 * d)])
    res = solve_lp(c, A, b, tol=tol, kernel=kernel)
    w = np.clip(res.x[:k], 0.0, None)
    w /= w.sum()
    return float(np.abs(w @ G - q).sum()), w


def dedup_indices(P, dedup_tol):
    """Indices of the first member of each group of points equal within ``dedup_tol``."""
    kept = []
    for i in range(len(P)):
        if not any(np.abs(P[i] - P[j]).max() <= dedup_tol for j in kept):
            kept.append(i)
    return kept


def convex_extreme_points(points, tol=DEFAULT_TOL, kernel=None):
    """Sorted indices of the convex-extreme points among ``points``.

    Near-duplicates collapse onto their lowest index before testing, so a
    repeated vertex is still reported once.
    """
    P = _as_points(points, "point list")
    reps = dedup_indices(P, tol.dedup_tol)
    if len(reps) == 1:
        return reps
    out = []
    for pos, i in enumerate(reps):
        others = P[reps[:pos] + reps[pos + 1:]]
        if not hull_membership(P[i], others, tol, kernel).inside:
            out.append(i)
    return out


def _directed_tv(X, Y, tol, kernel):
    return max(0.5 * l1_distance_to_hull(x, Y, tol, kernel)[0] for x in X)


def hausdorff_tv(A, B, tol=DEFAULT_TOL, kernel=None):
    """Hausdorff distance, in total variation, between the hulls of ``A`` and ``B``.

    The distance to a polytope is convex, so each directed sup is attained at
    an extreme point and only those are visited.
    """
    PA = _as_points(A, "point list")
    PB = _as_points(B, "point list")
    if PA.shape[1] != PB.shape[1]:
        raise DimensionError("point sets live over different alphabets")
    CA = PA[convex_extreme_points(PA, tol, kernel)]
    CB = PB[convex_extreme_points(PB, tol, kernel)]
    return max(0.0, _directed_tv(CA, CB, tol, kernel), _directed_tv(CB, CA, tol, kernel))
