"""Input-degradedness, input-equivalence and the similarity metric.

``W`` is input-degraded from ``W2`` exactly when every row of ``W`` is a
convex combination of rows of ``W2``; the combination weights, stacked, form
the intertwiner ``V`` with ``W = W2 o V``. When some row falls outside, the
LP's separating functional doubles as a one-context game payoff that ``W``
beats and ``W2`` cannot match.

Input-equivalence classes are identified by their characteristic, the
convex-extreme rows, sorted lexicographically.
"""

from dataclasses import dataclass

import numpy as np

from .channel import Channel, product_labels, sum_labels
from .errors import DimensionError, PreconditionError
from .geometry import (
    DEFAULT_TOL,
    MembershipResult,
    convex_extreme_points,
    hausdorff_tv,
    hull_membership,
)


@dataclass(frozen=True, eq=False)
class Characteristic:
    points: np.ndarray
    output_labels: tuple

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, Characteristic):
            return NotImplemented
        return (self.output_labels == other.output_labels
                and self.points.shape == other.points.shape
                and np.array_equal(self.points, other.points))

    def __hash__(self):
        return hash((self.output_labels, self.points.tobytes()))


def lexsorted(points):
    points = np.asarray(points, dtype=float)
    return points[np.lexsort(points.T[::-1])]


def make_characteristic(points, output_labels=None):
    pts = lexsorted(np.atleast_2d(points))
    pts.flags.writeable = False
    labels = tuple(range(pts.shape[1])) if output_labels is None else tuple(output_labels)
    if len(labels) != pts.shape[1]:
        raise DimensionError("one output label per coordinate required")
    return Characteristic(pts, labels)


@dataclass(frozen=True)
class Refutation:
    row_index: int
    payoff: np.ndarray
    gap: float


@dataclass(frozen=True)
class DegradednessResult:
    degraded: bool
    intertwiner: Channel | None = None
    refutation: Refutation | None = None


def _same_outputs(W, V):
    if W.output_labels != V.output_labels:
        raise DimensionError(
            f"output alphabets differ: {list(W.output_labels)} vs {list(V.output_labels)}")


def is_input_degraded(W, W2, tol=DEFAULT_TOL):
    """Decide whether ``W = W2 o V`` for some channel ``V``."""
    _same_outputs(W, W2)
    weights = []
    for x in range(W.input_size):
        res = hull_membership(W.rows[x], W2.rows, tol)
        if not res.inside:
            h, _ = res.separator
            # report the row that h pushes furthest out, so the gap equals the game's payoff gap
            scores = W.rows @ h
            row = int(np.argmax(scores))
            gap = float(scores[row] - (W2.rows @ h).max())
            return DegradednessResult(False, refutation=Refutation(row, h, gap))
        weights.append(res.weights)
    V = Channel(np.array(weights), W2.input_labels, W.input_labels)
    return DegradednessResult(True, intertwiner=V)


def characteristic(W, tol=DEFAULT_TOL):
    """Convex-extreme rows of ``W`` in lexicographic order."""
    idx = convex_extreme_points(W.rows, tol)
    return make_characteristic(W.rows[idx], W.output_labels)


def input_rank(W, tol=DEFAULT_TOL):
    return len(characteristic(W, tol))


def characteristics_match(C1, C2, tol=DEFAULT_TOL):
    """Set equality of two characteristics, pointwise within ``dedup_tol``."""
    if C1.output_labels != C2.output_labels or len(C1) != len(C2):
        return False

    def covered(A, B):
        return all((np.abs(B - a).max(axis=1) <= tol.dedup_tol).any() for a in A)

    return covered(C1.points, C2.points) and covered(C2.points, C1.points)


def is_input_equivalent(W, W2, tol=DEFAULT_TOL):
    _same_outputs(W, W2)
    return characteristics_match(characteristic(W, tol), characteristic(W2, tol), tol)


def canonical_representative(W, tol=DEFAULT_TOL):
    """The smallest member of ``W``'s class: one row per characteristic point."""
    return Channel(characteristic(W, tol).points, W.output_labels)


def _class_points(obj, tol):
    if isinstance(obj, Characteristic):
        return obj.points, obj.output_labels
    return characteristic(obj, tol).points, obj.output_labels


def similarity_distance(W, W2, tol=DEFAULT_TOL):
    """Hausdorff (total variation) distance between the row hulls.

    Accepts channels with different input sizes, or precomputed
    characteristics.
    """
    P1, labels1 = _class_points(W, tol)
    P2, labels2 = _class_points(W2, tol)
    if labels1 != labels2:
        raise DimensionError("similarity distance needs a common output alphabet")
    return hausdorff_tv(P1, P2, tol)


def find_separating_payoff(W, W2, tol=DEFAULT_TOL):
    """Single-context payoff on which ``W`` strictly outperforms ``W2``.

    Raises :class:`PreconditionError` when ``W`` is input-degraded from ``W2``,
    since then no such payoff exists.
    """
    res = is_input_degraded(W, W2, tol)
    if res.degraded:
        raise PreconditionError("W is input-degraded from W2; no separating payoff exists")
    return res.refutation


@dataclass(frozen=True)
class SumDecomposition:
    """``q = (1 - lam) * embed_left(w1 @ C1) + lam * embed_right(w2 @ C2)``."""

    lam: float
    w1: np.ndarray | None
    w2: np.ndarray | None


def _check_labels(labels, expected, what):
    if labels is not None and tuple(labels) != expected:
        raise DimensionError(f"query is not over the {what} alphabet of the two characteristics")


def decompose_sum_point(q, C1, C2, labels=None, tol=DEFAULT_TOL):
    """Split a point over the disjoint-union alphabet into its two hull parts.

    The mixing weight is forced: it is the mass ``q`` puts on the right block.
    Returns ``None`` when ``q`` is outside the hull of the channel sum.
    """
    _check_labels(labels, sum_labels(C1.output_labels, C2.output_labels), "tagged")
    d1 = C1.points.shape[1]
    q = np.asarray(q, dtype=float).ravel()
    if q.size != d1 + C2.points.shape[1]:
        raise DimensionError("query length differs from |Y1| + |Y2|")
    left, right = q[:d1], q[d1:]
    lam = float(right.sum())
    w1 = w2 = None
    if lam < 1.0 - tol.feasibility_tol:
        res = hull_membership(left / (1.0 - lam), C1.points, tol)
        if not res.inside:
            return None
        w1 = res.weights
    elif np.abs(left).sum() > tol.feasibility_tol:
        return None
    if lam > tol.feasibility_tol:
        res = hull_membership(right / lam, C2.points, tol)
        if not res.inside:
            return None
        w2 = res.weights
    elif np.abs(right).sum() > tol.feasibility_tol:
        return None
    if w1 is None:
        lam = 1.0
    if w2 is None:
        lam = 0.0
    return SumDecomposition(lam, w1, w2)


def product_generators(C1, C2):
    """Pairwise products ``p1 x p2``, flattened in the product-alphabet order."""
    return np.array([np.kron(p1, p2) for p1 in C1.points for p2 in C2.points])


def product_hull_membership(q, C1, C2, labels=None, tol=DEFAULT_TOL) -> MembershipResult:
    _check_labels(labels, product_labels(C1.output_labels, C2.output_labels), "product")
    return hull_membership(q, product_generators(C1, C2), tol)
