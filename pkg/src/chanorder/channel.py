"""Channels as immutable row-stochastic matrices with explicit alphabets.

Row ``x`` of a :class:`Channel` is the output distribution ``W(.|x)``.
Inputs are addressed by position ``0..n-1``; the original input labels ride
along as metadata. Output labels are part of the channel's identity: sums tag
them with ``"L"``/``"R"`` and products pair them.
"""

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from .errors import ChannelError, DimensionError

ROW_SUM_TOL = 1e-9
NEG_TOL = 1e-12
RENORM_FLOOR = 1e-14


def _freeze(a):
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Channel:
    rows: np.ndarray
    output_labels: tuple = None
    input_labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[0] == 0 or rows.shape[1] == 0:
            raise ChannelError("channel matrix must be a nonempty rectangular matrix")
        if not np.all(np.isfinite(rows)):
            raise ChannelError("channel matrix has non-finite entries")
        if rows.min() < -NEG_TOL:
            raise ChannelError(f"negative transition probability {rows.min():.3g}")
        rows = np.clip(rows, 0.0, None)
        sums = rows.sum(axis=1)
        worst = int(np.argmax(np.abs(sums - 1.0)))
        if abs(sums[worst] - 1.0) > ROW_SUM_TOL:
            raise ChannelError(f"row {worst} sums to {sums[worst]!r}")
        # rows already stochastic up to rounding are kept bit-exact
        off = np.abs(sums - 1.0) > RENORM_FLOOR
        rows[off] = rows[off] / sums[off, None]
        n, m = rows.shape
        out = tuple(range(m)) if self.output_labels is None else tuple(self.output_labels)
        inp = tuple(range(n)) if self.input_labels is None else tuple(self.input_labels)
        if len(out) != m or len(set(out)) != m:
            raise ChannelError("output labels must be distinct, one per column")
        if len(inp) != n or len(set(inp)) != n:
            raise ChannelError("input labels must be distinct, one per row")
        object.__setattr__(self, "rows", _freeze(rows))
        object.__setattr__(self, "output_labels", out)
        object.__setattr__(self, "input_labels", inp)

    @property
    def input_size(self):
        return self.rows.shape[0]

    @property
    def output_size(self):
        return self.rows.shape[1]

    @property
    def shape(self):
        return self.rows.shape

    def __eq__(self, other):
        if not isinstance(other, Channel):
            return NotImplemented
        return (self.output_labels == other.output_labels
                and self.input_labels == other.input_labels
                and np.array_equal(self.rows, other.rows))

    def __hash__(self):
        return hash((self.output_labels, self.rows.tobytes()))

    def __repr__(self):
        return f"Channel({self.input_size}x{self.output_size}, outputs={list(self.output_labels)})"


def validate(raw, output_labels=None, input_labels=None):
    """Build a :class:`Channel`, renormalising rows that are off by at most 1e-9."""
    return Channel(raw, output_labels, input_labels)


def identity(n):
    return Channel(np.eye(n))


def bsc(eps):
    """Binary symmetric channel with crossover probability ``eps``."""
    return Channel([[1 - eps, eps], [eps, 1 - eps]])


def _check_same_outputs(W, V):
    if W.output_labels != V.output_labels:
        raise DimensionError(
            f"output alphabets differ: {list(W.output_labels)} vs {list(V.output_labels)}")


def compose(V, W):
    """``V o W``: feed the output of ``W`` into ``V``."""
    if V.input_size != W.output_size:
        raise DimensionError(f"cannot compose: V takes {V.input_size} inputs, W emits {W.output_size}")
    return Channel(W.rows @ V.rows, V.output_labels, W.input_labels)


def deterministic(f, outputs, input_labels=None):
    """Deterministic channel ``D_f``.

    ``outputs`` is an output-alphabet size or a label sequence. ``f`` is either
    a sequence (``f[x]`` is the image of input position ``x``) or a mapping
    from input labels to output labels.
    """
    out = tuple(range(outputs)) if isinstance(outputs, (int, np.integer)) else tuple(outputs)
    index = {y: j for j, y in enumerate(out)}
    if isinstance(f, Mapping):
        input_labels = tuple(f) if input_labels is None else tuple(input_labels)
        images = [f[x] for x in input_labels]
    else:
        images = list(f)
    if not images:
        raise ChannelError("f must be defined on a nonempty input alphabet")
    D = np.zeros((len(images), len(out)))
    for x, y in enumerate(images):
        if y not in index:
            raise ChannelError(f"f maps input {x} to {y!r}, outside the output alphabet")
        D[x, index[y]] = 1.0
    return Channel(D, out, input_labels)


def channel_distance(W, V):
    """Half the largest per-input L1 distance between the rows of ``W`` and ``V``."""
    if W.shape != V.shape:
        raise DimensionError(f"channels have shapes {W.shape} and {V.shape}")
    _check_same_outputs(W, V)
    return float(0.5 * np.abs(W.rows - V.rows).sum(axis=1).max())


def sum_labels(labels1, labels2):
    return tuple(("L", a) for a in labels1) + tuple(("R", b) for b in labels2)


def product_labels(labels1, labels2):
    return tuple(itertools.product(labels1, labels2))


def channel_sum(W1, W2):
    """Block-diagonal channel: the sender picks one of the two channels per use."""
    n1, m1 = W1.shape
    n2, m2 = W2.shape
    M = np.zeros((n1 + n2, m1 + m2))
    M[:n1, :m1] = W1.rows
    M[n1:, m1:] = W2.rows
    return Channel(M, sum_labels(W1.output_labels, W2.output_labels),
                   sum_labels(W1.input_labels, W2.input_labels))


def channel_product(W1, W2):
    """Both channels used at once; row ``(x1, x2)`` is the outer product of the rows."""
    return Channel(np.kron(W1.rows, W2.rows),
                   product_labels(W1.output_labels, W2.output_labels),
                   product_labels(W1.input_labels, W2.input_labels))
