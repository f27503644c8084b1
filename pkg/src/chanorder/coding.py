"""Error probabilities and capacity, all by exhaustive desk-scale enumeration.

Output ``n``-tuples are indexed in row-major order (first symbol most
significant), which is the column order of the ``n``-fold Kronecker power
of the channel matrix. Messages and input symbols are 0-based. Rates and
capacities are in nats.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ChanorderError, DimensionError, EnumerationCapError, NumericalError

DEFAULT_CAP = 10**6


def kron_power(P, n):
    """``n``-fold Kronecker power: entry ``(x^n, y^n)`` is ``prod_i P[x_i, y_i]``."""
    out = np.ones((1, 1))
    for _ in range(n):
        out = np.kron(out, P)
    return out


def tuple_index(symbols, base):
    idx = 0
    for s in symbols:
        idx = idx * base + int(s)
    return idx


def index_tuple(idx, base, n):
    out = []
    for _ in range(n):
        idx, s = divmod(idx, base)
        out.append(s)
    return tuple(reversed(out))


@dataclass(frozen=True, eq=False)
class Decoder:
    """Map from output ``n``-tuples (by row-major index) to message ids ``0..M-1``."""

    n: int
    M: int
    table: np.ndarray
    output_size: int

    def __post_init__(self):
        table = np.array(self.table, dtype=np.intp).ravel()
        if self.n < 1 or self.M < 1 or self.output_size < 1:
            raise ChanorderError("n, M and the output size must be positive")
        if table.size != self.output_size ** self.n:
            raise ChanorderError(f"decoder table needs {self.output_size ** self.n} entries, got {table.size}")
        if table.size and (table.min() < 0 or table.max() >= self.M):
            raise ChanorderError("decoder maps outside the message set")
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    def __eq__(self, other):
        return (isinstance(other, Decoder) and (self.n, self.M, self.output_size)
                == (other.n, other.M, other.output_size) and np.array_equal(self.table, other.table))

    def decode(self, ys):
        return int(self.table[tuple_index(ys, self.output_size)])


@dataclass(frozen=True, eq=False)
class Encoder:
    """Codebook: row ``m`` of ``table`` is the input ``n``-tuple sent for message ``m``."""

    n: int
    M: int
    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=np.intp).reshape(self.M, self.n)
        if self.n < 1 or self.M < 1:
            raise ChanorderError("n and M must be positive")
        if table.min() < 0:
            raise ChanorderError("negative input symbol in codebook")
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    def __eq__(self, other):
        return (isinstance(other, Encoder) and (self.n, self.M) == (other.n, other.M)
                and np.array_equal(self.table, other.table))


def _cap_check(count, cap, what):
    if count > cap:
        raise EnumerationCapError(f"{what} needs {count} cases, cap is {cap}")


def pe_decoder_ml(W, D, cap=DEFAULT_CAP):
    """Error probability of ``D`` when each message gets its best codeword for ``W``."""
    if D.output_size != W.output_size:
        raise DimensionError("decoder and channel disagree on the output alphabet")
    _cap_check(W.input_size ** D.n, cap, "codeword enumeration")
    _cap_check(W.output_size ** D.n, cap, "output enumeration")
    Wn = kron_power(W.rows, D.n)
    regions = np.zeros((Wn.shape[1], D.M))
    regions[np.arange(Wn.shape[1]), D.table] = 1.0
    success = (Wn @ regions).max(axis=0).sum() / D.M
    return float(np.clip(1.0 - success, 0.0, 1.0))


def _kron_rows(P, word):
    out = np.ones(1)
    for x in word:
        out = np.kron(out, P[x])
    return out


def pe_encoder(W, E, cap=DEFAULT_CAP):
    """Error probability of ML decoding for the codebook ``E`` over ``W``."""
    if E.table.max() >= W.input_size:
        raise DimensionError("codebook uses inputs the channel does not have")
    _cap_check(W.output_size ** E.n, cap, "output enumeration")
    L = np.array([_kron_rows(W.rows, word) for word in E.table])
    success = L.max(axis=0).sum() / E.M
    return float(np.clip(1.0 - success, 0.0, 1.0))


def pe_opt(W, n, M, cap=DEFAULT_CAP, chunk=4096):
    """Smallest ``pe_encoder`` over all ``(n, M)`` codebooks.

    The ML success mass is symmetric in the codewords, so only multisets of
    codewords are visited; the cap applies to the full table count.
    """
    if n < 1 or M < 1:
        raise ChanorderError("n and M must be positive")
    _cap_check(W.input_size ** (n * M), cap, "encoder enumeration")
    _cap_check(W.output_size ** n, cap, "output enumeration")
    Wn = kron_power(W.rows, n)
    combos = itertools.combinations_with_replacement(range(Wn.shape[0]), M)
    best = 0.0
    while True:
        block = np.array(list(itertools.islice(combos, chunk)), dtype=np.intp)
        if block.size == 0:
            break
        best = max(best, Wn[block].max(axis=1).sum(axis=1).max())
    return float(np.clip(1.0 - best / M, 0.0, 1.0))


def pc(p, W, D):
    """Best success probability of estimating ``U ~ p`` through ``W`` with decoder ``D``.

    ``D`` is a channel from the output alphabet of ``W`` to ``U``. Returns
    ``(value, encoder)`` where ``encoder[u]`` is a maximising input, lowest
    index on ties.
    """
    if D.input_size != W.output_size:
        raise DimensionError("decoder input alphabet differs from the channel output alphabet")
    p = np.asarray(p, dtype=float).ravel()
    if p.size != D.output_size:
        raise DimensionError("prior and decoder disagree on the message alphabet")
    G = W.rows @ D.rows
    encoder = np.argmax(G, axis=0)
    value = float(p @ G[encoder, np.arange(G.shape[1])])
    return value, encoder


def _divergences(r, P, pos, logP):
    q = r @ P
    logq = np.log(np.where(q > 0, q, 1.0))
    return np.where(pos, P * (logP - logq), 0.0).sum(axis=1)


def capacity(W, tol=1e-9, max_iter=200_000):
    """Capacity in nats by Blahut-Arimoto, stopped when the bound gap is below ``tol``.

    Each step brackets the capacity between ``log sum_x r(x) exp(D_x)`` and
    ``max_x D_x`` where ``D_x`` is the divergence of row ``x`` from the
    current output law; the lower bracket is returned.

    The update ``r * exp(mu * D)`` uses an adaptive exponent: ``mu`` grows
    while the mutual information keeps increasing and falls back towards the
    plain step ``mu = 1``, which always increases it. Without this, channels
    with nearly identical rows have tiny divergences and crawl.
    """
    P = W.rows
    n = P.shape[0]
    pos = P > 0
    logP = np.where(pos, np.log(np.where(pos, P, 1.0)), 0.0)
    r = np.full(n, 1.0 / n)
    div = _divergences(r, P, pos, logP)
    mu = 1.0
    for _ in range(max_iter):
        top = div.max()
        e = np.exp(div - top)
        s = r @ e
        lower = top + np.log(s)
        if top - lower < tol:
            return float(max(lower, 0.0))
        info = r @ div
        while True:
            step = r * np.exp(mu * (div - top))
            step /= step.sum()
            new_div = _divergences(step, P, pos, logP)
            if mu == 1.0 or step @ new_div >= info:
                break
            mu = max(1.0, mu / 4)
        r, div = step, new_div
        mu = min(2 * mu, 1e8)
    raise NumericalError(f"Blahut-Arimoto did not reach gap {tol} in {max_iter} steps")
