"""Randomized games played through a channel, and a desk-scale check of the
equivalence between degradedness, payoff-region inclusion and optimal-payoff
domination.

A strategy is a channel from contexts ``Z`` to inputs ``X``. Payoff vectors are
affine in the strategy, so the achievable region is the hull of the payoff
vectors of the ``|X|**|Z|`` deterministic strategies.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from .channel import Channel
from .errors import DimensionError, EnumerationCapError
from .geometry import DEFAULT_TOL, dedup_indices, hull_membership
from .ordering import _same_outputs, is_input_degraded

REGION_CAP = 10**5
PAYOFF_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class RandomizedGame:
    payoff: np.ndarray
    channel: Channel

    def __post_init__(self):
        l = np.array(self.payoff, dtype=float)
        if l.ndim != 2 or l.shape[0] == 0:
            raise DimensionError("payoff must be a nonempty |Z| x |Y| matrix")
        if l.shape[1] != self.channel.output_size:
            raise DimensionError(f"payoff has {l.shape[1]} columns, channel has {self.channel.output_size} outputs")
        if not np.all(np.isfinite(l)):
            raise DimensionError("payoff entries must be finite")
        l.flags.writeable = False
        object.__setattr__(self, "payoff", l)

    @property
    def z_size(self):
        return self.payoff.shape[0]

    def expected_payoffs(self):
        """``(|X|, |Z|)`` matrix of expected payoff for input ``x`` in context ``z``."""
        return self.channel.rows @ self.payoff.T

    def with_channel(self, channel):
        return RandomizedGame(self.payoff, channel)


def _strategy_matrix(S, game):
    S = S.rows if isinstance(S, Channel) else np.asarray(S, dtype=float)
    if S.shape != (game.z_size, game.channel.input_size):
        raise DimensionError(f"strategy must be {game.z_size} x {game.channel.input_size}")
    return S


def payoff_vector(S, game):
    """Expected payoff in each context under strategy ``S``."""
    S = _strategy_matrix(S, game)
    return (S * game.expected_payoffs().T).sum(axis=1)


def optimal_average_payoff(game):
    """Best context-averaged payoff and a deterministic strategy achieving it.

    The strategy is returned as the chosen input per context, lowest index on ties.
    """
    V = game.expected_payoffs()
    choice = np.argmax(V, axis=0)
    return float(V[choice, np.arange(game.z_size)].mean()), choice


def deterministic_strategy(choice, input_size):
    S = np.zeros((len(choice), input_size))
    S[np.arange(len(choice)), choice] = 1.0
    return Channel(S)


def achievable_region_vertices(game, cap=REGION_CAP, dedup_tol=1e-9):
    """Payoff vectors of all deterministic strategies, deduplicated in enumeration order."""
    nx, nz = game.channel.input_size, game.z_size
    if nx ** nz > cap:
        raise EnumerationCapError(f"{nx}**{nz} deterministic strategies exceed cap {cap}")
    V = game.expected_payoffs()
    choices = np.array(list(itertools.product(range(nx), repeat=nz)), dtype=np.intp)
    vectors = V[choices, np.arange(nz)]
    return vectors[dedup_indices(vectors, dedup_tol)]


def region_contains(game, v, cap=REGION_CAP, tol=DEFAULT_TOL):
    return hull_membership(v, achievable_region_vertices(game, cap, tol.dedup_tol), tol)


@dataclass
class GameTrial:
    index: int
    payoff: np.ndarray
    opt_lhs: float
    opt_rhs: float
    vertices_checked: int
    vertices_outside: int

    @property
    def passed(self):
        return self.vertices_outside == 0 and self.opt_lhs <= self.opt_rhs + PAYOFF_SLACK


@dataclass
class Witness:
    row_index: int
    payoff: np.ndarray
    gap: float
    opt_lhs: float
    opt_rhs: float

    @property
    def passed(self):
        return self.opt_lhs > self.opt_rhs + self.gap * (1 - 1e-6)


@dataclass
class BssReport:
    degraded: bool
    trials: list = field(default_factory=list)
    witness: Witness | None = None

    @property
    def passed(self):
        if self.degraded:
            return all(t.passed for t in self.trials)
        return self.witness is not None and self.witness.passed


def check_bss(W, W2, trials=20, seed=0, max_z=3, cap=REGION_CAP, tol=DEFAULT_TOL):
    """Check region inclusion and payoff domination when ``W`` is degraded from
    ``W2``; otherwise build the single-context game ``W`` wins outright.
    """
    _same_outputs(W, W2)
    res = is_input_degraded(W, W2, tol)
    report = BssReport(res.degraded)
    if not res.degraded:
        ref = res.refutation
        game = RandomizedGame(ref.payoff[None, :], W)
        report.witness = Witness(ref.row_index, ref.payoff, ref.gap,
                                 optimal_average_payoff(game)[0],
                                 optimal_average_payoff(game.with_channel(W2))[0])
        return report
    rng = np.random.default_rng(seed)
    for i in range(trials):
        nz = int(rng.integers(1, max_z + 1))
        game = RandomizedGame(rng.uniform(-1.0, 1.0, size=(nz, W.output_size)), W)
        other = game.with_channel(W2)
        region = achievable_region_vertices(other, cap, tol.dedup_tol)
        verts = achievable_region_vertices(game, cap, tol.dedup_tol)
        outside = sum(not hull_membership(v, region, tol).inside for v in verts)
        report.trials.append(GameTrial(i, game.payoff, optimal_average_payoff(game)[0],
                                       optimal_average_payoff(other)[0], len(verts), outside))
    return report
