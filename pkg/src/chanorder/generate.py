"""Seeded random channels, maps, decoders and games.

Every function takes either an integer seed or a ``numpy.random.Generator``;
the same seed always yields the same object.
"""

import numpy as np

from .channel import Channel, compose
from .coding import Decoder
from .errors import ChanorderError
from .games import RandomizedGame


def rng_for(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_distribution(size, seed):
    """Uniform draw from the simplex via normalised exponentials."""
    e = rng_for(seed).exponential(size=size)
    return e / e.sum()


def gen_random_channel(inputs, outputs, seed):
    if inputs < 1 or outputs < 1:
        raise ChanorderError("channel sizes must be at least 1")
    rng = rng_for(seed)
    e = rng.exponential(size=(inputs, outputs))
    return Channel(e / e.sum(axis=1, keepdims=True))


def random_surjection(domain, codomain, seed):
    """A map ``range(domain) -> range(codomain)`` hitting every target."""
    if domain < codomain:
        raise ChanorderError("a surjection needs domain >= codomain")
    rng = rng_for(seed)
    f = np.concatenate([np.arange(codomain), rng.integers(0, codomain, size=domain - codomain)])
    return rng.permutation(f).tolist()


def random_decoder(output_size, n, M, seed):
    rng = rng_for(seed)
    return Decoder(n, M, rng.integers(0, M, size=output_size ** n), output_size)


def random_game(channel, z_size, seed, low=-1.0, high=1.0):
    rng = rng_for(seed)
    return RandomizedGame(rng.uniform(low, high, size=(z_size, channel.output_size)), channel)


def degraded_pair(seed, max_inputs=5, max_outputs=4, min_outputs=1):
    """``(W, W2, V)`` with ``W = W2 o V``."""
    rng = rng_for(seed)
    ny = int(rng.integers(min_outputs, max_outputs + 1))
    W2 = gen_random_channel(int(rng.integers(1, max_inputs + 1)), ny, rng)
    V = gen_random_channel(int(rng.integers(1, max_inputs + 1)), W2.input_size, rng)
    return compose(W2, V), W2, V


def non_degraded_pair(seed, max_inputs=5, max_outputs=4):
    """``(W, W2, row)`` where row ``row`` of ``W`` is planted outside the hull of ``W2``.

    The planted row is pulled towards a vertex ``e_y`` of the simplex on which
    every row of ``W2`` puts mass below the planted row's, so ``e_y`` itself
    separates it.
    """
    rng = rng_for(seed)
    ny = int(rng.integers(2, max_outputs + 1))
    W, W2, _ = degraded_pair(rng, max_inputs, ny, min_outputs=ny)
    y = int(rng.integers(ny))
    top = W2.rows[:, y].max()
    target = top + (1.0 - top) * rng.uniform(0.2, 1.0)
    rest = random_distribution(ny, rng)
    rest[y] = 0.0
    rest = rest / rest.sum() if rest.sum() > 0 else rest
    planted = (1.0 - target) * rest
    planted[y] = target
    row = int(rng.integers(W.input_size))
    rows = W.rows.copy()
    rows[row] = planted
    return Channel(rows, W.output_labels), W2, row
