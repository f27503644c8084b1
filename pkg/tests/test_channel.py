import numpy as np
import pytest
from hypothesis import given

from chanorder.channel import (
    Channel,
    bsc,
    channel_distance,
    channel_product,
    channel_sum,
    compose,
    deterministic,
    identity,
    validate,
)
from chanorder.errors import ChannelError, DimensionError
from chanorder.generate import gen_random_channel

from conftest import channels


def test_validate_examples():
    assert validate([[1, 0], [0, 1]]) == identity(2)
    assert validate([[0.5, 0.5]]).shape == (1, 2)
    with pytest.raises(ChannelError, match="sums to"):
        validate([[0.6, 0.6]])
    with pytest.raises(ChannelError):
        validate([[1.1, -0.1]])


def test_small_drift_is_renormalised():
    W = validate([[0.5, 0.5 + 5e-10]])
    assert abs(W.rows.sum() - 1) < 1e-15
    exact = validate([[0.1, 0.9]])
    assert exact.rows[0, 0] == 0.1


def test_rows_are_read_only():
    with pytest.raises(ValueError):
        bsc(0.1).rows[0, 0] = 1


def test_compose_examples():
    W = bsc(0.3)
    assert compose(identity(2), W) == W
    f, g = [1, 0, 1], [2, 2]
    assert compose(deterministic(g, 3), deterministic(f, 2)) == deterministic([g[y] for y in f], 3)
    np.testing.assert_allclose(compose(bsc(0.2), bsc(0.1)).rows, bsc(0.26).rows, atol=1e-15)
    with pytest.raises(DimensionError):
        compose(identity(3), bsc(0.1))


def test_deterministic_examples():
    assert np.array_equal(deterministic([0, 1], 2).rows, np.eye(2))
    assert np.array_equal(deterministic([1, 1, 1], 2).rows, [[0, 1]] * 3)
    assert np.array_equal(deterministic({"a": "y", "b": "x"}, ["x", "y"]).rows, [[0, 1], [1, 0]])
    with pytest.raises(ChannelError):
        deterministic([0, 2], 2)


def test_distance_examples():
    assert channel_distance(bsc(0.1), bsc(0.1)) == 0
    assert channel_distance(identity(2), deterministic([1, 0], 2)) == 1
    assert channel_distance(bsc(0.1), bsc(0.2)) == pytest.approx(0.1)
    with pytest.raises(DimensionError):
        channel_distance(identity(2), identity(3))


def test_sum_examples():
    S = channel_sum(Channel([[1.0]]), Channel([[1.0]]))
    assert np.array_equal(S.rows, np.eye(2))
    assert S.output_labels == (("L", 0), ("R", 0))
    S = channel_sum(bsc(0.1), bsc(0.2))
    assert S.shape == (4, 4)
    assert np.array_equal(S.rows[:2, :2], bsc(0.1).rows) and np.all(S.rows[:2, 2:] == 0)
    assert np.array_equal(S.rows[2:, 2:], bsc(0.2).rows) and np.all(S.rows[2:, :2] == 0)


def test_product_examples():
    W = bsc(0.3)
    P = channel_product(W, Channel([[1.0]]))
    assert np.array_equal(P.rows, W.rows)
    assert P.output_labels == ((0, 0), (1, 0))
    assert np.array_equal(channel_product(identity(2), identity(3)).rows, np.eye(6))
    assert channel_product(bsc(0.1), bsc(0.1)).rows[0, 0] == pytest.approx(0.81)


def test_gen_random_channel():
    assert np.array_equal(gen_random_channel(1, 1, 4).rows, [[1.0]])
    assert gen_random_channel(2, 2, 9) == gen_random_channel(2, 2, 9)
    assert np.abs(gen_random_channel(3, 3, 1).rows.sum(axis=1) - 1).max() < 1e-12
    with pytest.raises(ValueError):
        gen_random_channel(0, 2, 1)


@given(channels(), channels())
def test_distance_zero_iff_equal(W, V):
    if W.shape == V.shape:
        d = channel_distance(W, V)
        assert (d == 0) == np.array_equal(W.rows, V.rows)
        assert 0 <= d <= 1


@given(channels(max_outputs=3), channels(max_outputs=3))
def test_product_row_is_outer_product(W1, W2):
    P = channel_product(W1, W2)
    x1, x2 = W1.input_size - 1, W2.input_size - 1
    row = P.rows[x1 * W2.input_size + x2].reshape(W1.output_size, W2.output_size)
    np.testing.assert_allclose(row, np.outer(W1.rows[x1], W2.rows[x2]), atol=1e-15)
    assert P.input_labels[x1 * W2.input_size + x2] == (x1, x2)
