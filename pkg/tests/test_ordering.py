import numpy as np
import pytest
from hypothesis import given, strategies as st

from chanorder.channel import Channel, bsc, channel_sum, compose, deterministic, identity
from chanorder.errors import DimensionError, PreconditionError
from chanorder.generate import degraded_pair, non_degraded_pair
from chanorder.ordering import (
    canonical_representative,
    characteristic,
    decompose_sum_point,
    find_separating_payoff,
    input_rank,
    is_input_degraded,
    is_input_equivalent,
    make_characteristic,
    product_hull_membership,
    similarity_distance,
)

from conftest import channels

MIDPOINT = Channel([[1, 0], [0, 1], [0.5, 0.5]])


def test_degradedness_examples():
    W = bsc(0.3)
    res = is_input_degraded(W, W)
    assert res.degraded
    np.testing.assert_allclose(compose(W, res.intertwiner).rows, W.rows, atol=1e-12)
    res = is_input_degraded(bsc(0.1), identity(2))
    assert res.degraded
    np.testing.assert_allclose(res.intertwiner.rows, bsc(0.1).rows, atol=1e-12)
    res = is_input_degraded(identity(2), bsc(0.1))
    assert not res.degraded
    ref = res.refutation
    h = ref.payoff
    row = identity(2).rows[ref.row_index]
    assert h @ row - (bsc(0.1).rows @ h).max() == pytest.approx(ref.gap)
    # normalised so the largest coefficient is 1: the gap is 0.1 in the e_y direction
    assert ref.gap == pytest.approx(0.1 * abs(h[0] - h[1]))


def test_degradedness_needs_common_outputs():
    with pytest.raises(DimensionError):
        is_input_degraded(identity(2), identity(3))


def test_characteristic_examples():
    C = characteristic(identity(3))
    assert np.array_equal(C.points, np.eye(3)[::-1])
    assert np.array_equal(characteristic(MIDPOINT).points, [[0, 1], [1, 0]])
    assert len(characteristic(Channel([[0.2, 0.8]] * 4))) == 1


def test_rank_examples():
    assert input_rank(identity(5)) == 5
    assert input_rank(Channel([[0.3, 0.7]] * 3)) == 1


def test_equivalence_examples():
    W = Channel([[0.7, 0.2, 0.1], [0.1, 0.1, 0.8], [0.3, 0.3, 0.4]])
    shuffled = Channel(W.rows[[2, 0, 1, 0]])
    assert is_input_equivalent(W, shuffled)
    assert is_input_equivalent(W, compose(W, deterministic([0, 1, 2, 2, 1], 3)))
    assert not is_input_equivalent(identity(2), bsc(0.1))


def test_canonical_representative_examples():
    assert np.array_equal(canonical_representative(identity(2)).rows, [[0, 1], [1, 0]])
    assert np.array_equal(canonical_representative(MIDPOINT).rows, [[0, 1], [1, 0]])
    W = Channel([[0.7, 0.3], [0.1, 0.9]])
    Wf = compose(W, deterministic([1, 0, 1], 2))
    assert canonical_representative(W) == canonical_representative(Wf)


def test_similarity_examples():
    assert similarity_distance(bsc(0.1), bsc(0.2)) == pytest.approx(0.1, abs=1e-7)
    assert similarity_distance(MIDPOINT, identity(2)) <= 1e-8
    C = characteristic(bsc(0.1))
    assert similarity_distance(C, bsc(0.1)) == 0


def test_separating_payoff_examples():
    ref = find_separating_payoff(identity(2), bsc(0.1))
    assert ref.gap > 0
    W = identity(3)
    W2 = Channel([[0.5, 0.5, 0], [0, 0.5, 0.5]])
    ref = find_separating_payoff(W, W2)
    assert ref.payoff @ W.rows[ref.row_index] >= (W2.rows @ ref.payoff).max() + ref.gap - 1e-12
    with pytest.raises(PreconditionError):
        find_separating_payoff(bsc(0.1), identity(2))


def test_sum_decomposition_examples():
    C1, C2 = characteristic(bsc(0.1)), characteristic(identity(3))
    dec = decompose_sum_point([0.5, 0.5, 0, 0, 0], C1, C2)
    assert dec.lam == 0 and dec.w2 is None
    np.testing.assert_allclose(dec.w1 @ C1.points, [0.5, 0.5])
    p1, p2 = C1.points[0], C2.points[2]
    dec = decompose_sum_point(np.concatenate([0.5 * p1, 0.5 * p2]), C1, C2)
    assert dec.lam == pytest.approx(0.5)
    np.testing.assert_allclose(dec.w1, [1, 0], atol=1e-12)
    np.testing.assert_allclose(dec.w2, [0, 0, 1], atol=1e-12)
    assert decompose_sum_point([1, 0, 0, 0, 0], C1, C2) is None


def test_product_membership_examples():
    C1, C2 = characteristic(bsc(0.1)), characteristic(bsc(0.3))
    assert product_hull_membership(np.kron(C1.points[1], C2.points[0]), C1, C2).inside
    E = characteristic(identity(2))
    res = product_hull_membership(np.full(4, 0.25), E, E)
    assert res.inside
    np.testing.assert_allclose(res.weights, [0.25] * 4, atol=1e-12)


def test_generators_of_pairs():
    W, W2, V = degraded_pair(4)
    np.testing.assert_allclose(compose(W2, V).rows, W.rows)
    W, W2, row = non_degraded_pair(4)
    assert not is_input_degraded(W, W2).degraded


@given(channels(max_outputs=3), st.integers(0, 2**31))
def test_intertwiner_reconstructs(W2, seed):
    rng = np.random.default_rng(seed)
    V = Channel(rng.dirichlet(np.ones(W2.input_size), size=rng.integers(1, 5)))
    W = compose(W2, V)
    res = is_input_degraded(W, W2)
    assert res.degraded
    assert np.abs(compose(W2, res.intertwiner).rows - W.rows).max() < 1e-7
    assert res.intertwiner.input_labels == W.input_labels


@given(channels(max_inputs=5, max_outputs=3))
def test_equivalence_round_trip(W):
    rep = canonical_representative(W)
    assert is_input_equivalent(W, rep)
    assert is_input_degraded(W, rep).degraded and is_input_degraded(rep, W).degraded
    assert similarity_distance(W, rep) <= 1e-8
    assert characteristic(rep) == characteristic(W)


@given(channels(max_inputs=3, max_outputs=3), channels(max_inputs=3, max_outputs=3))
def test_sum_characteristic_is_union(W1, W2):
    C = characteristic(channel_sum(W1, W2))
    assert len(C) == len(characteristic(W1)) + len(characteristic(W2))


def test_characteristic_is_lexsorted():
    C = make_characteristic(np.array([[0.2, 0.8], [0.9, 0.1], [0.5, 0.5]]))
    assert np.array_equal(C.points, [[0.2, 0.8], [0.5, 0.5], [0.9, 0.1]])
