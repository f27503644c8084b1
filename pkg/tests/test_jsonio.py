import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chanorder import jsonio
from chanorder.channel import bsc, channel_product, channel_sum, identity
from chanorder.coding import Decoder, Encoder
from chanorder.errors import ChanorderError
from chanorder.games import RandomizedGame
from chanorder.generate import gen_random_channel, random_decoder
from chanorder.ordering import characteristic, is_input_degraded

from conftest import channels


def round_trip(obj, to_json, from_json):
    text = jsonio.canonical_dumps(to_json(obj))
    back = from_json(json.loads(text))
    assert jsonio.canonical_dumps(to_json(back)) == text
    return back, text


def test_canonical_format():
    text = jsonio.canonical_dumps({"b": 1.0, "a": [0.1, 2, True, None], "c": 1e-20})
    assert text == '{"a":[0.10000000000000001,2,true,null],"b":1.0,"c":9.9999999999999995e-21}\n'
    with pytest.raises(ChanorderError):
        jsonio.canonical_dumps(float("nan"))


@given(channels(max_inputs=5, max_outputs=5))
def test_channel_round_trip_is_byte_stable(W):
    back, _ = round_trip(W, jsonio.channel_to_json, jsonio.channel_from_json)
    assert back == W


def test_labelled_channels_round_trip():
    for W in (channel_sum(bsc(0.1), identity(3)), channel_product(bsc(0.2), bsc(0.3))):
        back, _ = round_trip(W, jsonio.channel_to_json, jsonio.channel_from_json)
        assert back == W


def test_other_objects_round_trip():
    W = gen_random_channel(3, 3, 2)
    back, _ = round_trip(characteristic(W), jsonio.characteristic_to_json, jsonio.characteristic_from_json)
    assert back == characteristic(W)
    D = random_decoder(3, 2, 3, 1)
    back, text = round_trip(D, jsonio.decoder_to_json, jsonio.decoder_from_json)
    assert back == D and '"0,0":' in text
    E = Encoder(2, 2, [[0, 1], [1, 1]])
    assert round_trip(E, jsonio.encoder_to_json, jsonio.encoder_from_json)[0] == E
    G = RandomizedGame([[0.5, -1.0]], bsc(0.1))
    back, _ = round_trip(G, jsonio.game_to_json, jsonio.game_from_json)
    assert np.array_equal(back.payoff, G.payoff) and back.channel == G.channel
    for res in (is_input_degraded(bsc(0.1), identity(2)), is_input_degraded(identity(2), bsc(0.1))):
        back, _ = round_trip(res, jsonio.degradedness_to_json, jsonio.degradedness_from_json)
        assert back.degraded == res.degraded


def test_malformed_inputs():
    with pytest.raises(ChanorderError, match="missing"):
        jsonio.channel_from_json({"rows": [[1.0]]})
    with pytest.raises(ChanorderError):
        jsonio.channel_from_json({"input_size": 2, "output_labels": [0], "rows": [[1.0]]})
    with pytest.raises(ChanorderError):
        jsonio.decoder_from_json({"n": 1, "M": 2, "output_size": 2, "table": {"0": 1}})
    with pytest.raises(ChanorderError):
        jsonio.encoder_from_json({"n": 1, "M": 2, "table": {"0": [0]}})


@given(st.integers(1, 3), st.integers(1, 2), st.integers(1, 3), st.integers(0, 1000))
def test_decoder_round_trip(q, n, M, seed):
    D = Decoder(n, M, np.random.default_rng(seed).integers(0, M, size=q ** n), q)
    assert round_trip(D, jsonio.decoder_to_json, jsonio.decoder_from_json)[0] == D
