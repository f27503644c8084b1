"""On-disk JSON forms and a canonical serializer.

Canonical mode sorts keys, prints floats with 17 significant digits and ends
with a single LF, so that re-serializing a parsed document reproduces it byte
for byte.
"""

import json
import math

import numpy as np

from .channel import Channel
from .coding import Decoder, Encoder, index_tuple, tuple_index
from .errors import ChanorderError
from .games import RandomizedGame
from .ordering import DegradednessResult, Refutation, make_characteristic


def _format_float(x):
    if not math.isfinite(x):
        raise ChanorderError("cannot serialize non-finite float")
    s = format(x, ".17g")
    if "." not in s and "e" not in s:
        s += ".0"
    return s


def _emit(obj, out):
    if obj is None or isinstance(obj, (bool, np.bool_)):
        out.append(json.dumps(None if obj is None else bool(obj)))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _emit(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _emit(item, out)
        out.append("]")
    else:
        raise ChanorderError(f"cannot serialize {type(obj).__name__}")


def canonical_dumps(obj):
    out = []
    _emit(obj, out)
    return "".join(out) + "\n"


def _label(value):
    """JSON arrays come back as lists; labels must be hashable tuples."""
    if isinstance(value, list):
        return tuple(_label(v) for v in value)
    return value


def _require(d, keys, what):
    if not isinstance(d, dict):
        raise ChanorderError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise ChanorderError(f"{what} is missing {', '.join(missing)}")


def channel_to_json(W):
    d = {"input_size": W.input_size, "output_labels": list(W.output_labels), "rows": W.rows.tolist()}
    if W.input_labels != tuple(range(W.input_size)):
        d["input_labels"] = list(W.input_labels)
    return d


def channel_from_json(d):
    _require(d, ("input_size", "output_labels", "rows"), "channel")
    rows = d["rows"]
    if len(rows) != d["input_size"]:
        raise ChanorderError(f"input_size is {d['input_size']} but {len(rows)} rows given")
    inputs = d.get("input_labels")
    return Channel(rows, [_label(y) for y in d["output_labels"]],
                   None if inputs is None else [_label(x) for x in inputs])


def characteristic_to_json(C):
    return {"output_labels": list(C.output_labels), "points": C.points.tolist()}


def characteristic_from_json(d):
    _require(d, ("output_labels", "points"), "characteristic")
    return make_characteristic(np.array(d["points"], dtype=float), [_label(y) for y in d["output_labels"]])


def degradedness_to_json(res):
    if res.degraded:
        return {"degraded": True, "intertwiner": channel_to_json(res.intertwiner)}
    ref = res.refutation
    return {"degraded": False, "refutation": {
        "row_index": ref.row_index, "payoff": ref.payoff.tolist(), "gap": ref.gap}}


def degradedness_from_json(d):
    _require(d, ("degraded",), "degradedness result")
    if d["degraded"]:
        return DegradednessResult(True, intertwiner=channel_from_json(d["intertwiner"]))
    r = d["refutation"]
    return DegradednessResult(False, refutation=Refutation(int(r["row_index"]), np.array(r["payoff"], dtype=float), float(r["gap"])))


def _tuple_key(symbols):
    return ",".join(str(int(s)) for s in symbols)


def _parse_key(key):
    return tuple(int(s) for s in key.split(",")) if key else ()


def decoder_to_json(D):
    table = {_tuple_key(index_tuple(i, D.output_size, D.n)): int(m) for i, m in enumerate(D.table)}
    return {"n": D.n, "M": D.M, "output_size": D.output_size, "table": table}


def decoder_from_json(d):
    _require(d, ("n", "M", "output_size", "table"), "decoder")
    n, q = int(d["n"]), int(d["output_size"])
    table = np.full(q ** n, -1, dtype=np.intp)
    for key, m in d["table"].items():
        ys = _parse_key(key)
        if len(ys) != n or min(ys) < 0 or max(ys) >= q:
            raise ChanorderError(f"bad decoder key {key!r}")
        table[tuple_index(ys, q)] = int(m)
    if (table < 0).any():
        raise ChanorderError("decoder table is not defined on every output tuple")
    return Decoder(n, int(d["M"]), table, q)


def encoder_to_json(E):
    return {"n": E.n, "M": E.M, "table": {str(m): [int(x) for x in word] for m, word in enumerate(E.table)}}


def encoder_from_json(d):
    _require(d, ("n", "M", "table"), "encoder")
    M = int(d["M"])
    try:
        words = [d["table"][str(m)] for m in range(M)]
    except KeyError as exc:
        raise ChanorderError(f"encoder has no codeword for message {exc}") from None
    return Encoder(int(d["n"]), M, words)


def game_to_json(G):
    return {"z_size": G.z_size, "payoff": G.payoff.tolist(), "channel": channel_to_json(G.channel)}


def game_from_json(d):
    _require(d, ("z_size", "payoff", "channel"), "game")
    G = RandomizedGame(d["payoff"], channel_from_json(d["channel"]))
    if G.z_size != d["z_size"]:
        raise ChanorderError("z_size disagrees with the payoff matrix")
    return G


def load(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ChanorderError(f"{path}: {exc}") from None


def dump(obj, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_dumps(obj))

