import json

import numpy as np
import pytest

from chanorder import jsonio
from chanorder.channel import bsc, identity
from chanorder.cli import main


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, W in (("bsc01", bsc(0.1)), ("bsc02", bsc(0.2)), ("id2", identity(2))):
        paths[name] = str(tmp_path / f"{name}.json")
        jsonio.dump(jsonio.channel_to_json(W), paths[name])
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_degraded_json(files, capsys):
    code, out = run(capsys, "degraded", "--lhs", files["bsc01"], "--rhs", files["id2"], "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["degraded"] is True
    np.testing.assert_allclose(doc["intertwiner"]["rows"], [[0.9, 0.1], [0.1, 0.9]], atol=1e-12)


def test_similarity(files, capsys):
    code, out = run(capsys, "similarity", "--lhs", files["bsc01"], "--rhs", files["bsc02"], "--format", "json")
    assert code == 0 and json.loads(out)["similarity_distance"] == pytest.approx(0.1, abs=1e-7)


def test_intertwiner_exit_codes(files, capsys):
    assert run(capsys, "intertwiner", "--lhs", files["bsc01"], "--rhs", files["id2"])[0] == 0
    assert run(capsys, "intertwiner", "--lhs", files["id2"], "--rhs", files["bsc01"])[0] == 1


def test_malformed_input_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"input_size": 1, "output_labels": [0, 1], "rows": [[0.6, 0.6]]}')
    code, out = run(capsys, "rank", str(bad), "--format", "json")
    assert code == 2 and json.loads(out)["error"]["type"] == "ChannelError"
    assert run(capsys, "rank", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "rank", str(bad), "--seed", "-1")[0] == 2


def test_each_command_runs(files, tmp_path, capsys):
    game = str(tmp_path / "g.json")
    assert run(capsys, "gen", "game", "--seed", "5", "--out", game)[0] == 0
    dec = str(tmp_path / "d.json")
    assert run(capsys, "gen", "decoder", "--outputs", "2", "--n", "2", "--out", dec)[0] == 0
    a, b = files["bsc01"], files["id2"]
    for argv in (["validate", a], ["validate", game, "--kind", "game"], ["compose", "--outer", a, "--inner", b],
                 ["sum", "--lhs", a, "--rhs", b], ["product", "--lhs", a, "--rhs", b],
                 ["distance", "--lhs", a, "--rhs", b], ["characteristic", a], ["rank", a],
                 ["equivalent", "--lhs", a, "--rhs", b], ["capacity", a],
                 ["pe-decoder", "--channel", a, "--decoder", dec], ["pe-opt", "--channel", a, "--n", "2", "--M", "2"],
                 ["pc", "--channel", a, "--decoder", b, "--prior", "0.5,0.5"], ["game-opt", game],
                 ["game-region", game], ["check-bss", "--lhs", a, "--rhs", b, "--trials", "3"],
                 ["check-bss", "--lhs", b, "--rhs", a]):
        for fmt in ("human", "json"):
            code, out = run(capsys, *argv, "--format", fmt)
            assert code == 0, argv
            if fmt == "json":
                json.loads(out)


def test_pc_value(files, capsys):
    code, out = run(capsys, "pc", "--channel", files["bsc01"], "--decoder", files["id2"],
                    "--prior", "0.5,0.5", "--format", "json")
    assert json.loads(out)["success_probability"] == pytest.approx(0.9)


def test_gen_is_seeded(tmp_path, capsys, monkeypatch):
    outs = []
    for _ in range(2):
        outs.append(run(capsys, "gen", "channel", "--inputs", "3", "--outputs", "4", "--seed", "9")[1])
    assert outs[0] == outs[1]
    monkeypatch.setenv("CHANORDER_SEED", "9")
    assert run(capsys, "gen", "channel", "--inputs", "3", "--outputs", "4")[1] == outs[0]
    run(capsys, "gen", "channel", "--count", "3", "--out", str(tmp_path / "c.json"))
    assert sorted(p.name for p in tmp_path.iterdir()) == ["c_000.json", "c_001.json", "c_002.json"]


def test_verify_channel_suite(capsys):
    code, out = run(capsys, "verify", "channel", "--seed", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["seed"] == 3


@pytest.mark.slow
def test_verify_all(capsys):
    code, out = run(capsys, "verify", "all", "--seed", "7", "--workers", "4")
    assert code == 0, out
