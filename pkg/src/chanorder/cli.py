"""``chanorder``: file-based front end to the channel-ordering toolkit.

Every object lives in its own JSON file (see ``jsonio``). Exit status is 0 on
success, 1 when an assertion fails (``verify``, ``check-bss``, ``intertwiner`` on a
non-degraded pair, numerical breakdown) and 2 on malformed input.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import jsonio
from .channel import channel_distance, channel_product, channel_sum, compose
from .coding import DEFAULT_CAP, capacity, pc, pe_decoder_ml, pe_opt
from .errors import NumericalError
from .games import REGION_CAP, achievable_region_vertices, check_bss, optimal_average_payoff
from .generate import gen_random_channel, random_decoder, random_game
from .geometry import DEFAULT_TOL, ToleranceConfig
from .ordering import (
    characteristic,
    input_rank,
    is_input_degraded,
    is_input_equivalent,
    similarity_distance,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_ASSERT, EXIT_INPUT = 0, 1, 2
SEED_ENV = "CHANORDER_SEED"


class InputError(ValueError):
    pass


def _seed(value):
    try:
        seed = int(value)
    except (TypeError, ValueError):
        raise InputError(f"seed must be an integer, got {value!r}") from None
    if not 0 <= seed < 2 ** 64:
        raise InputError("seed must be an unsigned 64-bit integer")
    return seed


def resolve_seed(flag):
    if flag is not None:
        return _seed(flag)
    env = os.environ.get(SEED_ENV)
    return _seed(env) if env not in (None, "") else 0


def _tolerances(tol):
    if tol is None:
        return DEFAULT_TOL
    return ToleranceConfig(feasibility_tol=tol, dedup_tol=tol)


def _channel(path):
    return jsonio.channel_from_json(jsonio.load(path))


def _floats(text):
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got {text!r}") from None


# each command returns (json payload, human text, exit code)

def cmd_validate(a, cfg):
    loaders = {"channel": (jsonio.channel_from_json, jsonio.channel_to_json),
               "characteristic": (jsonio.characteristic_from_json, jsonio.characteristic_to_json),
               "decoder": (jsonio.decoder_from_json, jsonio.decoder_to_json),
               "encoder": (jsonio.encoder_from_json, jsonio.encoder_to_json),
               "game": (jsonio.game_from_json, jsonio.game_to_json),
               "degradedness": (jsonio.degradedness_from_json, jsonio.degradedness_to_json)}
    parse, emit = loaders[a.kind]
    out = emit(parse(jsonio.load(a.file)))
    return out, jsonio.canonical_dumps(out).rstrip("\n"), EXIT_OK


def cmd_compose(a, cfg):
    out = jsonio.channel_to_json(compose(_channel(a.outer), _channel(a.inner)))
    return out, None, EXIT_OK


def cmd_sum(a, cfg):
    return jsonio.channel_to_json(channel_sum(_channel(a.lhs), _channel(a.rhs))), None, EXIT_OK


def cmd_product(a, cfg):
    return jsonio.channel_to_json(channel_product(_channel(a.lhs), _channel(a.rhs))), None, EXIT_OK


def cmd_distance(a, cfg):
    d = channel_distance(_channel(a.lhs), _channel(a.rhs))
    return {"distance": d}, repr(d), EXIT_OK


def cmd_degraded(a, cfg):
    res = is_input_degraded(_channel(a.lhs), _channel(a.rhs), cfg["tol"])
    out = jsonio.degradedness_to_json(res)
    if res.degraded:
        return out, "degraded", EXIT_OK
    ref = res.refutation
    return out, f"not degraded: row {ref.row_index} wins payoff {ref.payoff.tolist()} by {ref.gap!r}", EXIT_OK


def cmd_intertwiner(a, cfg):
    res = is_input_degraded(_channel(a.lhs), _channel(a.rhs), cfg["tol"])
    if not res.degraded:
        out = jsonio.degradedness_to_json(res)
        return out, f"no intertwiner: row {res.refutation.row_index} lies outside the hull", EXIT_ASSERT
    return jsonio.channel_to_json(res.intertwiner), None, EXIT_OK


def cmd_characteristic(a, cfg):
    return jsonio.characteristic_to_json(characteristic(_channel(a.channel), cfg["tol"])), None, EXIT_OK


def cmd_rank(a, cfg):
    k = input_rank(_channel(a.channel), cfg["tol"])
    return {"input_rank": k}, str(k), EXIT_OK


def cmd_equivalent(a, cfg):
    eq = is_input_equivalent(_channel(a.lhs), _channel(a.rhs), cfg["tol"])
    return {"equivalent": eq}, "equivalent" if eq else "not equivalent", EXIT_OK


def cmd_similarity(a, cfg):
    d = similarity_distance(_channel(a.lhs), _channel(a.rhs), cfg["tol"])
    return {"similarity_distance": d}, repr(d), EXIT_OK


def cmd_capacity(a, cfg):
    c = capacity(_channel(a.channel))
    bits = float(c / np.log(2))
    return {"capacity_nats": c, "capacity_bits": bits}, f"{c!r} nats ({bits!r} bits)", EXIT_OK


def cmd_pe_decoder(a, cfg):
    D = jsonio.decoder_from_json(jsonio.load(a.decoder))
    pe = pe_decoder_ml(_channel(a.channel), D, cfg["cap"])
    return {"error_probability": pe}, repr(pe), EXIT_OK


def cmd_pe_opt(a, cfg):
    pe = pe_opt(_channel(a.channel), a.n, a.M, cfg["cap"])
    return {"n": a.n, "M": a.M, "error_probability": pe}, repr(pe), EXIT_OK


def cmd_pc(a, cfg):
    W, D = _channel(a.channel), _channel(a.decoder)
    value, choice = pc(_floats(a.prior), W, D)
    encoder = [W.input_labels[int(x)] for x in choice]
    return ({"success_probability": value, "encoder": encoder},
            f"{value!r} with encoder {encoder}", EXIT_OK)


def cmd_game_opt(a, cfg):
    value, choice = optimal_average_payoff(jsonio.game_from_json(jsonio.load(a.game)))
    return {"value": value, "choice": [int(x) for x in choice]}, repr(value), EXIT_OK


def cmd_game_region(a, cfg):
    G = jsonio.game_from_json(jsonio.load(a.game))
    V = achievable_region_vertices(G, cfg["cap"], cfg["tol"].dedup_tol)
    text = "\n".join(" ".join(f"{v:.6f}" for v in row) for row in V)
    return {"vertices": V.tolist()}, text, EXIT_OK


def cmd_check_bss(a, cfg):
    report = check_bss(_channel(a.lhs), _channel(a.rhs), trials=a.trials, seed=cfg["seed"],
                       max_z=a.max_z, cap=cfg["cap"], tol=cfg["tol"])
    out = {"degraded": report.degraded, "passed": report.passed}
    if report.degraded:
        out["trials"] = [{"index": t.index, "opt_lhs": t.opt_lhs, "opt_rhs": t.opt_rhs,
                          "vertices_checked": t.vertices_checked, "vertices_outside": t.vertices_outside}
                         for t in report.trials]
        text = f"degraded; {sum(t.passed for t in report.trials)}/{len(report.trials)} games dominated"
    else:
        w = report.witness
        out["witness"] = {"row_index": w.row_index, "payoff": w.payoff.tolist(), "gap": w.gap,
                          "opt_lhs": w.opt_lhs, "opt_rhs": w.opt_rhs}
        text = f"not degraded; single-context game won by {w.opt_lhs - w.opt_rhs!r}"
    return out, text, EXIT_OK if report.passed else EXIT_ASSERT


def cmd_gen(a, cfg):
    rng = np.random.default_rng(cfg["seed"])
    paths = []
    for i in range(a.count):
        if a.kind == "channel":
            obj = jsonio.channel_to_json(gen_random_channel(a.inputs, a.outputs, rng))
        elif a.kind == "decoder":
            obj = jsonio.decoder_to_json(random_decoder(a.outputs, a.n, a.M, rng))
        else:
            W = gen_random_channel(a.inputs, a.outputs, rng)
            obj = jsonio.game_to_json(random_game(W, a.z_size, rng))
        if a.out is None:
            paths.append(obj)
            continue
        path = a.out if a.count == 1 else _numbered(a.out, i)
        jsonio.dump(obj, path)
        paths.append(path)
    if a.out is None:
        out = paths[0] if a.count == 1 else paths
        return out, None, EXIT_OK
    return {"written": paths}, "\n".join(paths), EXIT_OK


def _numbered(path, i):
    root, ext = os.path.splitext(path)
    return f"{root}_{i:03d}{ext or '.json'}"


def cmd_verify(a, cfg):
    results = run_suite(a.suite, cfg["seed"], workers=a.workers)
    ok = all(r.passed for r in results)
    out = {"suite": a.suite, "seed": cfg["seed"], "passed": ok, "checks": [r.to_json() for r in results]}
    text = "\n".join(r.line() for r in results)
    text += f"\n{a.suite}: {'all checks passed' if ok else 'FAILED'}"
    return out, text, EXIT_OK if ok else EXIT_ASSERT


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", default=None,
                        help=f"unsigned 64-bit seed (falls back to ${SEED_ENV}, then 0)")
    common.add_argument("--tol", type=float, default=None,
                        help="feasibility and deduplication tolerance (default 1e-9)")
    common.add_argument("--cap", type=float, default=None,
                        help="enumeration cap for codebooks and strategy profiles")
    common.add_argument("--format", choices=("human", "json"), default="human")

    parser = argparse.ArgumentParser(prog="chanorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def pair(p):
        p.add_argument("--lhs", required=True, help="channel file for W")
        p.add_argument("--rhs", required=True, help="channel file for W'")
        return p

    p = add("validate", cmd_validate, "parse a JSON object and print it canonically")
    p.add_argument("file")
    p.add_argument("--kind", default="channel",
                   choices=("channel", "characteristic", "decoder", "encoder", "game", "degradedness"))
    p = add("compose", cmd_compose, "V o W: feed W's output into V")
    p.add_argument("--outer", required=True, help="channel V")
    p.add_argument("--inner", required=True, help="channel W")
    pair(add("sum", cmd_sum, "block-diagonal sum of two channels"))
    pair(add("product", cmd_product, "parallel product of two channels"))
    pair(add("distance", cmd_distance, "half the largest row-wise L1 distance"))
    pair(add("degraded", cmd_degraded, "is W input-degraded from W'?"))
    pair(add("intertwiner", cmd_intertwiner, "V with W = W' o V, exit 1 if none exists"))
    add("characteristic", cmd_characteristic, "sorted extreme rows").add_argument("channel")
    add("rank", cmd_rank, "number of extreme rows").add_argument("channel")
    pair(add("equivalent", cmd_equivalent, "do W and W' have the same characteristic?"))
    pair(add("similarity", cmd_similarity, "Hausdorff TV distance between the row hulls"))
    add("capacity", cmd_capacity, "Shannon capacity by Blahut-Arimoto").add_argument("channel")
    p = add("pe-decoder", cmd_pe_decoder, "error probability of a decoder under ML encoding")
    p.add_argument("--channel", required=True)
    p.add_argument("--decoder", required=True)
    p = add("pe-opt", cmd_pe_opt, "optimal (n, M) block error probability")
    p.add_argument("--channel", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p = add("pc", cmd_pc, "success probability of the best encoder for prior p and decoder D")
    p.add_argument("--channel", required=True)
    p.add_argument("--decoder", required=True, help="decoder as a channel file from outputs to messages")
    p.add_argument("--prior", required=True, help="comma-separated message probabilities")
    add("game-opt", cmd_game_opt, "optimal average payoff of a randomized game").add_argument("game")
    add("game-region", cmd_game_region, "vertices of the achievable payoff region").add_argument("game")
    p = pair(add("check-bss", cmd_check_bss, "random game comparison of two channels"))
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-z", type=int, default=3)
    p = add("gen", cmd_gen, "write seeded random channels, decoders or games")
    p.add_argument("kind", choices=("channel", "decoder", "game"))
    p.add_argument("--inputs", type=int, default=2)
    p.add_argument("--outputs", type=int, default=2)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--z-size", type=int, default=2)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=None, help="output file; numbered when --count > 1; stdout if omitted")
    p = add("verify", cmd_verify, "run a seeded verification suite")
    p.add_argument("suite", choices=tuple(SUITES))
    p.add_argument("--workers", type=int, default=1)
    return parser


def _report_error(fmt, kind, message, code):
    if fmt == "json":
        sys.stdout.write(jsonio.canonical_dumps({"error": {"type": kind, "message": message, "exit_code": code}}))
    else:
        print(f"chanorder: {kind}: {message}", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = {"seed": resolve_seed(args.seed), "tol": _tolerances(args.tol),
               "cap": DEFAULT_CAP if args.cap is None else args.cap}
        if args.command in ("game-region", "check-bss") and args.cap is None:
            cfg["cap"] = REGION_CAP
        payload, text, code = args.func(args, cfg)
    except NumericalError as exc:
        return _report_error(args.format, type(exc).__name__, str(exc), EXIT_ASSERT)
    except (ValueError, KeyError, TypeError, IndexError, OSError, json.JSONDecodeError) as exc:
        return _report_error(args.format, type(exc).__name__, str(exc), EXIT_INPUT)
    if args.format == "json":
        sys.stdout.write(jsonio.canonical_dumps(payload))
    else:
        print(jsonio.canonical_dumps(payload).rstrip("\n") if text is None else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
