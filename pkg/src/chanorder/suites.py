"""Seeded verification suites behind ``chanorder verify`` and the acceptance tests.

Every case draws from its own generator keyed by ``(seed, tag, index)``, so a
check gives the same answer whether it runs alone, in a different order or
in a worker process. Checks that share a tag see the same instances; the
decoder checks reuse the degraded pairs of the soundness check that way.
"""

import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import oracles
from .channel import (
    Channel,
    bsc,
    channel_distance,
    channel_product,
    channel_sum,
    compose,
    deterministic,
)
from .coding import capacity, pc, pe_decoder_ml, pe_opt
from .games import (
    RandomizedGame,
    achievable_region_vertices,
    check_bss,
    optimal_average_payoff,
    payoff_vector,
)
from .generate import (
    degraded_pair,
    gen_random_channel,
    non_degraded_pair,
    random_decoder,
    random_distribution,
    random_surjection,
)
from .geometry import (
    convex_extreme_points,
    hausdorff_tv,
    hull_membership,
)
from .ordering import (
    canonical_representative,
    characteristic,
    decompose_sum_point,
    input_rank,
    is_input_degraded,
    is_input_equivalent,
    product_generators,
    product_hull_membership,
    similarity_distance,
)

MAX_LISTED_FAILURES = 5


def case_rng(seed, tag, i):
    return np.random.default_rng([int(seed), zlib.crc32(tag.encode()), int(i)])


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    worst: float = 0.0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, what):
        self.failures.append(what)

    def observe(self, value):
        self.worst = max(self.worst, float(value))

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.cases} cases, worst {self.worst:.3g}"
        if self.notes:
            text += "; " + "; ".join(self.notes)
        if self.failures:
            shown = ", ".join(str(f) for f in self.failures[:MAX_LISTED_FAILURES])
            text += f"; {len(self.failures)} failing ({shown})"
        return text

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "worst": self.worst,
                "notes": list(self.notes), "failures": [str(f) for f in self.failures]}


def _surjective_pullback(W, rng, extra=2):
    """``W o D_f`` for a random surjection ``f`` onto the inputs of ``W``."""
    f = random_surjection(W.input_size + int(rng.integers(0, extra + 1)), W.input_size, rng)
    return compose(W, deterministic(f, W.input_size))


def _random_channel(rng, max_inputs, outputs, min_inputs=1):
    return gen_random_channel(int(rng.integers(min_inputs, max_inputs + 1)), outputs, rng)


# acceptance criteria --------------------------------------------------------

def degradedness_soundness(seed, count=200):
    r = CheckResult("C1 degradedness soundness: W = W2 o V is detected and V recovered")
    for i in range(count):
        W, W2, _ = degraded_pair(case_rng(seed, "pairs", i))
        res = is_input_degraded(W, W2)
        r.cases += 1
        if not res.degraded:
            r.fail(f"pair {i} reported not degraded")
            continue
        d = channel_distance(compose(W2, res.intertwiner), W)
        r.observe(d)
        if d > 1e-7:
            r.fail(f"pair {i}: reconstruction off by {d:.3g}")
    return r


def degradedness_refutation(seed, count=200):
    r = CheckResult("C2 refutation: planted rows give a strict separating payoff and a losing game")
    for i in range(count):
        W, W2, row = non_degraded_pair(case_rng(seed, "planted", i))
        r.cases += 1
        if hull_membership(W.rows[row], W2.rows).inside:
            r.fail(f"pair {i}: planted row not certified outside")
            continue
        res = is_input_degraded(W, W2)
        if res.degraded:
            r.fail(f"pair {i}: reported degraded")
            continue
        ref = res.refutation
        margin = ref.payoff @ W.rows[ref.row_index] - (W2.rows @ ref.payoff).max()
        r.observe(abs(margin - ref.gap))
        if not (ref.gap > 0 and margin >= ref.gap - 1e-7):
            r.fail(f"pair {i}: gap {ref.gap:.3g} vs margin {margin:.3g}")
        report = check_bss(W, W2)
        if report.degraded or not report.passed:
            r.fail(f"pair {i}: no violating game")
    return r


def _decoder_shapes(rng):
    return int(rng.integers(1, 3)), int(rng.integers(1, 4))


def decoder_monotonicity(seed, count=200, decoders=20):
    r = CheckResult("C3 decoders: Pe(W2, D) <= Pe(W, D), equality on equivalent pairs")
    eq_worst = 0.0
    for i in range(count):
        W, W2, _ = degraded_pair(case_rng(seed, "pairs", i))
        rng = case_rng(seed, "decoders", i)
        Wf = _surjective_pullback(W, rng)
        for j in range(decoders):
            n, M = _decoder_shapes(rng)
            D = random_decoder(W.output_size, n, M, rng)
            pw, pw2, pwf = pe_decoder_ml(W, D), pe_decoder_ml(W2, D), pe_decoder_ml(Wf, D)
            r.cases += 1
            r.observe(pw2 - pw)
            eq_worst = max(eq_worst, abs(pw - pwf))
            if pw2 > pw + 1e-9:
                r.fail(f"pair {i} decoder {j}: {pw2:.12g} > {pw:.12g}")
            if abs(pw - pwf) > 1e-9:
                r.fail(f"pair {i} decoder {j}: equivalent pair differs by {abs(pw - pwf):.3g}")
    r.notes.append(f"worst equivalence gap {eq_worst:.3g}")
    return r


def pc_domination(seed, count=200, draws=1000):
    r = CheckResult("C4 Pc(p, W, D) <= Pc(p, W2, D) on degraded pairs")
    r.worst = -np.inf
    for i in range(count):
        W, W2, _ = degraded_pair(case_rng(seed, "pairs", i))
        rng = case_rng(seed, "pc", i)
        for j in range(draws):
            u = int(rng.integers(1, 5))
            p = random_distribution(u, rng)
            D = gen_random_channel(W.output_size, u, rng)
            a, b = pc(p, W, D)[0], pc(p, W2, D)[0]
            r.cases += 1
            r.observe(a - b)
            if a > b + 1e-9:
                r.fail(f"pair {i} draw {j}: {a:.12g} > {b:.12g}")
    return r


def game_domination(seed, pairs=50, games=20):
    r = CheckResult("C5 games: region inclusion and payoff domination, violating game otherwise")
    vertices = 0
    for i in range(pairs):
        W, W2, _ = degraded_pair(case_rng(seed, "bss-pairs", i), max_inputs=4)
        report = check_bss(W, W2, trials=games, seed=case_rng(seed, "bss-games", i))
        r.cases += len(report.trials)
        vertices += sum(t.vertices_checked for t in report.trials)
        for t in report.trials:
            r.observe(t.opt_lhs - t.opt_rhs)
        if not report.degraded or not report.passed:
            bad = [t.index for t in report.trials if not t.passed]
            r.fail(f"degraded pair {i}: trials {bad}")
    for i in range(pairs):
        W, W2, _ = non_degraded_pair(case_rng(seed, "bss-planted", i))
        report = check_bss(W, W2)
        r.cases += 1
        w = report.witness
        if w is None or not report.passed:
            r.fail(f"planted pair {i}: no violating game")
            continue
        mismatch = abs((w.opt_lhs - w.opt_rhs) - w.gap)
        if mismatch > 1e-7:
            r.fail(f"planted pair {i}: payoff gap {w.opt_lhs - w.opt_rhs:.3g} vs refutation gap {w.gap:.3g}")
    r.notes.append(f"{vertices} region vertices checked")
    return r


def _equivalent_variant(W, rng):
    """A channel input-equivalent to ``W`` built one of three ways."""
    kind = int(rng.integers(3))
    if kind == 0:
        return _surjective_pullback(W, rng)
    if kind == 1:
        idx = np.concatenate([rng.permutation(W.input_size), rng.integers(0, W.input_size, size=2)])
        return Channel(W.rows[idx], W.output_labels)
    mix = random_distribution(W.input_size, rng) @ W.rows
    return Channel(np.vstack([W.rows, mix])[rng.permutation(W.input_size + 1)], W.output_labels)


def similarity_metric(seed, triples=300, zero_pairs=200, domination_pairs=1000, grid_pairs=50):
    r = CheckResult("C6 similarity metric: closed form, axioms, zero set, domination, grid oracle")
    bsc_value = similarity_distance(bsc(0.1), bsc(0.2))
    r.cases += 1
    r.notes.append(f"d(BSC(0.1), BSC(0.2)) = {bsc_value:.12g}")
    if abs(bsc_value - 0.1) > 1e-7:
        r.fail(f"BSC pair gives {bsc_value!r}")

    tri_worst = 0.0
    for i in range(triples):
        rng = case_rng(seed, "sim-triples", i)
        A, B, C = (characteristic(_random_channel(rng, 4, 3)) for _ in range(3))
        ab, ba = similarity_distance(A, B), similarity_distance(B, A)
        ac, bc = similarity_distance(A, C), similarity_distance(B, C)
        r.cases += 1
        tri_worst = max(tri_worst, ac - ab - bc)
        if ab != ba:
            r.fail(f"triple {i}: asymmetric {ab!r} vs {ba!r}")
        if ac > ab + bc + 1e-7:
            r.fail(f"triple {i}: triangle violated by {ac - ab - bc:.3g}")
    r.notes.append(f"worst triangle excess {tri_worst:.3g}")

    for i in range(zero_pairs):
        rng = case_rng(seed, "sim-zero", i)
        W = _random_channel(rng, 4, int(rng.integers(1, 4)))
        W2 = _equivalent_variant(W, rng) if i % 2 == 0 else _random_channel(rng, 4, W.output_size)
        d = similarity_distance(W, W2)
        r.cases += 1
        if (d <= 1e-8) != is_input_equivalent(W, W2):
            r.fail(f"zero pair {i}: d = {d:.3g} disagrees with equivalence")

    dom_worst = -np.inf
    for i in range(domination_pairs):
        rng = case_rng(seed, "sim-dom", i)
        W = _random_channel(rng, 4, int(rng.integers(1, 5)))
        if i % 2:
            W2 = gen_random_channel(W.input_size, W.output_size, rng)
        else:
            t = rng.uniform(0.0, 0.3)
            W2 = Channel((1 - t) * W.rows + t * gen_random_channel(W.input_size, W.output_size, rng).rows)
        excess = similarity_distance(W, W2) - channel_distance(W, W2)
        r.cases += 1
        dom_worst = max(dom_worst, excess)
        if excess > 1e-9:
            r.fail(f"domination pair {i}: excess {excess:.3g}")
    r.notes.append(f"worst domination excess {dom_worst:.3g}")

    grid_worst = 0.0
    for i in range(grid_pairs):
        rng = case_rng(seed, "sim-grid", i)
        W, W2 = _random_channel(rng, 3, 3), _random_channel(rng, 3, 3)
        err = abs(similarity_distance(W, W2) - oracles.grid_hausdorff_tv(W.rows, W2.rows, 1e-2))
        r.cases += 1
        grid_worst = max(grid_worst, err)
        if err > 2e-2:
            r.fail(f"grid pair {i}: off by {err:.3g}")
    r.notes.append(f"worst grid-oracle gap {grid_worst:.3g}")
    r.worst = max(tri_worst, dom_worst, grid_worst)
    return r


def rank_bounds(seed, count=1000):
    r = CheckResult("C7 rank bounds: irank <= 2 for |Y| = 2, irank = 1 for |Y| = 1")
    for i in range(count):
        rng = case_rng(seed, "rank", i)
        W2 = _random_channel(rng, 8, 2)
        W1 = _random_channel(rng, 8, 1)
        k2, k1 = input_rank(W2), input_rank(W1)
        r.cases += 2
        r.observe(k2)
        if k2 > 2:
            r.fail(f"|Y|=2 channel {i} has rank {k2}")
        if k1 != 1:
            r.fail(f"|Y|=1 channel {i} has rank {k1}")
    return r


def equivalence_invariance(seed, count=100):
    r = CheckResult("C8 capacity and Pe(n, M) agree on W and W o D_f")
    closed = np.log(2) - (0.1 * np.log(10) + 0.9 * np.log(1 / 0.9))
    got = capacity(bsc(0.1))
    r.cases += 1
    r.notes.append(f"C(BSC(0.1)) = {got:.12g} nats, closed form {closed:.12g}")
    if abs(got - closed) > 1e-6:
        r.fail(f"BSC(0.1) capacity off by {abs(got - closed):.3g}")
    cap_worst = 0.0
    pe_worst = 0.0
    for i in range(count):
        rng = case_rng(seed, "invariance", i)
        W = _random_channel(rng, 4, int(rng.integers(1, 4)))
        Wf = _surjective_pullback(W, rng)
        dc = abs(capacity(W) - capacity(Wf))
        cap_worst = max(cap_worst, dc)
        r.cases += 1
        if dc > 1e-6:
            r.fail(f"channel {i}: capacity differs by {dc:.3g}")
        for n in (1, 2):
            for M in (1, 2, 3):
                dp = abs(pe_opt(W, n, M) - pe_opt(Wf, n, M))
                pe_worst = max(pe_worst, dp)
                r.cases += 1
                if dp > 1e-9:
                    r.fail(f"channel {i} (n={n}, M={M}): Pe differs by {dp:.3g}")
    r.notes.append(f"worst capacity gap {cap_worst:.3g}, worst Pe gap {pe_worst:.3g}")
    r.worst = max(cap_worst, pe_worst)
    return r


def _hull_point(points, rng):
    return random_distribution(len(points), rng) @ points


def sum_product_hulls(seed, count=500):
    r = CheckResult("C9 hull identities for sums and products agree with direct membership")
    inside = 0
    for i in range(count):
        rng = case_rng(seed, "sum-hull", i)
        W1 = _random_channel(rng, 3, int(rng.integers(1, 4)))
        W2 = _random_channel(rng, 3, int(rng.integers(1, 4)))
        C1, C2 = characteristic(W1), characteristic(W2)
        S = channel_sum(W1, W2)
        if i % 2 == 0:
            lam = float(rng.choice([0.0, 1.0, rng.uniform()], p=[0.1, 0.1, 0.8]))
            q = np.concatenate([(1 - lam) * _hull_point(C1.points, rng), lam * _hull_point(C2.points, rng)])
        else:
            q = random_distribution(S.output_size, rng)
        dec = decompose_sum_point(q, C1, C2, labels=S.output_labels)
        direct = hull_membership(q, S.rows)
        r.cases += 1
        if (dec is not None) != direct.inside:
            r.fail(f"sum query {i}: decomposition {dec is not None}, direct {direct.inside}")
            continue
        if dec is not None:
            inside += 1
            left = np.zeros(C1.points.shape[1]) if dec.w1 is None else (1 - dec.lam) * (dec.w1 @ C1.points)
            right = np.zeros(C2.points.shape[1]) if dec.w2 is None else dec.lam * (dec.w2 @ C2.points)
            err = np.abs(np.concatenate([left, right]) - q).sum()
            r.observe(err)
            r.observe(np.abs(direct.weights @ S.rows - q).sum())
            if err > 1e-7:
                r.fail(f"sum query {i}: reconstruction off by {err:.3g}")
    r.notes.append(f"sum: {inside} inside")
    inside = 0
    for i in range(count):
        rng = case_rng(seed, "product-hull", i)
        W1 = _random_channel(rng, 3, int(rng.integers(1, 4)))
        W2 = _random_channel(rng, 3, int(rng.integers(1, 4)))
        C1, C2 = characteristic(W1), characteristic(W2)
        P = channel_product(W1, W2)
        kind = i % 3
        if kind == 0:
            q = _hull_point(P.rows, rng)
        elif kind == 1:
            q = np.kron(_hull_point(C1.points, rng), _hull_point(C2.points, rng))
        else:
            q = random_distribution(P.output_size, rng)
        via = product_hull_membership(q, C1, C2, labels=P.output_labels)
        direct = hull_membership(q, P.rows)
        r.cases += 1
        if via.inside != direct.inside:
            r.fail(f"product query {i}: characteristic {via.inside}, direct {direct.inside}")
            continue
        if via.inside:
            inside += 1
            err = np.abs(via.weights @ product_generators(C1, C2) - q).sum()
            r.observe(err)
            if err > 1e-7:
                r.fail(f"product query {i}: reconstruction off by {err:.3g}")
    r.notes.append(f"product: {inside} inside")
    return r


def lipschitz_sum_product(seed, count=300):
    r = CheckResult("C10 similarity distance is 1-Lipschitz in each factor of sums and products")
    r.worst = -np.inf
    for i in range(count):
        rng = case_rng(seed, "lipschitz", i)
        y1, y2 = int(rng.integers(2, 4)), int(rng.integers(2, 4))
        W1 = _random_channel(rng, 3, y1)
        W2 = _random_channel(rng, 3, y2)
        if i % 2:
            V1, V2 = _random_channel(rng, 3, y1), _random_channel(rng, 3, y2)
        else:
            t1, t2 = rng.uniform(0, 0.2, size=2)
            V1 = Channel((1 - t1) * W1.rows + t1 * gen_random_channel(W1.input_size, y1, rng).rows)
            V2 = Channel((1 - t2) * W2.rows + t2 * gen_random_channel(W2.input_size, y2, rng).rows)
        bound = similarity_distance(W1, V1) + similarity_distance(W2, V2)
        ds = similarity_distance(channel_sum(W1, W2), channel_sum(V1, V2))
        dp = similarity_distance(channel_product(W1, W2), channel_product(V1, V2))
        r.cases += 2
        r.observe(max(ds, dp) - bound)
        if ds > bound + 1e-7:
            r.fail(f"quadruple {i}: sum {ds:.6g} > {bound:.6g}")
        if dp > bound + 1e-7:
            r.fail(f"quadruple {i}: product {dp:.6g} > {bound:.6g}")
    return r


ACCEPTANCE = [
    degradedness_soundness,
    degradedness_refutation,
    decoder_monotonicity,
    pc_domination,
    game_domination,
    similarity_metric,
    rank_bounds,
    equivalence_invariance,
    sum_product_hulls,
    lipschitz_sum_product,
]


# module invariants -----------------------------------------------------------

def certificate_soundness(seed, count=1000):
    r = CheckResult("geometry: membership certificates verify")
    for i in range(count):
        rng = case_rng(seed, "cert", i)
        d = int(rng.integers(1, 7))
        G = np.array([random_distribution(d, rng) for _ in range(int(rng.integers(1, 7)))])
        q = _hull_point(G, rng) if i % 2 == 0 else random_distribution(d, rng)
        res = hull_membership(q, G)
        r.cases += 1
        if res.inside:
            w = res.weights
            err = np.abs(w @ G - q).sum()
            r.observe(err)
            if w.min() < 0 or abs(w.sum() - 1) > 1e-9 or err > 1e-7:
                r.fail(f"case {i}: bad weights (err {err:.3g})")
        else:
            h, gap = res.separator
            if not (gap > 0 and h @ q >= (G @ h).max() + gap - 1e-12):
                r.fail(f"case {i}: separator does not separate")
    return r


def grid_membership_agreement(seed, count=500):
    r = CheckResult("geometry: LP membership matches a weight-grid search")
    for i in range(count):
        rng = case_rng(seed, "grid-member", i)
        d, k = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        G = np.array([random_distribution(d, rng) for _ in range(k)])
        top = G.max(axis=0)
        y = int(np.argmin(top))
        if i % 2 == 0 or top[y] > 0.99:
            q = _hull_point(G, rng)
        else:
            # push coordinate y past every generator, so the point is at L1 distance > 0.01
            target = top[y] + rng.uniform(0.01, 1.0 - top[y])
            rest = random_distribution(d, rng)
            rest[y] = 0.0
            rest = rest / rest.sum() if rest.sum() > 0 else rest
            q = (1 - target) * rest
            q[y] = target
        lp = hull_membership(q, G).inside
        grid = oracles.grid_hull_membership(q, G, step=1e-3, slack=2e-3)
        r.cases += 1
        if lp != grid:
            r.fail(f"case {i}: LP {lp}, grid {grid}")
    return r


def extreme_point_idempotence(seed, count=200):
    r = CheckResult("geometry: extreme points of extreme points are all kept")
    for i in range(count):
        rng = case_rng(seed, "ce-idem", i)
        d = int(rng.integers(1, 5))
        P = np.array([random_distribution(d, rng) for _ in range(int(rng.integers(1, 8)))])
        ce = P[convex_extreme_points(P)]
        again = convex_extreme_points(ce)
        r.cases += 1
        if again != list(range(len(ce))):
            r.fail(f"case {i}: {again} from {len(ce)} points")
    return r


def hausdorff_properties(seed, count=500):
    r = CheckResult("geometry: Hausdorff distance is a metric and ignores redundant points")
    for i in range(count):
        rng = case_rng(seed, "hausdorff", i)
        d = int(rng.integers(2, 4))
        A, B, C = (np.array([random_distribution(d, rng) for _ in range(int(rng.integers(1, 5)))])
                   for _ in range(3))
        ab, ba = hausdorff_tv(A, B), hausdorff_tv(B, A)
        ac, bc = hausdorff_tv(A, C), hausdorff_tv(B, C)
        r.cases += 1
        if ab != ba or ab < 0:
            r.fail(f"case {i}: symmetry/nonnegativity")
        if ac > ab + bc + 1e-7:
            r.fail(f"case {i}: triangle excess {ac - ab - bc:.3g}")
        CA, CB = A[convex_extreme_points(A)], B[convex_extreme_points(B)]
        if hausdorff_tv(CA, CB) != ab:
            r.fail(f"case {i}: reduction to extreme points changed the value")
        padded = np.vstack([A, _hull_point(A, rng)[None, :]])
        drift = abs(hausdorff_tv(padded, B) - ab)
        r.observe(drift)
        if drift > 1e-9:
            r.fail(f"case {i}: redundant point moved the distance by {drift:.3g}")
        if hausdorff_tv(A, A) != 0.0:
            r.fail(f"case {i}: d(A, A) != 0")
        if ab == 0.0 and len(CA) != len(CB):
            r.fail(f"case {i}: zero distance between different extreme sets")
    return r


def composition_and_metric(seed, count=500):
    r = CheckResult("channel: composition associative, d a metric, sums compatible with composition")
    for i in range(count):
        rng = case_rng(seed, "channel-props", i)
        a, b, c, e = (int(v) for v in rng.integers(1, 5, size=4))
        U, V, W = gen_random_channel(c, e, rng), gen_random_channel(b, c, rng), gen_random_channel(a, b, rng)
        lhs, rhs = compose(U, compose(V, W)), compose(compose(U, V), W)
        gap = np.abs(lhs.rows - rhs.rows).max()
        r.cases += 1
        r.observe(gap)
        if gap > 1e-12:
            r.fail(f"case {i}: associativity gap {gap:.3g}")
        X, Y, Z = (gen_random_channel(a, b, rng) for _ in range(3))
        xy, yx = channel_distance(X, Y), channel_distance(Y, X)
        if xy != yx or channel_distance(X, Z) > xy + channel_distance(Y, Z) + 1e-12:
            r.fail(f"case {i}: metric axiom")
        if channel_distance(X, X) != 0:
            r.fail(f"case {i}: d(W, W) != 0")
        W1p, W2p = gen_random_channel(b, c, rng), gen_random_channel(e, a, rng)
        V1p, V2p = gen_random_channel(a, b, rng), gen_random_channel(c, e, rng)
        direct = channel_sum(compose(W1p, V1p), compose(W2p, V2p))
        via = compose(channel_sum(W1p, W2p), channel_sum(V1p, V2p))
        gap = np.abs(direct.rows - via.rows).max()
        r.observe(gap)
        if gap > 1e-12 or direct.output_labels != via.output_labels:
            r.fail(f"case {i}: sum/composition identity off by {gap:.3g}")
        for M in (channel_sum(X, W1p).rows, channel_product(X, W1p).rows):
            if np.abs(M.sum(axis=1) - 1).max() > 1e-12:
                r.fail(f"case {i}: composite not stochastic")
    return r


def ordering_structure(seed, chains=100, roundtrips=500, preservation=100):
    r = CheckResult("ordering: transitivity, canonical round trip, preservation under sum/product")
    for i in range(chains):
        rng = case_rng(seed, "chains", i)
        ny = int(rng.integers(1, 4))
        C = _random_channel(rng, 4, ny)
        B = compose(C, _random_channel(rng, 4, C.input_size))
        A = compose(B, _random_channel(rng, 4, B.input_size))
        ab, bc, ac = is_input_degraded(A, B), is_input_degraded(B, C), is_input_degraded(A, C)
        r.cases += 1
        if not (ab.degraded and bc.degraded and ac.degraded):
            r.fail(f"chain {i}: missing degradedness")
            continue
        V = compose(bc.intertwiner, ab.intertwiner)
        d = channel_distance(compose(C, V), A)
        r.observe(d)
        if d > 1e-7:
            r.fail(f"chain {i}: composed intertwiner off by {d:.3g}")
    for i in range(roundtrips):
        rng = case_rng(seed, "canonical", i)
        W = _random_channel(rng, 6, int(rng.integers(1, 5)))
        rep = canonical_representative(W)
        r.cases += 1
        if not is_input_equivalent(W, rep) or input_rank(rep) != rep.input_size:
            r.fail(f"channel {i}: representative not equivalent")
    for i in range(preservation):
        rng = case_rng(seed, "preserve", i)
        W1, W1p, _ = degraded_pair(rng, max_inputs=3, max_outputs=3)
        W2, W2p, _ = degraded_pair(rng, max_inputs=3, max_outputs=3)
        r.cases += 1
        if not is_input_degraded(channel_sum(W1, W2), channel_sum(W1p, W2p)).degraded:
            r.fail(f"quadruple {i}: sum not degraded")
        if not is_input_degraded(channel_product(W1, W2), channel_product(W1p, W2p)).degraded:
            r.fail(f"quadruple {i}: product not degraded")
    return r


def pc_grid_sup(seed, count=50):
    r = CheckResult("coding: deterministic-encoder Pc equals the grid sup over random encoders")
    for i in range(count):
        rng = case_rng(seed, "pc-grid", i)
        u, x, y = (int(v) for v in rng.integers(1, 4, size=3))
        W, D = gen_random_channel(x, y, rng), gen_random_channel(y, u, rng)
        p = random_distribution(u, rng)
        gap = abs(pc(p, W, D)[0] - oracles.grid_pc(p, W, D, step=0.05))
        r.cases += 1
        r.observe(gap)
        if gap > 1e-9:
            r.fail(f"case {i}: gap {gap:.3g}")
    return r


def pe_opt_chain(seed, count=100):
    r = CheckResult("coding: optimal error probability never improves under degradation")
    r.worst = -np.inf
    for i in range(count):
        rng = case_rng(seed, "pe-chain", i)
        W, W2, _ = degraded_pair(rng, max_inputs=4, max_outputs=3)
        for n in (1, 2):
            for M in (1, 2, 3):
                a, b = pe_opt(W2, n, M), pe_opt(W, n, M)
                r.cases += 1
                r.observe(a - b)
                if a > b + 1e-9:
                    r.fail(f"pair {i} (n={n}, M={M}): {a:.12g} > {b:.12g}")
    return r


def game_structure(seed, count=300):
    r = CheckResult("games: payoffs affine in the strategy, optimum at a region vertex")
    for i in range(count):
        rng = case_rng(seed, "game-affine", i)
        W = _random_channel(rng, 4, int(rng.integers(1, 4)))
        nz = int(rng.integers(1, 4))
        G = RandomizedGame(rng.uniform(-1, 1, size=(nz, W.output_size)), W)
        S1, S2 = gen_random_channel(nz, W.input_size, rng), gen_random_channel(nz, W.input_size, rng)
        a = rng.uniform()
        mixed = payoff_vector(a * S1.rows + (1 - a) * S2.rows, G)
        split = a * payoff_vector(S1, G) + (1 - a) * payoff_vector(S2, G)
        gap = np.abs(mixed - split).max()
        verts = achievable_region_vertices(G)
        opt_gap = abs(optimal_average_payoff(G)[0] - verts.mean(axis=1).max())
        r.cases += 1
        r.observe(max(gap, opt_gap))
        if gap > 1e-12:
            r.fail(f"case {i}: affinity gap {gap:.3g}")
        if opt_gap > 1e-12:
            r.fail(f"case {i}: optimum vs vertices gap {opt_gap:.3g}")
        if not hull_membership(mixed, verts).inside:
            r.fail(f"case {i}: mixed strategy payoff outside the vertex hull")
    return r


def pe_opt_brute_force(seed, count=40):
    r = CheckResult("coding: multiset search for Pe(n, M) matches every ordered codebook")
    for i in range(count):
        rng = case_rng(seed, "pe-brute", i)
        W = _random_channel(rng, 3, int(rng.integers(1, 4)))
        n, M = int(rng.integers(1, 3)), int(rng.integers(1, 4))
        gap = abs(pe_opt(W, n, M) - oracles.brute_pe_opt(W, n, M))
        r.cases += 1
        r.observe(gap)
        if gap > 1e-12:
            r.fail(f"case {i}: gap {gap:.3g}")
    return r


SUITES = {
    "acceptance": ACCEPTANCE,
    "geometry": [certificate_soundness, grid_membership_agreement, extreme_point_idempotence,
                 hausdorff_properties],
    "channel": [composition_and_metric],
    "ordering": [degradedness_soundness, degradedness_refutation, ordering_structure,
                 similarity_metric, rank_bounds, sum_product_hulls, lipschitz_sum_product],
    "coding": [decoder_monotonicity, pc_domination, equivalence_invariance, pc_grid_sup,
               pe_opt_chain, pe_opt_brute_force],
    "games": [game_domination, game_structure],
}
SUITES["all"] = list(dict.fromkeys(check for name in ("geometry", "channel", "ordering", "coding", "games")
                                   for check in SUITES[name]))


def _run_one(args):
    check, seed = args
    return check(seed)


def run_suite(name, seed, workers=1):
    """Run a named suite; results come back in suite order for any worker count."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    jobs = [(check, seed) for check in SUITES[name]]
    if workers <= 1:
        return [_run_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))
