import numpy as np

from chanorder.suites import SUITES, case_rng, certificate_soundness, rank_bounds, run_suite


def test_case_streams_are_independent_of_order():
    a = case_rng(1, "pairs", 7).random(3)
    case_rng(1, "pairs", 6).random(100)
    assert np.array_equal(a, case_rng(1, "pairs", 7).random(3))
    assert not np.array_equal(a, case_rng(1, "other", 7).random(3))


def test_results_do_not_depend_on_worker_count():
    one = [r.to_json() for r in run_suite("geometry", 2, workers=1)]
    many = [r.to_json() for r in run_suite("geometry", 2, workers=3)]
    assert one == many


def test_suite_registry():
    assert set(SUITES) == {"acceptance", "geometry", "channel", "ordering", "coding", "games", "all"}
    assert len(SUITES["all"]) == len(set(SUITES["all"]))


def test_failures_are_reported():
    r = rank_bounds(0, count=3)
    assert r.passed and "PASS" in r.line()
    r.fail("forced")
    assert not r.passed and "FAIL" in r.line() and "forced" in r.line()
    assert certificate_soundness(4, count=20).cases == 20
