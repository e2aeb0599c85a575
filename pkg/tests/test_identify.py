import json

import numpy as np
import pytest

import hmpident as hi
from hmpident.errors import SumNotOneError, WrongVerdictError
from hmpident.jsonio import dumps
from conftest import (control_distribution, fair_coin_distribution,
                      near_degenerate_params)


def test_fair_coin_is_one_state():
    verdict = hi.identify(fair_coin_distribution(3))
    assert verdict.kind == hi.HMP
    assert verdict.states == 1
    assert np.max(np.abs(verdict.params.emission[0] - 0.5)) <= 1e-9


def test_two_state_mixture_identified():
    gen = hi.vandermonde_example(2, [0.25, 0.75])
    verdict = hi.identify(hi.full_distribution(gen, 3))
    assert verdict.kind == hi.HMP and verdict.states == 2
    assert hi.equivalent_up_to_permutation(verdict.params, gen, 1e-6) is not None


def test_three_state_identified():
    gen = hi.random_stochastic(3, 0)
    verdict = hi.identify(hi.full_distribution(gen, 5))
    assert verdict.kind == hi.HMP and verdict.states == 3
    assert hi.equivalent_up_to_permutation(verdict.params, gen, 1e-6) is not None


def test_minimal_state_count_wins():
    # a 2-state generator observed at n=5 must not be reported on 3 states
    gen = hi.vandermonde_example(2, [0.3, 0.6])
    verdict = hi.identify(hi.full_distribution(gen, 5))
    assert verdict.kind == hi.HMP and verdict.states == 2


def test_control_distribution_is_no_hmp():
    verdict = hi.identify(control_distribution())
    assert verdict.kind == hi.NO_HMP
    assert verdict.states == 2
    assert "no state count" in verdict.reason


def test_restricted_search_reports_exhaustion():
    dist = hi.full_distribution(hi.vandermonde_example(2, [0.25, 0.75]), 3)
    verdict = hi.identify(dist, max_states=1)
    assert verdict.kind == hi.NO_HMP and verdict.states == 1


def test_borderline_rank_cannot_decide():
    dist = hi.full_distribution(near_degenerate_params(1e-9), 3)
    verdict = hi.identify(dist)
    assert verdict.kind == hi.CANNOT_DECIDE
    assert verdict.reason == "borderline rank"
    assert verdict.trace[-1].note == "borderline rank"


def test_genericity_failure_cannot_decide():
    dist = hi.full_distribution(near_degenerate_params(5e-8), 3)
    verdict = hi.identify(dist)
    assert verdict.kind == hi.CANNOT_DECIDE
    assert verdict.reason == "eigenvalues not pairwise different"
    assert verdict.trace[-1].recovery.kind == hi.NOT_GENERIC


def test_max_states_cap_values():
    assert [hi.max_states_cap(n) for n in (1, 2, 3, 4, 5, 7)] == [1, 1, 2, 2, 3, 4]


def test_max_states_validation():
    dist = fair_coin_distribution(3)
    with pytest.raises(ValueError):
        hi.identify(dist, max_states=0)
    with pytest.raises(ValueError):
        hi.identify(dist, max_states=3)


def test_identify_validates_input():
    bad = hi.StringDistribution(1, np.array([0.5, 0.6]))
    with pytest.raises(SumNotOneError):
        hi.identify(bad)


def test_trace_records_every_tested_count():
    verdict = hi.identify(hi.full_distribution(hi.vandermonde_example(2, [0.25, 0.75]), 3))
    assert [entry.states for entry in verdict.trace] == [1, 2]
    assert "rank pattern not met" in verdict.trace[0].note
    assert verdict.trace[1].recovery.kind == hi.RECOVERED


def test_certify_round_trip():
    dist = fair_coin_distribution(3)
    verdict = hi.identify(dist)
    report = hi.certify(dist, verdict)
    assert report.passed and report.max_residual <= 1e-6


def test_certify_rejects_non_hmp_verdict():
    verdict = hi.identify(control_distribution())
    with pytest.raises(WrongVerdictError):
        hi.certify(control_distribution(), verdict)


def test_verdict_payload_shape():
    dist = fair_coin_distribution(3)
    verdict = hi.identify(dist)
    payload = hi.verdict_to_jsonable(dist, verdict)
    assert payload["verdict"] == "hmp"
    assert payload["states"] == 1
    assert payload["reason"] is None
    assert payload["max_residual"] <= 1e-6
    assert payload["params"]["transition"][0][0] == pytest.approx(1.0, abs=1e-12)
    entry = payload["trace"][0]
    assert set(entry) == {"states", "rank_small", "rank_wide", "rank_tall",
                          "recovery", "note"}
    parsed = json.loads(dumps(payload))
    assert parsed["verdict"] == "hmp"


def test_verdict_payload_no_hmp():
    dist = control_distribution()
    payload = hi.verdict_to_jsonable(dist, hi.identify(dist))
    assert payload["verdict"] == "no_hmp"
    assert payload["params"] is None
    assert payload["max_residual"] is None
