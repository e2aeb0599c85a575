"""Cross-module invariants checked over seeded random draws."""
import numpy as np

import hmpident as hi


def random_table_distribution(n, seed):
    rng = np.random.default_rng(seed)
    table = rng.uniform(0.05, 1.0, 2 ** n)
    return hi.StringDistribution(n, table / table.sum())


def test_marginal_telescoping_arbitrary_tables():
    # p(v) = p(v0) + p(v1) holds for any table, HMP or not
    for seed in range(10):
        n = 1 + seed % 5
        dist = random_table_distribution(n, seed)
        for length in range(n):
            left = hi.marginalize(dist, length)
            right = hi.marginalize(dist, length + 1).reshape(-1, 2).sum(axis=1)
            assert np.max(np.abs(left - right)) <= 1e-12


def test_marginals_are_distributions():
    for seed in range(5):
        dist = hi.full_distribution(hi.random_stochastic(2, seed), 4)
        for length in range(5):
            marg = hi.marginalize(dist, length)
            assert np.all(marg >= -1e-15)
            assert abs(marg.sum() - 1.0) <= 1e-12


def test_prefix_probability_monotone():
    dist = hi.full_distribution(hi.random_stochastic(3, 2), 4)
    for i in range(8):
        v = format(i, "03b")
        assert hi.prefix_probability(dist, v) >= hi.prefix_probability(dist, v + "0") - 1e-15


def test_stationary_start_gives_stationary_table():
    m = np.array([[0.9, 0.1], [0.2, 0.8]])
    pi = np.array([2.0 / 3.0, 1.0 / 3.0])  # solves pi M = pi
    assert np.max(np.abs(pi @ m - pi)) <= 1e-15
    params = hi.HmpParams(2, m, np.array([[0.3, 0.7], [0.6, 0.4]]), pi)
    assert hi.is_stationary(hi.full_distribution(params, 4))


def test_skewed_start_breaks_stationarity():
    params = hi.HmpParams(
        2, np.array([[0.05, 0.95], [0.95, 0.05]]),
        np.array([[0.3, 0.7], [0.6, 0.4]]), np.array([1.0, 0.0]))
    assert not hi.is_stationary(hi.full_distribution(params, 4))


def test_identify_is_deterministic():
    dist = hi.full_distribution(hi.random_stochastic(2, 13), 3)
    a = hi.verdict_to_jsonable(dist, hi.identify(dist))
    b = hi.verdict_to_jsonable(dist, hi.identify(dist))
    assert a == b


def test_recovered_parameters_are_stochastic():
    for seed in range(6):
        d = 1 + seed % 3
        dist = hi.full_distribution(hi.random_stochastic(d, 60 + seed), 2 * d - 1)
        verdict = hi.identify(dist)
        if verdict.kind == hi.HMP:
            hi.validate_params(verdict.params)


def test_hankel_factorization_of_hmp():
    # for an HMP the block entries factor through forward and backward vectors
    params = hi.random_stochastic(2, 44)
    ops = hi.split(params)
    dist = hi.full_distribution(params, 4)
    block = hi.hankel_block(dist, 2, 2)

    def op_product(v):
        out = np.eye(2)
        for a in v:
            out = out @ (ops.t0 if a == "0" else ops.t1)
        return out

    left = np.array([params.initial @ op_product(v) for v in block.row_strings])
    right = np.array([op_product(w) @ np.ones(2) for w in block.col_strings]).T
    assert np.max(np.abs(left @ right - block.data)) <= 1e-12
