"""Hidden Markov parametrizations over the binary alphabet.

A parametrization is a triple (transition M, emission E, initial pi): M is a
d x d row-stochastic matrix, E holds per-state probabilities of emitting 0 and
1, and pi is the initial state distribution.  The string probability of
v = a_1 ... a_n is

    p(v) = pi' T_{a_1} ... T_{a_n} 1,      T_a = diag(E[:, a]) M,

computed by forward iteration on a row vector.  The two symbol operators T_0
and T_1 carry all information about the process; splitting them off M and E is
the first step of everything downstream.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .distribution import StringDistribution
from .errors import (CapExceededError, DimensionMismatchError,
                     DuplicateEigenvalueError, InvalidParamsError,
                     InvalidPermutationError, StateCountTooLargeError)
from .jsonio import write_json
from .strings import check_binary
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig

FULL_TABLE_CAP = 24          # 2^24 doubles is the largest table we will expand
PERMUTATION_SEARCH_CAP = 8   # d! comparisons; 8! = 40320 is still fine


@dataclass(frozen=True)
class HmpParams:
    d: int
    transition: np.ndarray   # d x d, rows sum to 1
    emission: np.ndarray     # d x 2, row s = (P(emit 0 | s), P(emit 1 | s))
    initial: np.ndarray      # length d

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidParamsError(f"state count must be a positive integer, got {self.d}")
        m = np.array(self.transition, dtype=float)
        e = np.array(self.emission, dtype=float)
        pi = np.array(self.initial, dtype=float)
        if m.shape != (self.d, self.d):
            raise InvalidParamsError(f"transition must be {self.d}x{self.d}, got {m.shape}")
        if e.shape != (self.d, 2):
            raise InvalidParamsError(f"emission must be {self.d}x2, got {e.shape}")
        if pi.shape != (self.d,):
            raise InvalidParamsError(f"initial must have length {self.d}, got {pi.shape}")
        for arr in (m, e, pi):
            arr.setflags(write=False)
        object.__setattr__(self, "transition", m)
        object.__setattr__(self, "emission", e)
        object.__setattr__(self, "initial", pi)


@dataclass(frozen=True)
class ObservableSplit:
    t0: np.ndarray
    t1: np.ndarray


def validate_params(params: HmpParams, tol: ToleranceConfig | None = None):
    """Row-stochasticity of transition, emission and initial within tol_stochastic."""
    tol = tol or DEFAULT_TOLERANCES
    slack = tol.tol_stochastic
    checks = [("transition", params.transition), ("emission", params.emission),
              ("initial", params.initial.reshape(1, -1))]
    for name, arr in checks:
        if np.any(arr < -slack) or np.any(arr > 1.0 + slack):
            worst = arr.flat[int(np.argmax(np.abs(arr - np.clip(arr, 0.0, 1.0))))]
            raise InvalidParamsError(f"{name} entry {worst} outside [0, 1]")
        sums = arr.sum(axis=1)
        if np.any(np.abs(sums - 1.0) > slack):
            row = int(np.argmax(np.abs(sums - 1.0)))
            raise InvalidParamsError(f"{name} row {row} sums to {sums[row]}, not 1")


def split(params: HmpParams) -> ObservableSplit:
    """Symbol operators T_a = diag(E[:, a]) M; they satisfy T_0 + T_1 = M."""
    t0 = params.emission[:, 0][:, None] * params.transition
    t1 = params.emission[:, 1][:, None] * params.transition
    return ObservableSplit(t0, t1)


def string_probability(params: HmpParams, v: str) -> float:
    check_binary(v)
    ops = split(params)
    x = params.initial
    for a in v:
        x = x @ (ops.t0 if a == "0" else ops.t1)
    return float(x.sum())


def full_distribution(params: HmpParams, n: int,
                      cap: int = FULL_TABLE_CAP) -> StringDistribution:
    """Table of all 2^n string probabilities, by breadth-first forward vectors."""
    if n < 1:
        raise CapExceededError(f"table length must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"table length {n} exceeds cap {cap}")
    ops = split(params)
    fwd = params.initial[None, :]
    for _ in range(n):
        nxt = np.empty((2 * fwd.shape[0], params.d))
        nxt[0::2] = fwd @ ops.t0   # child index of prefix i under symbol a is 2i + a
        nxt[1::2] = fwd @ ops.t1
        fwd = nxt
    return StringDistribution(n, fwd.sum(axis=1))


def vandermonde_example(d: int, lambdas) -> HmpParams:
    """Identity transition, uniform start, state s emits 0 with probability lambda_s.

    The resulting process is an equal-weight mixture of biased coins, and its
    moment matrix [p(0^(i+j))]_{ij} factors through the Vandermonde matrix of
    the lambdas, so the process has rank exactly d whenever they are pairwise
    distinct.
    """
    lam = np.array(lambdas, dtype=float)
    if lam.shape != (d,):
        raise DimensionMismatchError(f"need {d} values, got shape {lam.shape}")
    if np.any(lam <= 0.0) or np.any(lam >= 1.0):
        raise InvalidParamsError("emission probabilities must lie strictly inside (0, 1)")
    if d > 1:
        gaps = np.abs(lam[:, None] - lam[None, :])[~np.eye(d, dtype=bool)]
        if gaps.min() < 1e-12:
            raise DuplicateEigenvalueError(f"minimal gap {gaps.min()} below 1e-12")
    return HmpParams(d, np.eye(d), np.column_stack([lam, 1.0 - lam]), np.full(d, 1.0 / d))


def random_stochastic(d: int, seed: int) -> HmpParams:
    """Row-normalized uniform draws; deterministic in (d, seed)."""
    rng = np.random.default_rng(seed)
    m = rng.uniform(size=(d, d))
    e = rng.uniform(size=(d, 2))
    pi = rng.uniform(size=d)
    return HmpParams(d, m / m.sum(axis=1, keepdims=True),
                     e / e.sum(axis=1, keepdims=True), pi / pi.sum())


def permute_states(params: HmpParams, sigma) -> HmpParams:
    """Relabel states: new state i is old state sigma[i]."""
    idx = list(sigma)
    if sorted(idx) != list(range(params.d)):
        raise InvalidPermutationError(f"{sigma!r} is not a permutation of range({params.d})")
    idx = np.asarray(idx)
    return HmpParams(params.d,
                     params.transition[np.ix_(idx, idx)],
                     params.emission[idx],
                     params.initial[idx])


def equivalent_up_to_permutation(a: HmpParams, b: HmpParams,
                                 tol: float = 1e-6):
    """Smallest state relabeling of a that matches b entrywise within tol, or None."""
    if a.d != b.d:
        raise DimensionMismatchError(f"state counts differ: {a.d} vs {b.d}")
    if a.d > PERMUTATION_SEARCH_CAP:
        raise StateCountTooLargeError(
            f"exhaustive search capped at d = {PERMUTATION_SEARCH_CAP}, got {a.d}")
    for sigma in itertools.permutations(range(a.d)):
        moved = permute_states(a, sigma)
        diff = max(np.max(np.abs(moved.transition - b.transition)),
                   np.max(np.abs(moved.emission - b.emission)),
                   np.max(np.abs(moved.initial - b.initial)))
        if diff <= tol:
            return sigma
    return None


def free_parameters(params: HmpParams) -> np.ndarray:
    """The d^2 + d - 1 free coordinates left after dropping row-sum redundancy."""
    return np.concatenate([params.transition[:, :-1].ravel(),
                           params.emission[:, 0],
                           params.initial[:-1]])


def from_free_parameters(d: int, coords) -> HmpParams:
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (d * d + d - 1,):
        raise DimensionMismatchError(
            f"expected {d * d + d - 1} coordinates for d = {d}, got {coords.shape}")
    head = coords[:d * (d - 1)].reshape(d, d - 1)
    m = np.column_stack([head, 1.0 - head.sum(axis=1)])
    e0 = coords[d * (d - 1):d * (d - 1) + d]
    pi_head = coords[d * (d - 1) + d:]
    pi = np.append(pi_head, 1.0 - pi_head.sum())
    return HmpParams(d, m, np.column_stack([e0, 1.0 - e0]), pi)


def params_to_jsonable(params: HmpParams) -> dict:
    return {"d": params.d,
            "transition": [list(map(float, row)) for row in params.transition],
            "emission": [list(map(float, row)) for row in params.emission],
            "initial": [float(x) for x in params.initial]}


def params_from_jsonable(payload: dict) -> HmpParams:
    for key in ("d", "transition", "emission", "initial"):
        if key not in payload:
            raise InvalidParamsError(f"parameter JSON needs key {key!r}")
    return HmpParams(int(payload["d"]), np.array(payload["transition"], dtype=float),
                     np.array(payload["emission"], dtype=float),
                     np.array(payload["initial"], dtype=float))


def save_params(params: HmpParams, path):
    write_json(params_to_jsonable(params), path)


def load_params(path) -> HmpParams:
    with open(path) as fh:
        return params_from_jsonable(json.load(fh))
