"""Probability distributions over binary strings of a fixed length.

The table is stored as a flat numpy array of length 2^n indexed by the string
read as a base-2 integer, so index order equals lexicographic order within the
fixed length.  Construction only enforces shape and clamps tiny negative
noise; the numeric invariants (entry range, unit sum) are checked separately
by validate() so that intermediate tables, e.g. perturbed controls, can be
built and inspected without passing validation first.
"""
from __future__ import annotations

import json
from dataclasses import InitVar, dataclass, field

import numpy as np

from .errors import (LengthError, MissingKeyError, NegativeEntryError,
                     EntryOutOfRangeError, SumNotOneError)
from .jsonio import write_json
from .strings import check_binary, string_index, strings_of_length
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig


@dataclass(frozen=True)
class StringDistribution:
    n: int
    table: np.ndarray
    tol: InitVar[ToleranceConfig | None] = None

    def __post_init__(self, tol):
        tol = tol or DEFAULT_TOLERANCES
        if not isinstance(self.n, int) or self.n < 1:
            raise LengthError(f"string length must be a positive integer, got {self.n}")
        table = np.array(self.table, dtype=float)
        if table.shape != (2 ** self.n,):
            raise MissingKeyError(
                f"table must have exactly 2^{self.n} entries, got shape {table.shape}")
        # floating-point noise from upstream arithmetic, not a real sign violation
        table[(table >= -tol.tol_entry) & (table < 0.0)] = 0.0
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def prob(self, v: str) -> float:
        check_binary(v)
        if len(v) != self.n:
            raise LengthError(f"expected a string of length {self.n}, got {v!r}")
        return float(self.table[string_index(v)])

    def to_dict(self) -> dict:
        return {v: float(self.table[i]) for i, v in enumerate(strings_of_length(self.n))}

    @classmethod
    def from_dict(cls, n: int, probabilities: dict,
                  tol: ToleranceConfig | None = None) -> "StringDistribution":
        expected = strings_of_length(n)
        missing = [v for v in expected if v not in probabilities]
        if missing:
            raise MissingKeyError(f"missing {len(missing)} keys, first: {missing[0]!r}")
        extra = sorted(set(probabilities) - set(expected))
        if extra:
            raise MissingKeyError(f"unexpected keys, first: {extra[0]!r}")
        table = np.array([float(probabilities[v]) for v in expected])
        return cls(n, table, tol)


def validate(dist: StringDistribution, tol: ToleranceConfig | None = None):
    """Check entry range and unit sum; raise the first violated invariant."""
    tol = tol or DEFAULT_TOLERANCES
    names = strings_of_length(dist.n)
    below = np.flatnonzero(dist.table < -tol.tol_entry)
    if below.size:
        i = below[0]
        raise NegativeEntryError(f"p({names[i]}) = {dist.table[i]} is negative")
    above = np.flatnonzero(dist.table > 1.0 + tol.tol_entry)
    if above.size:
        i = above[0]
        raise EntryOutOfRangeError(f"p({names[i]}) = {dist.table[i]} exceeds 1")
    total = float(dist.table.sum())
    if abs(total - 1.0) > tol.tol_sum:
        raise SumNotOneError(f"table sums to {total}, not 1")


def marginalize(dist: StringDistribution, m: int) -> np.ndarray:
    """Length-m prefix marginal p(u) = sum_w p(uw), as a flat array of size 2^m."""
    if not 0 <= m <= dist.n:
        raise LengthError(f"marginal length {m} outside [0, {dist.n}]")
    return dist.table.reshape(2 ** m, -1).sum(axis=1)


def prefix_probability(dist: StringDistribution, u: str) -> float:
    """p(u) for any u with len(u) <= n."""
    check_binary(u)
    if len(u) > dist.n:
        raise LengthError(f"prefix longer than table strings: {u!r}")
    return float(marginalize(dist, len(u))[string_index(u)])


def is_stationary(dist: StringDistribution, tol: ToleranceConfig | None = None) -> bool:
    """Whether summing out the last symbol equals summing out the first.

    For every v of length n-1 this compares sum_a p(va) with sum_a p(av); a
    distribution sampled from a stationary process balances the two.
    """
    tol = tol or DEFAULT_TOLERANCES
    if dist.n < 2:
        raise LengthError("stationarity balance needs n >= 2")
    drop_last = dist.table.reshape(-1, 2).sum(axis=1)
    drop_first = dist.table.reshape(2, -1).sum(axis=0)
    return float(np.max(np.abs(drop_last - drop_first))) <= tol.tol_stat


def distribution_to_jsonable(dist: StringDistribution) -> dict:
    return {"n": dist.n, "probabilities": dist.to_dict()}


def save_distribution(dist: StringDistribution, path):
    write_json(distribution_to_jsonable(dist), path)


def load_distribution(path, tol: ToleranceConfig | None = None) -> StringDistribution:
    with open(path) as fh:
        payload = json.load(fh)
    if "n" not in payload or "probabilities" not in payload:
        raise MissingKeyError("distribution JSON needs 'n' and 'probabilities'")
    return StringDistribution.from_dict(int(payload["n"]), payload["probabilities"], tol)
