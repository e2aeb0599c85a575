"""Top-level decision procedure.

For each candidate state count e up to floor((n+1)/2), the distribution is an
HMP on e states exactly when three Hankel blocks all have rank e: the small
block P_{p,e-1,e-1} and the two balanced blocks P_{p,floor(n/2),ceil(n/2)}
and P_{p,ceil(n/2),floor(n/2)}.  When the pattern holds, inference plus
recovery either produces a stochastic parametrization (verdict: HMP), shows
the distribution is representable but not by any stochastic parametrization
of this size (verdict: no HMP), or runs into a genericity failure, where the
method is simply blind (verdict: cannot decide).  Borderline numerical rank
likewise yields cannot-decide rather than a guess.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distribution import StringDistribution, validate
from .errors import (DegenerateNormalizationError, RankDeficientError,
                     WrongVerdictError)
from .finitary import finitary_probability, infer_finitary
from .hankel import RankReport, hankel_block, numerical_rank
from .hmp import HmpParams, full_distribution, params_to_jsonable
from .recover import (NOT_GENERIC, NOT_STOCHASTIC, RECOVERED, RecoveryOutcome,
                      recover_hmm)
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig

HMP = "hmp"
NO_HMP = "no_hmp"
CANNOT_DECIDE = "cannot_decide"

CERTIFY_TOL = 1e-6


@dataclass(frozen=True)
class TraceEntry:
    states: int
    rank_small: RankReport          # P_{p,e-1,e-1}
    rank_wide: RankReport           # P_{p,floor(n/2),ceil(n/2)}
    rank_tall: RankReport           # P_{p,ceil(n/2),floor(n/2)}
    recovery: RecoveryOutcome | None
    note: str


@dataclass(frozen=True)
class Verdict:
    kind: str
    states: int
    params: HmpParams | None
    reason: str | None
    trace: tuple


def max_states_cap(n: int) -> int:
    return (n + 1) // 2


def identify(dist: StringDistribution, max_states: int | None = None,
             tol: ToleranceConfig | None = None) -> Verdict:
    tol = tol or DEFAULT_TOLERANCES
    validate(dist, tol)
    n = dist.n
    cap = max_states_cap(n)
    if max_states is None:
        max_states = cap
    if not 1 <= max_states <= cap:
        raise ValueError(f"max_states must be in [1, {cap}] for n = {n}, got {max_states}")

    wide = numerical_rank(hankel_block(dist, n // 2, (n + 1) // 2).data, tol)
    tall = numerical_rank(hankel_block(dist, (n + 1) // 2, n // 2).data, tol)
    trace = []

    for e in range(1, max_states + 1):
        small = numerical_rank(hankel_block(dist, e - 1, e - 1).data, tol)
        if not (small.confident and wide.confident and tall.confident):
            trace.append(TraceEntry(e, small, wide, tall, None, "borderline rank"))
            return Verdict(CANNOT_DECIDE, e, None, "borderline rank", tuple(trace))
        if small.rank == wide.rank == tall.rank == e:
            try:
                fp = infer_finitary(dist, e, tol)
            except (RankDeficientError, DegenerateNormalizationError) as exc:
                note = f"inference degenerate: {exc}"
                trace.append(TraceEntry(e, small, wide, tall, None, note))
                return Verdict(CANNOT_DECIDE, e, None, note, tuple(trace))
            outcome = recover_hmm(fp, tol)
            trace.append(TraceEntry(e, small, wide, tall, outcome, outcome.kind))
            if outcome.kind == RECOVERED:
                return Verdict(HMP, e, outcome.params, None, tuple(trace))
            if outcome.kind == NOT_STOCHASTIC:
                reason = f"representable in dimension {e} but not stochastically: {outcome.reason}"
                return Verdict(NO_HMP, e, None, reason, tuple(trace))
            return Verdict(CANNOT_DECIDE, e, None, outcome.reason, tuple(trace))
        trace.append(TraceEntry(e, small, wide, tall, None,
                                f"rank pattern not met: ({small.rank}, {wide.rank}, {tall.rank})"))
    return Verdict(NO_HMP, max_states, None,
                   f"no state count up to {max_states} fits", tuple(trace))


@dataclass(frozen=True)
class CertifyReport:
    max_residual: float
    passed: bool


def certify(dist: StringDistribution, verdict: Verdict,
            threshold: float = CERTIFY_TOL) -> CertifyReport:
    """Independently re-simulate the recovered parameters and compare tables."""
    if verdict.kind != HMP:
        raise WrongVerdictError(f"certify needs an hmp verdict, got {verdict.kind!r}")
    resim = full_distribution(verdict.params, dist.n)
    residual = float(np.max(np.abs(resim.table - dist.table)))
    return CertifyReport(residual, residual <= threshold)


def _rank_report_jsonable(report: RankReport) -> dict:
    return {"rank": report.rank, "confident": bool(report.confident)}


def verdict_to_jsonable(dist: StringDistribution, verdict: Verdict) -> dict:
    """Result payload; max_residual is filled by certification for hmp verdicts."""
    payload = {
        "verdict": verdict.kind,
        "states": verdict.states,
        "params": params_to_jsonable(verdict.params) if verdict.params else None,
        "reason": verdict.reason,
        "trace": [
            {
                "states": entry.states,
                "rank_small": _rank_report_jsonable(entry.rank_small),
                "rank_wide": _rank_report_jsonable(entry.rank_wide),
                "rank_tall": _rank_report_jsonable(entry.rank_tall),
                "recovery": None if entry.recovery is None else {
                    "kind": entry.recovery.kind,
                    "reason": entry.recovery.reason,
                },
                "note": entry.note,
            }
            for entry in verdict.trace
        ],
        "max_residual": None,
    }
    if verdict.kind == HMP:
        payload["max_residual"] = certify(dist, verdict).max_residual
    return payload
