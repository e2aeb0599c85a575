"""Numerical tolerances shared across the pipeline."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    rel_rank_tol: float = 1e-9      # singular values below rel_rank_tol * sigma_max count as zero
    gap_ratio: float = 10.0         # confidence band half-width (multiplicative) around the rank cut
    tol_sum: float = 1e-9           # allowed deviation of a probability table sum from 1
    tol_entry: float = 1e-12        # entries in [-tol_entry, 0) are clamped to 0 on ingestion
    tol_stat: float = 1e-9          # slack for the stationarity balance check
    tol_stochastic: float = 1e-6    # slack for row-stochasticity of recovered parameters
    eig_gap_tol: float = 1e-7       # minimal pairwise eigenvalue distance treated as distinct

    def __post_init__(self):
        for name in ("rel_rank_tol", "tol_sum", "tol_entry", "tol_stat",
                     "tol_stochastic", "eig_gap_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.gap_ratio <= 1:
            raise ValueError("gap_ratio must exceed 1")


DEFAULT_TOLERANCES = ToleranceConfig()
