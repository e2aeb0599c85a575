"""Finite Hankel blocks of a string distribution and their numerical rank.

The block P_{p,m,k} has one row per string v with len(v) <= m, one column per
string w with len(w) <= k, and entry p(vw).  Strings are ordered shortest
first, lexicographically within a length, empty string first.  The rank of
these blocks is what separates processes generated by a small hidden state
space from everything else, so rank estimation carries a confidence flag: a
singular value sitting close to the cut means the decision should not be
trusted either way.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distribution import StringDistribution, marginalize
from .errors import LengthError, RankDeficientError
from .strings import strings_up_to
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig


@dataclass(frozen=True)
class HankelBlock:
    row_strings: tuple
    col_strings: tuple
    data: np.ndarray


@dataclass(frozen=True)
class RankReport:
    rank: int
    singular_values: np.ndarray
    confident: bool


def hankel_block(dist: StringDistribution, m: int, k: int) -> HankelBlock:
    """Block of all p(vw) with len(v) <= m, len(w) <= k."""
    if m < 0 or k < 0:
        raise LengthError(f"block orders must be nonnegative, got ({m}, {k})")
    if m + k > dist.n:
        raise LengthError(f"need m + k <= n: ({m}, {k}) vs n = {dist.n}")
    marg = [marginalize(dist, length) for length in range(m + k + 1)]
    data = np.empty((2 ** (m + 1) - 1, 2 ** (k + 1) - 1))
    # the (lv, lw) sub-block is exactly the length-(lv+lw) marginal reshaped:
    # concatenation index is iv * 2^lw + iw
    for lv in range(m + 1):
        for lw in range(k + 1):
            sub = marg[lv + lw].reshape(2 ** lv, 2 ** lw)
            data[2 ** lv - 1: 2 ** (lv + 1) - 1,
                 2 ** lw - 1: 2 ** (lw + 1) - 1] = sub
    data.setflags(write=False)
    return HankelBlock(tuple(strings_up_to(m)), tuple(strings_up_to(k)), data)


def numerical_rank(matrix, tol: ToleranceConfig | None = None) -> RankReport:
    """Thresholded SVD rank with a borderline-detection band.

    rank counts singular values above tau = rel_rank_tol * sigma_max; the
    report is confident unless some singular value falls inside
    [tau/gap_ratio, tau*gap_ratio], in which case a slightly different
    tolerance would have changed the answer.
    """
    tol = tol or DEFAULT_TOLERANCES
    a = np.asarray(matrix, dtype=float)
    if a.size == 0:
        raise LengthError("rank of an empty matrix is undefined here")
    sigma = np.linalg.svd(a, compute_uv=False)
    sigma_max = float(sigma[0])
    if sigma_max == 0.0:
        return RankReport(0, sigma, True)
    tau = tol.rel_rank_tol * sigma_max
    rank = int(np.count_nonzero(sigma > tau))
    borderline = np.any((sigma >= tau / tol.gap_ratio) & (sigma <= tau * tol.gap_ratio))
    return RankReport(rank, sigma, not bool(borderline))


def select_basis(dist: StringDistribution, e: int,
                 tol: ToleranceConfig | None = None):
    """Pick e row strings and e column strings with a well-conditioned Gram matrix.

    Runs complete-pivoting elimination on P_{p,e-1,e-1} and keeps the pivot
    positions.  The returned V holds the original (uneliminated) entries
    p(v_i w_j).  Conditioning matters because downstream inference inverts V.
    """
    tol = tol or DEFAULT_TOLERANCES
    block = hankel_block(dist, e - 1, e - 1)
    work = np.array(block.data)
    scale = float(np.abs(work).max())
    threshold = tol.rel_rank_tol * scale
    free_rows = list(range(work.shape[0]))
    free_cols = list(range(work.shape[1]))
    picked_rows, picked_cols = [], []
    for _ in range(e):
        sub = np.abs(work[np.ix_(free_rows, free_cols)])
        flat = int(np.argmax(sub))
        i = free_rows[flat // len(free_cols)]
        j = free_cols[flat % len(free_cols)]
        pivot = work[i, j]
        if abs(pivot) <= threshold:
            raise RankDeficientError(
                f"no pivot above {threshold} left after {len(picked_rows)} steps")
        picked_rows.append(i)
        picked_cols.append(j)
        free_rows.remove(i)
        free_cols.remove(j)
        if free_rows:
            rows = np.asarray(free_rows)
            work[rows] -= np.outer(work[rows, j] / pivot, work[i])
    v_strings = tuple(block.row_strings[i] for i in picked_rows)
    w_strings = tuple(block.col_strings[j] for j in picked_cols)
    gram = np.array(block.data[np.ix_(picked_rows, picked_cols)])
    return v_strings, w_strings, gram
