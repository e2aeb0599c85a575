"""Turn a finitary parametrization into a stochastic hidden Markov one.

If a distribution really comes from a hidden Markov process with invertible
transition matrix M and pairwise distinct per-state probabilities of emitting
'0', then any e-dimensional finitary parametrization (T0, T1, x) of it is a
similarity transform of the hidden-state one, and the transform can be undone:
Q = T0 (T0+T1)^(-1) is similar to the diagonal matrix of emission
probabilities, so diagonalizing Q and rescaling the eigenvector basis to have
unit row sums lands exactly on the state coordinates, up to the order in
which eigenvalues are listed.  Failure of any genericity condition along the
way is reported as NotGeneric; a successful change of basis whose result is
not a stochastic parametrization is reported as NotStochastic, which proves
the input distribution is not an HMP of this dimension.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .finitary import FinitaryParams
from .hmp import HmpParams
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig

RECOVERED = "recovered"
NOT_GENERIC = "not_generic"
NOT_STOCHASTIC = "not_stochastic"

DET_FLOOR = 1e-10            # |det(T0+T1)| below DET_FLOOR * scale^e counts as singular
RESCALE_FLOOR = 1e-12        # entries of U^(-1) 1 below this block the unit-sum rescaling


@dataclass(frozen=True)
class RecoveryDiagnostics:
    eigenvalues: tuple
    min_eigenvalue_gap: float
    det_mixed: float                 # det(T0 + T1)
    max_imag: float | None = None
    max_stochastic_violation: float | None = None
    o1_residual: float | None = None  # |(S^-1 T1 S) M^-1 - (I - O_0)|, a consistency check


@dataclass(frozen=True)
class RecoveryOutcome:
    kind: str
    params: HmpParams | None
    reason: str | None
    diagnostics: RecoveryDiagnostics


def _min_pairwise_gap(values: np.ndarray) -> float:
    if values.size < 2:
        return float("inf")
    diff = np.abs(values[:, None] - values[None, :])
    return float(diff[~np.eye(values.size, dtype=bool)].min())


def recover_hmm(fp: FinitaryParams, tol: ToleranceConfig | None = None,
                eigenvalue_order=None) -> RecoveryOutcome:
    """Attempt the change of basis back to hidden-state coordinates.

    eigenvalue_order permutes the canonically sorted eigenvalues before the
    basis is built; every choice that succeeds yields the same parametrization
    up to state relabeling, which is exactly the ambiguity left by the model.
    """
    tol = tol or DEFAULT_TOLERANCES
    e = fp.e
    mixed = fp.t0 + fp.t1
    det_mixed = float(np.linalg.det(mixed))
    scale = float(np.max(np.abs(mixed)))
    bare = RecoveryDiagnostics((), float("inf"), det_mixed)
    if scale == 0.0 or abs(det_mixed) < DET_FLOOR * scale ** e:
        return RecoveryOutcome(NOT_GENERIC, None, "M not invertible", bare)
    try:
        q = fp.t0 @ np.linalg.inv(mixed)
        eigvals, eigvecs = np.linalg.eig(q)
    except np.linalg.LinAlgError as exc:
        return RecoveryOutcome(NOT_GENERIC, None, f"eigendecomposition failed: {exc}", bare)

    order = np.lexsort((eigvals.imag, eigvals.real))
    if eigenvalue_order is not None:
        order = order[np.asarray(eigenvalue_order)]
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    gap = _min_pairwise_gap(eigvals)
    diag = RecoveryDiagnostics(tuple(eigvals), gap, det_mixed)
    if gap < tol.eig_gap_tol:
        return RecoveryOutcome(NOT_GENERIC, None, "eigenvalues not pairwise different", diag)

    try:
        rescale = np.linalg.solve(eigvecs, np.ones(e))
    except np.linalg.LinAlgError:
        return RecoveryOutcome(NOT_GENERIC, None, "eigenvalues not pairwise different", diag)
    if np.min(np.abs(rescale)) < RESCALE_FLOOR:
        return RecoveryOutcome(NOT_GENERIC, None, "eigenvector rescaling singular", diag)
    s = eigvecs * rescale[None, :]   # S = U diag(U^-1 1), so S 1 = 1 exactly

    try:
        m = np.linalg.solve(s, mixed @ s)
        alt_o1 = np.linalg.solve(s, fp.t1 @ s) @ np.linalg.inv(m)
    except np.linalg.LinAlgError as exc:
        return RecoveryOutcome(NOT_GENERIC, None, f"basis change failed: {exc}", diag)
    pi = s.T @ fp.x
    o1_residual = float(np.max(np.abs(alt_o1 - np.diag(1.0 - eigvals))))

    pieces = np.concatenate([m.ravel(), pi.ravel(), eigvals])
    max_imag = float(np.max(np.abs(pieces.imag)))
    diag = RecoveryDiagnostics(tuple(eigvals), gap, det_mixed,
                               max_imag=max_imag, o1_residual=o1_residual)
    if max_imag > tol.tol_stochastic:
        return RecoveryOutcome(
            NOT_STOCHASTIC, None,
            f"complex entries survive (max imaginary part {max_imag:.3e})", diag)

    m = m.real
    pi = pi.real
    lam = eigvals.real
    emission = np.column_stack([lam, 1.0 - lam])
    violation = 0.0
    witness = None
    for name, arr in (("transition", m), ("emission", emission),
                      ("initial", pi.reshape(1, -1))):
        outside = np.abs(arr - np.clip(arr, 0.0, 1.0))
        if outside.max() > violation:
            violation = float(outside.max())
            idx = np.unravel_index(int(np.argmax(outside)), arr.shape)
            witness = f"{name}[{','.join(map(str, idx))}] = {arr[idx]:.6g}"
        row_err = float(np.max(np.abs(arr.sum(axis=1) - 1.0)))
        if row_err > violation:
            violation = row_err
            worst = int(np.argmax(np.abs(arr.sum(axis=1) - 1.0)))
            witness = f"{name} row {worst} sums to {arr.sum(axis=1)[worst]:.6g}"
    diag = RecoveryDiagnostics(tuple(eigvals), gap, det_mixed, max_imag=max_imag,
                               max_stochastic_violation=violation,
                               o1_residual=o1_residual)
    if violation > tol.tol_stochastic:
        return RecoveryOutcome(NOT_STOCHASTIC, None, witness, diag)

    e0 = np.clip(lam, 0.0, 1.0)
    params = HmpParams(e, np.clip(m, 0.0, 1.0),
                       np.column_stack([e0, 1.0 - e0]),
                       np.clip(pi, 0.0, 1.0))
    return RecoveryOutcome(RECOVERED, params, None, diag)


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    det_transition: float
    min_emission_gap: float


def genericity_report(params: HmpParams, tol: ToleranceConfig | None = None) -> GenericityReport:
    """Computable genericity of a known parametrization.

    Checks the two conditions recovery relies on: invertible transition matrix
    and pairwise distinct probabilities of emitting '0'.  Rank-deficiency of
    the induced distribution is a separate matter, caught by the rank tests.
    """
    tol = tol or DEFAULT_TOLERANCES
    det = float(np.linalg.det(params.transition))
    scale = float(np.max(np.abs(params.transition)))
    invertible = scale > 0.0 and abs(det) >= DET_FLOOR * scale ** params.d
    gap = _min_pairwise_gap(params.emission[:, 0].astype(complex))
    return GenericityReport(bool(invertible and gap > tol.eig_gap_tol), det, gap)
