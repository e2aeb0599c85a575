"""Identification of binary hidden Markov processes from exact string distributions.

Given the full table of probabilities a stationary-or-not process assigns to
binary strings of length n, this package decides whether some hidden Markov
process on at most floor((n+1)/2) states generates it, and if so recovers
transition, emission and initial parameters up to relabeling of the hidden
states.  The decision rests on the ranks of finite Hankel blocks of the
table; recovery diagonalizes an operator quotient built from them.
"""

__version__ = "0.1.0"

from .tolerances import ToleranceConfig, DEFAULT_TOLERANCES
from .strings import check_binary, string_index, strings_of_length, strings_up_to
from .distribution import (StringDistribution, validate, marginalize,
                           prefix_probability, is_stationary,
                           load_distribution, save_distribution)
from .hmp import (HmpParams, ObservableSplit, split, string_probability,
                  full_distribution, vandermonde_example, random_stochastic,
                  permute_states, equivalent_up_to_permutation,
                  free_parameters, from_free_parameters, validate_params,
                  load_params, save_params)
from .hankel import HankelBlock, RankReport, hankel_block, numerical_rank, select_basis
from .finitary import (FinitaryParams, FinitaryInference, infer_finitary,
                       infer_finitary_detailed, finitary_probability,
                       process_constraint_residual)
from .recover import (RecoveryOutcome, RecoveryDiagnostics, GenericityReport,
                      recover_hmm, genericity_report,
                      RECOVERED, NOT_GENERIC, NOT_STOCHASTIC)
from .identify import (Verdict, TraceEntry, CertifyReport, identify, certify,
                       verdict_to_jsonable, max_states_cap,
                       HMP, NO_HMP, CANNOT_DECIDE)
from .minors import MinorScanResult, minor_membership, minor_count
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]
