"""Exact Lambert series factorization for classical arithmetic functions."""

from .arithmetic import (
    FunctionPair,
    builtin_pairs,
    divisor_sum_transform,
    divisors,
    euler_phi,
    factorize,
    get_pair,
    liouville_lambda,
    moebius,
    sigma_alpha,
)
from .factorization import (
    AfSequence,
    AverageOrderTable,
    BVector,
    InconsistencyError,
    UnitLowerTriangular,
    a_f_sequence,
    build_A,
    build_A_inverse,
    closed_B_lambda,
    closed_B_mu,
    closed_B_phi,
    compute_B,
    distinct_partition_stat,
    entry_a,
    g_recurrence,
    q_polynomial,
    recover_f,
    sigma_recurrence,
)
from .pentagonal import PentagonalTerm, enumerate_pentagonal, euler_coefficient, partition_number, pentagonal_bound
from .series import TruncatedSeries

__version__ = "0.1.0"
