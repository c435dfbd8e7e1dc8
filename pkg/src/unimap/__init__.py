"""Exact enumeration of rooted one-face maps by edge count and genus.

Six independent routes to the counts (a partition sum, an odd-cycle
permutation form, a Stirling convolution, a power-series coefficient, and
two recurrences) are implemented over exact arithmetic and cross-verified
against a brute-force permutation oracle, together with mechanical
certificates for the sign-reversing involutions, shift-operator identities,
real-rootedness, and log-concavity that tie them together.
"""

from .closed_forms import (
    GenusTable,
    a_via_convolution,
    a_via_odd_cycles,
    catalan,
    convolution_polynomial,
    genus_range,
    genus_table,
    genus_table_from_polynomial,
    h_polynomial,
    harer_zagier_coefficient,
    hz_polynomial,
    lehman_walsh,
    stirling_convolution,
    stirling_convolution_sum,
)
from .combinatorics import (
    Partition,
    StirlingTable,
    binomial,
    factorial,
    falling_factorial,
    odd_cycle_permutations,
    odd_cycle_recurrence_sum,
    odd_cycle_recurrence_three_term,
    partitions_of,
    stirling_first_unsigned,
)
from .errors import (
    BoundExceeded,
    DegenerateOperator,
    NonIntegerResult,
    NotAnchored,
    OddSize,
    ParityViolation,
    PremiseViolation,
    SizeMismatch,
    UnimapError,
)
from .involutions import (
    AuditCheck,
    AuditReport,
    PairClass,
    WeightedPair,
    classify,
    enumerate_pairs,
    orbit_audit,
    pair_space_size,
    signed_sum,
    signed_sum_matches_odd_cycle_count,
    toggle_element,
    toggle_even_cycle,
)
from .oracle import (
    MapTriple,
    Permutation,
    brute_force_table,
    compose,
    cycle_count,
    decode_triple,
    enumerate_fpf_involutions,
    genus_of,
    long_cycle,
    oracle_cap,
)
from .recurrences import (
    RecurrenceTable,
    chapuy_table,
    hz_recurrence_table,
    tables_agree,
)
from .symbolic import (
    OperatorPolynomial,
    Polynomial,
    TruncatedSeries,
    apply_shift_operator,
    central_difference_coefficient_identity_holds,
    central_difference_identity_holds,
    central_difference_polynomial,
    central_difference_premises_hold,
    falling_factorial_poly,
    log_concave,
    shift_operator_polynomial,
    stanley_polynomial,
    sturm_negative_real_rooted,
    tanh_ratio_series,
)

__version__ = "0.1.0"
