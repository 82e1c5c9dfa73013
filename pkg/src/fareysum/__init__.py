"""Exact Dedekind sums near Farey points.

Normalized Dedekind sums S(a, b) = 12 s(a, b) evaluated exactly, Farey
neighbour predicates decided in integer arithmetic, the Petersson-Knopp
decomposition with per-term expected values, the multiplicity counting
theorem verified by three independent routes, and reproducible deviation
scans with CSV/JSON reports.
"""

from .counting import (
    CountingQuery,
    CountingResult,
    SweepReport,
    SweepRow,
    count_A_brute,
    count_A_formula,
    counting_result,
    lemma1_count,
    multiplicity_histogram,
    sweep_rows,
    verify_lemma3,
    verify_theorem2,
    write_sweep_csv,
)
from .dedekind import (
    DedekindValue,
    dedekind_fast,
    dedekind_naive,
    normalized,
    sawtooth,
)
from .farey import (
    FareyContext,
    FareyPoint,
    PremiseError,
    expected_value,
    farey_context,
    is_farey_neighbour,
    max_neighbour_distance,
    satisfies_theorem1_premises,
    theorem1_premise_failure,
)
from .knopp import (
    Decomposition,
    KnoppTerm,
    decompose,
    decompose_context,
    deviation_profile,
    identity_discrepancy,
    three_term_residual,
    verify_identity,
)
from .experiments import (
    ExampleReport,
    ExperimentConfig,
    ScanAggregate,
    ScanRecord,
    ScanReport,
    format_decimal,
    mean_deviations,
    run_example,
    run_scan,
    select_neighbour,
    write_scan_csv,
    write_scan_json,
)
from .numtheory import (
    ExactRational,
    FactoredNat,
    d_free_part,
    d_part,
    divisors,
    euler_phi,
    factorize,
    gcd,
    isqrt,
    sigma,
    v_p,
)

__version__ = "0.1.0"
