"""Certificates for monotone boolean and real-valued functions.

A certificate at an input is a set of coordinates whose values force the
function's output on every completion. This package provides a certifier
that finds a minimal certificate for a monotone boolean function with
about k log n queries (k the certificate size), a real-valued extension
within a factor two of optimal, the classical local-search baseline,
brute-force ground truth, and an adversarial experiment showing why
insisting on a shortest certificate costs exponentially more.
"""

from .adversary import (
    HardnessTrialStats,
    TrialRecord,
    exhaustive_shortest_cert,
    hardness_experiment,
    iter_hardness_trials,
    make_planted_indicator,
    stats_from_trials,
)
from .bench import BenchRecord, run_bench
from .bitops import ceil_log2
from .brute import (
    ComplexityReport,
    cert_complexity,
    cert_complexity_at,
    dense_table,
    is_certificate,
    is_minimal,
    is_monotone,
)
from .certify import (
    CertifyResult,
    angluin_certify,
    certify_binary,
    certify_real,
    prefix_search,
)
from .errors import (
    BudgetError,
    CapacityError,
    ContractError,
    DimensionError,
    ExhaustionError,
    FormatError,
    KindError,
    MonocertError,
    SearchError,
    VerificationError,
)
from .funcfile import function_from_dict, function_to_dict, load_function, save_function
from .kernels import backend
from .model import (
    Certificate,
    IndexSet,
    MonotoneFunction,
    Point,
    binarize,
    dualize,
    make_dnf,
    make_indicator,
    make_threshold,
    make_truth_table,
    make_weighted_real,
    minterms_of,
    point_of,
    random_monotone_dnf,
    restrict,
    support,
)
from .oracle import CountingOracle

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BudgetError",
    "CapacityError",
    "Certificate",
    "CertifyResult",
    "ComplexityReport",
    "ContractError",
    "CountingOracle",
    "DimensionError",
    "ExhaustionError",
    "FormatError",
    "HardnessTrialStats",
    "IndexSet",
    "KindError",
    "MonocertError",
    "MonotoneFunction",
    "Point",
    "SearchError",
    "TrialRecord",
    "VerificationError",
    "angluin_certify",
    "backend",
    "binarize",
    "ceil_log2",
    "cert_complexity",
    "cert_complexity_at",
    "certify_binary",
    "certify_real",
    "dense_table",
    "dualize",
    "exhaustive_shortest_cert",
    "function_from_dict",
    "function_to_dict",
    "hardness_experiment",
    "is_certificate",
    "is_minimal",
    "is_monotone",
    "iter_hardness_trials",
    "load_function",
    "make_dnf",
    "make_indicator",
    "make_planted_indicator",
    "make_threshold",
    "make_truth_table",
    "make_weighted_real",
    "minterms_of",
    "point_of",
    "prefix_search",
    "random_monotone_dnf",
    "restrict",
    "run_bench",
    "save_function",
    "stats_from_trials",
    "support",
]
