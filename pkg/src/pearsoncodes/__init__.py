"""Pearson codes: codebooks that a minimum Pearson distance detector can
decode unambiguously, their exact sizes, and a gain/offset channel to
exercise them."""

__version__ = "0.1.0"

from .channel import ChannelParams, TrialStats, run_experiment, simulate, transmit
from .codebook import (
    NotPearsonCodeError,
    PearsonViolation,
    ViolationKind,
    build_union_example,
    canonical_class_count,
    canonicalize,
    enumerate_pearson,
    enumerate_t_constrained,
    is_canonical,
    pearson_codebook,
    t_constrained_codebook,
    verify_pearson,
)
from .core import (
    BudgetExceededError,
    Codebook,
    CodebookFormatError,
    DomainError,
    PearsonError,
    Word,
    read_codebook,
    word_gcd,
    word_max,
    word_min,
    write_codebook,
)
from .counting import (
    RedundancyReport,
    count_pearson_closed,
    count_pearson_n2,
    count_pearson_n3,
    count_pearson_recursive,
    count_t_constrained,
    mobius,
    pearson_asymptotic_gap,
    pearson_polynomial,
    redundancy_report,
    totient,
)
from .detection import (
    DegenerateInputError,
    DetectionResult,
    EuclideanDetector,
    PearsonDetector,
    detect_min_euclidean,
    detect_min_pearson,
    pearson_correlation,
    pearson_distance,
    vector_mean,
    vector_sigma,
)
