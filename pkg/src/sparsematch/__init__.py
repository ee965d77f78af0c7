"""Byte-exact substring search anchored on a sparse substring, with reference
baselines and a Monte-Carlo measurement harness."""

from .baselines import (
    BaselineResult,
    horspool_find_all,
    kmp_find_all,
    naive_find_all,
)
from .errors import InvalidArguments, InvalidPattern, OracleMismatch
from .experiments import (
    KNOWN_ALGOS,
    BenchReport,
    BenchRow,
    MeanShiftReport,
    SparseLenReport,
    WaitingTimeReport,
    bench_compare,
    coupon_expectation,
    estimate_sparse_len,
    mean_shift_report,
    random_string,
    simulate_waiting_time,
    sparse_len_bound,
)
from .pattern import (
    PairSparse,
    PreprocessedPattern,
    SparseDescriptor,
    distinct_count,
    preprocess,
    sparse_brute,
    sparse_pair_brute,
)
from .rng import SplitMix64, random_permutation
from .search import SearchConfig, SearchStats, find_all, random_match

__version__ = "0.1.0"

__all__ = [
    "BaselineResult",
    "BenchReport",
    "BenchRow",
    "InvalidArguments",
    "InvalidPattern",
    "KNOWN_ALGOS",
    "MeanShiftReport",
    "OracleMismatch",
    "PairSparse",
    "PreprocessedPattern",
    "SearchConfig",
    "SearchStats",
    "SparseDescriptor",
    "SparseLenReport",
    "SplitMix64",
    "WaitingTimeReport",
    "bench_compare",
    "coupon_expectation",
    "distinct_count",
    "estimate_sparse_len",
    "find_all",
    "horspool_find_all",
    "kmp_find_all",
    "mean_shift_report",
    "naive_find_all",
    "preprocess",
    "random_match",
    "random_permutation",
    "random_string",
    "simulate_waiting_time",
    "sparse_brute",
    "sparse_len_bound",
    "sparse_pair_brute",
]
