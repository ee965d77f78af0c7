"""Monte-Carlo harness: sparse-length statistics, coupon waiting times, and
comparison-count benchmarks gated on offset agreement.

Trial t of a run seeded with s derives its own seed ``(s + t) mod 2**64``, so
aggregates are independent of trial execution order and any single trial can
be replayed in isolation from its derived seed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .baselines import horspool_find_all, kmp_find_all, naive_find_all
from .errors import InvalidArguments, OracleMismatch
from .pattern import PreprocessedPattern, preprocess
from .rng import SplitMix64
from .search import SearchConfig, SearchStats, find_all

_MASK64 = (1 << 64) - 1

KNOWN_ALGOS = ("sparse", "naive", "horspool", "kmp")

_BASELINES = {
    "naive": naive_find_all,
    "horspool": horspool_find_all,
    "kmp": kmp_find_all,
}


def _trial_seed(seed: int, index: int) -> int:
    return (seed + index) & _MASK64


def random_string(n: int, sigma: int, rng: SplitMix64) -> bytes:
    """n bytes drawn independently and uniformly from the first sigma byte values."""
    if not 1 <= sigma <= 256:
        raise InvalidArguments(f"sigma must be in [1, 256], got {sigma}")
    if n < 0:
        raise InvalidArguments(f"n must be >= 0, got {n}")
    next64 = rng.next64
    return bytes((next64() * sigma) >> 64 for _ in range(n))


@dataclass(frozen=True)
class SparseLenReport:
    sigma: int
    n: int
    trials: int
    seed: int
    mean_distinct: float
    mean_sparse_len: float
    bound_value: float
    min_sparse_len: int
    lemma5_violations: int


def sparse_len_bound(sigma: int, mean_distinct: float) -> float:
    """Coupon-collector estimate sigma * ln(2*sigma / (2*sigma - delta + 1))."""
    return sigma * math.log(2 * sigma / (2 * sigma - mean_distinct + 1))


def estimate_sparse_len(n: int, sigma: int, trials: int, seed: int = 0) -> SparseLenReport:
    """Sample random patterns and measure their sparse-substring lengths."""
    if n < 1:
        raise InvalidArguments(f"n must be >= 1, got {n}")
    if trials < 1:
        raise InvalidArguments(f"trials must be >= 1, got {trials}")
    total_distinct = 0
    total_len = 0
    min_len = n + 1
    violations = 0
    for t in range(trials):
        rng = SplitMix64(_trial_seed(seed, t))
        pp = preprocess(random_string(n, sigma, rng))
        length = pp.sparse.length
        total_distinct += pp.delta
        total_len += length
        if length < min_len:
            min_len = length
        if length < pp.delta:
            violations += 1
    mean_distinct = total_distinct / trials
    return SparseLenReport(
        sigma=sigma,
        n=n,
        trials=trials,
        seed=seed,
        mean_distinct=mean_distinct,
        mean_sparse_len=total_len / trials,
        bound_value=sparse_len_bound(sigma, mean_distinct),
        min_sparse_len=min_len,
        lemma5_violations=violations,
    )


def coupon_expectation(sigma: int, r: int) -> float:
    """Expected uniform draws over sigma values until r distinct values are seen."""
    if sigma < 1:
        raise InvalidArguments(f"sigma must be >= 1, got {sigma}")
    if not 1 <= r <= sigma:
        raise InvalidArguments(f"r must be in [1, sigma], got r={r}, sigma={sigma}")
    return sum(sigma / (sigma - i) for i in range(r))


@dataclass(frozen=True)
class WaitingTimeReport:
    sigma: int
    r: int
    trials: int
    seed: int
    exact: float
    simulated: float


def simulate_waiting_time(sigma: int, r: int, trials: int, seed: int = 0) -> WaitingTimeReport:
    """Monte-Carlo counterpart of ``coupon_expectation``."""
    exact = coupon_expectation(sigma, r)
    if trials < 1:
        raise InvalidArguments(f"trials must be >= 1, got {trials}")
    total_draws = 0
    for t in range(trials):
        rng = SplitMix64(_trial_seed(seed, t))
        next64 = rng.next64
        seen = bytearray(sigma)
        remaining = r
        draws = 0
        while remaining:
            v = (next64() * sigma) >> 64
            draws += 1
            if not seen[v]:
                seen[v] = 1
                remaining -= 1
        total_draws += draws
    return WaitingTimeReport(sigma, r, trials, seed, exact, total_draws / trials)


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    m: int
    sigma: int
    seed: int
    trials: int
    mean_text_comparisons: float
    comparisons_per_text_char: float
    mean_shift: float
    type1: int
    type2: int
    type3: int
    matches: int
    wall_ns: int


@dataclass(frozen=True)
class BenchReport:
    rows: list[BenchRow]
    mean_sparse_len: float


def bench_compare(n: int, m: int, sigma: int, trials: int, seed: int = 0,
                  algos: tuple[str, ...] | list[str] = KNOWN_ALGOS) -> BenchReport:
    """Aggregate comparison counts per algorithm over shared random corpora.

    Every trial runs all selected algorithms on the same pattern and text and
    requires identical offset lists; any disagreement raises OracleMismatch
    carrying the derived seed of the failing trial. Event and shift columns
    apply to the sparse matcher only and are zero for the baselines.
    """
    if n < 1:
        raise InvalidArguments(f"n must be >= 1, got {n}")
    if m < 1:
        raise InvalidArguments(f"m must be >= 1, got {m}")
    if trials < 1:
        raise InvalidArguments(f"trials must be >= 1, got {trials}")
    names = list(dict.fromkeys(algos))
    if not names:
        raise InvalidArguments("algos must not be empty")
    unknown = sorted(set(names) - set(KNOWN_ALGOS))
    if unknown:
        raise InvalidArguments(f"unknown algorithms: {', '.join(unknown)}")

    comparisons = dict.fromkeys(names, 0)
    wall = dict.fromkeys(names, 0)
    matches = dict.fromkeys(names, 0)
    t1 = t2 = t3 = 0
    shift_total = 0
    length_total = 0

    for t in range(trials):
        trial_seed = _trial_seed(seed, t)
        rng = SplitMix64(trial_seed)
        pattern = random_string(n, sigma, rng)
        text = random_string(m, sigma, rng)
        pp = preprocess(pattern)
        length_total += pp.sparse.length
        reference: list[int] | None = None
        for name in names:
            begin = time.perf_counter_ns()
            if name == "sparse":
                offsets, stats = find_all(pp, text, SearchConfig(seed=trial_seed))
                comparisons[name] += stats.text_comparisons
                t1 += stats.type1_events
                t2 += stats.type2_events
                t3 += stats.type3_events
                shift_total += stats.total_shift
            else:
                result = _BASELINES[name](pattern, text)
                offsets = result.offsets
                comparisons[name] += result.text_comparisons
            wall[name] += time.perf_counter_ns() - begin
            matches[name] += len(offsets)
            if reference is None:
                reference = offsets
            elif offsets != reference:
                raise OracleMismatch(
                    f"offsets disagree between {names[0]} and {name} "
                    f"(n={n}, m={m}, sigma={sigma}, trial={t})",
                    seed=trial_seed,
                )

    rows = []
    for name in names:
        mean_comparisons = comparisons[name] / trials
        if name == "sparse":
            events = t1 + t2 + t3
            mean_shift = shift_total / events if events else 0.0
            row_events = (t1, t2, t3)
        else:
            mean_shift = 0.0
            row_events = (0, 0, 0)
        rows.append(BenchRow(
            algo=name,
            n=n,
            m=m,
            sigma=sigma,
            seed=seed,
            trials=trials,
            mean_text_comparisons=mean_comparisons,
            comparisons_per_text_char=mean_comparisons / m,
            mean_shift=mean_shift,
            type1=row_events[0],
            type2=row_events[1],
            type3=row_events[2],
            matches=matches[name],
            wall_ns=wall[name],
        ))
    return BenchReport(rows, length_total / trials)


@dataclass(frozen=True)
class MeanShiftReport:
    runs: int
    type1_events: int
    type23_events: int
    type1_mean_shift: float
    type23_mean_shift: float


def mean_shift_report(runs) -> MeanShiftReport:
    """Split observed total shift into per-event-type means.

    Every Type-2/3 event advances by the pattern's anchor entry, so that part
    is exact and the Type-1 remainder follows from the recorded total. The
    anchor floor (length - 1, or length when the sparse substring's end byte
    differs from its start byte) is enforced on every run.
    """
    run_count = 0
    t1_events = 0
    t23_events = 0
    t1_shift = 0
    t23_shift = 0
    for pp, stats in runs:
        run_count += 1
        sparse = pp.sparse
        anchor = pp.shifts[sparse.end_char]
        floor = sparse.length - 1 if sparse.start_char == sparse.end_char else sparse.length
        if anchor < floor:
            raise OracleMismatch(
                f"anchor shift {anchor} below floor {floor}", seed=0)
        t23 = stats.type2_events + stats.type3_events
        t1_events += stats.type1_events
        t23_events += t23
        t23_shift += t23 * anchor
        t1_shift += stats.total_shift - t23 * anchor
    if run_count == 0:
        raise InvalidArguments("runs must not be empty")
    return MeanShiftReport(
        runs=run_count,
        type1_events=t1_events,
        type23_events=t23_events,
        type1_mean_shift=t1_shift / t1_events if t1_events else 0.0,
        type23_mean_shift=t23_shift / t23_events if t23_events else 0.0,
    )
