"""Sliding-window search driven by the sparse-substring anchor.

Each window is probed at the anchor (``end_pos``) first. A mismatch there is
a Type-1 event and shifts by the table entry for the observed byte. A match
followed by a mismatch at ``start_pos`` is Type-2; a match at both is Type-3
and hands the window to the randomized verifier. Type-2/3 events shift by the
anchor byte's own table entry.

Counters cover byte comparisons against the text only:
``text_comparisons == type1 + 2 * (type2 + type3) + verifier_comparisons``.

The verifier inspects window positions in the order of a fresh uniform
permutation per call, stopping at the first mismatch. Identical strings make
the outcome and the comparison count (all n positions) independent of the
order, so that case is answered by direct equality without consuming any
generator words; otherwise the permutation is materialized lazily, one word
per inspected position, in exactly the order ``random_permutation`` would
produce from the same generator state.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import InvalidArguments
from .pattern import PreprocessedPattern
from .rng import SplitMix64


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    collect_stats: bool = True


@dataclass
class SearchStats:
    text_comparisons: int = 0
    type1_events: int = 0
    type2_events: int = 0
    type3_events: int = 0
    verifier_calls: int = 0
    verifier_comparisons: int = 0
    total_shift: int = 0
    matches: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def random_match(pattern: bytes, candidate: bytes, rng: SplitMix64,
                 stats: SearchStats | None = None) -> bool:
    """Compare equal-length strings position by position in random order.

    Returns True exactly when the strings are equal, under every seed.
    """
    n = len(pattern)
    if n == 0:
        raise InvalidArguments("strings must be non-empty")
    if len(candidate) != n:
        raise InvalidArguments(
            f"length mismatch: {n} vs {len(candidate)}")
    if stats is not None:
        stats.verifier_calls += 1
    if pattern == candidate:
        if stats is not None:
            stats.verifier_comparisons += n
        return True
    order = list(range(n))
    comparisons = 0
    for k in range(n):
        if n - k > 1:
            r = k + ((rng.next64() * (n - k)) >> 64)
            order[k], order[r] = order[r], order[k]
        j = order[k]
        comparisons += 1
        if pattern[j] != candidate[j]:
            break
    if stats is not None:
        stats.verifier_comparisons += comparisons
    return False


def find_all(pp: PreprocessedPattern, text: bytes,
             config: SearchConfig | None = None) -> tuple[list[int], SearchStats]:
    """Report every occurrence offset, overlapping included, in ascending order.

    Stats are populated when ``config.collect_stats``; the offsets themselves
    never depend on that flag, and fixed seeds give identical runs.
    """
    if config is None:
        config = SearchConfig()
    pattern = pp.pattern
    n = pp.n
    text = bytes(text)
    m = len(text)
    offsets: list[int] = []
    stats = SearchStats()
    if m < n:
        return offsets, stats

    sparse = pp.sparse
    start_pos = sparse.start_pos
    end_pos = sparse.end_pos
    start_char = sparse.start_char
    end_char = sparse.end_char
    shifts = pp.shifts
    anchor = shifts[end_char]
    rng = SplitMix64(config.seed)
    track = config.collect_stats
    live = stats if track else None

    t1 = t2 = t3 = 0
    probe_comparisons = 0
    total_shift = 0
    i = 0
    last = m - n
    while i <= last:
        c = text[i + end_pos]
        if c != end_char:
            t1 += 1
            probe_comparisons += 1
            step = shifts[c]
        elif text[i + start_pos] != start_char:
            t2 += 1
            probe_comparisons += 2
            step = anchor
        else:
            t3 += 1
            probe_comparisons += 2
            if random_match(pattern, text[i:i + n], rng, live):
                offsets.append(i)
            step = anchor
        total_shift += step
        i += step

    if track:
        stats.type1_events = t1
        stats.type2_events = t2
        stats.type3_events = t3
        stats.text_comparisons = probe_comparisons + stats.verifier_comparisons
        stats.total_shift = total_shift
        stats.matches = len(offsets)
    return offsets, stats
