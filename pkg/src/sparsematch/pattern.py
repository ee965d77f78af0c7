"""Pattern preprocessing: locate the sparse substring and build the shift table.

For an ordered byte pair (u, v), a candidate is a substring of the pattern
that starts with u, ends with v, and contains neither u nor v strictly
inside. The sparse substring of a pattern is the rightmost of the longest
candidates over all ordered pairs, rightmost meaning the larger start
offset among equal lengths.

Its end offset anchors a bad-character table: ``shift[c]`` is the distance
from ``end_pos`` back to the nearest earlier occurrence of c, or
``end_pos + 1`` when there is none. By construction this is the smallest
window advance not ruled out by seeing byte c at the anchor, so every
recorded shift is safe and at least 1. Because the end byte cannot recur
strictly inside the sparse substring, ``shift[end_char]`` is exactly
``length - 1`` when the sparse substring starts and ends with the same byte
and at least ``length`` otherwise.

``preprocess`` runs one left-to-right scan that tracks the last occurrence
of each distinct byte, touching each tracked byte once per position, plus
one right-to-left scan to fill the table. ``sparse_brute`` and
``sparse_pair_brute`` re-derive the same answers straight from the
definition at quadratic-and-worse cost; they exist as oracles for tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPattern


@dataclass(frozen=True)
class SparseDescriptor:
    start_pos: int
    end_pos: int
    start_char: int
    end_char: int
    length: int


@dataclass(frozen=True)
class PairSparse:
    """Rightmost longest candidate for one ordered pair; absent when no candidate exists."""

    u: int
    v: int
    start: int | None
    end: int | None
    length: int

    @property
    def present(self) -> bool:
        return self.start is not None


@dataclass(frozen=True)
class PreprocessedPattern:
    pattern: bytes
    n: int
    delta: int
    sparse: SparseDescriptor
    shifts: tuple[int, ...]


def distinct_count(pattern: bytes) -> int:
    return len(set(pattern))


def preprocess(pattern: bytes) -> PreprocessedPattern:
    """Locate the sparse substring and fill the 256-entry shift table."""
    pattern = bytes(pattern)
    n = len(pattern)
    if n == 0:
        raise InvalidPattern("pattern must be non-empty")

    last: dict[int, int] = {}
    best_len = 0
    best_start = 0
    best_end = 0
    for i, c in enumerate(pattern):
        prev = last.get(c, -1)
        # Tracked byte x with no c after it yields the longest valid (x, c)
        # candidate ending at i; later candidates win length ties.
        for x, lx in last.items():
            if lx >= prev:
                length = i - lx + 1
                if length > best_len or (length == best_len and lx > best_start):
                    best_len = length
                    best_start = lx
                    best_end = i
        if best_len < 1 or (best_len == 1 and i > best_start):
            best_len = 1
            best_start = i
            best_end = i
        last[c] = i

    end_pos = best_end
    default = end_pos + 1
    shifts = [default] * 256
    for j in range(end_pos - 1, -1, -1):
        c = pattern[j]
        if shifts[c] == default:
            shifts[c] = end_pos - j

    sparse = SparseDescriptor(
        start_pos=best_start,
        end_pos=end_pos,
        start_char=pattern[best_start],
        end_char=pattern[end_pos],
        length=best_len,
    )
    return PreprocessedPattern(pattern, n, len(last), sparse, tuple(shifts))


def sparse_pair_brute(pattern: bytes, u: int, v: int) -> PairSparse:
    """Definition-level search for one ordered pair; quadratic, test oracle."""
    pattern = bytes(pattern)
    n = len(pattern)
    if n == 0:
        raise InvalidPattern("pattern must be non-empty")
    best_start: int | None = None
    best_end: int | None = None
    best_len = 0
    for s in range(n):
        if pattern[s] != u:
            continue
        for e in range(s, n):
            if pattern[e] != v:
                continue
            inner = pattern[s + 1:e]
            if u in inner or v in inner:
                continue
            length = e - s + 1
            if length > best_len or (length == best_len and s > best_start):
                best_start, best_end, best_len = s, e, length
    return PairSparse(u, v, best_start, best_end, best_len)


def sparse_brute(pattern: bytes) -> SparseDescriptor:
    """Definition-level search over every substring; cubic, test oracle."""
    pattern = bytes(pattern)
    n = len(pattern)
    if n == 0:
        raise InvalidPattern("pattern must be non-empty")
    best_len = 0
    best_start = 0
    best_end = 0
    for s in range(n):
        u = pattern[s]
        for e in range(s, n):
            v = pattern[e]
            inner = pattern[s + 1:e]
            if u in inner or v in inner:
                continue
            length = e - s + 1
            if length > best_len or (length == best_len and s > best_start):
                best_len, best_start, best_end = length, s, e
    return SparseDescriptor(
        start_pos=best_start,
        end_pos=best_end,
        start_char=pattern[best_start],
        end_char=pattern[best_end],
        length=best_len,
    )
