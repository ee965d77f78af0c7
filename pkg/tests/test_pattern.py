"""Preprocessing tests: descriptor goldens, brute-force cross-checks, shift rules."""

from __future__ import annotations

import random

import pytest

from sparsematch.errors import InvalidPattern
from sparsematch.pattern import (
    SparseDescriptor,
    distinct_count,
    preprocess,
    sparse_brute,
    sparse_pair_brute,
)

from helpers import rand_bytes

WORKED = b"abcabdacabdbb"

# Per-pair windows for WORKED, frozen from the quadratic brute force.
# Format: (u, v) -> (start, end, length).
WORKED_PAIRS = {
    ("a", "a"): (3, 6, 4),
    ("a", "b"): (8, 9, 2),
    ("a", "c"): (0, 2, 3),
    ("a", "d"): (8, 10, 3),
    ("b", "a"): (4, 6, 3),
    ("b", "b"): (4, 9, 6),
    ("b", "c"): (4, 7, 4),
    ("b", "d"): (9, 10, 2),
    ("c", "a"): (7, 8, 2),
    ("c", "b"): (7, 9, 3),
    ("c", "c"): (2, 7, 6),
    ("c", "d"): (7, 10, 4),
    ("d", "a"): (5, 6, 2),
    ("d", "b"): (5, 9, 5),
    ("d", "c"): (5, 7, 3),
    ("d", "d"): (5, 10, 6),
}


def test_worked_pattern_pair_windows():
    for (u, v), (start, end, length) in WORKED_PAIRS.items():
        ps = sparse_pair_brute(WORKED, ord(u), ord(v))
        assert ps.present
        assert (ps.start, ps.end, ps.length) == (start, end, length), (u, v)


def test_worked_pattern_absent_pair():
    ps = sparse_pair_brute(WORKED, ord("e"), ord("a"))
    assert not ps.present
    assert ps.length == 0


def test_worked_pattern_descriptor():
    # Two pairs tie at length 6: (b,b) over [4,9] and (d,d) over [5,10].
    # The later window wins.
    pp = preprocess(WORKED)
    assert pp.sparse == SparseDescriptor(
        start_pos=5, end_pos=10, start_char=ord("d"), end_char=ord("d"), length=6
    )
    assert WORKED[pp.sparse.start_pos : pp.sparse.end_pos + 1] == b"dacabd"
    assert pp.delta == 4


def test_worked_pattern_shift_table():
    pp = preprocess(WORKED)
    assert pp.shifts[ord("a")] == 2
    assert pp.shifts[ord("b")] == 1
    assert pp.shifts[ord("c")] == 3
    assert pp.shifts[ord("d")] == 5
    # every byte not in P[0..end_pos-1] gets end_pos + 1
    assert pp.shifts[ord("e")] == 11
    assert pp.shifts[0] == 11


@pytest.mark.parametrize(
    "pattern,start,end,length",
    [
        (b"a", 0, 0, 1),
        (b"aaaa", 2, 3, 2),  # rightmost of the three equal-length (a,a) windows
        (b"ab", 0, 1, 2),
    ],
)
def test_small_descriptors(pattern, start, end, length):
    pp = preprocess(pattern)
    assert (pp.sparse.start_pos, pp.sparse.end_pos, pp.sparse.length) == (
        start,
        end,
        length,
    )


def test_abab_descriptor_explicit():
    # (a,a) at [0,2] and (b,b) at [1,3] both reach length 3; later start wins
    pp = preprocess(b"abab")
    assert (pp.sparse.start_pos, pp.sparse.end_pos) == (1, 3)
    assert b"abab"[1:4] == b"bab"


def test_preprocess_matches_brute_force_fuzz():
    rng = random.Random(101)
    for _ in range(600):
        sigma = rng.choice((1, 2, 4, 16, 256))
        n = rng.randint(1, 64)
        pattern = rand_bytes(rng, n, sigma)
        assert preprocess(pattern).sparse == sparse_brute(pattern), pattern


def test_sparse_length_at_least_distinct_count():
    rng = random.Random(202)
    for _ in range(400):
        sigma = rng.choice((2, 4, 16, 64))
        pattern = rand_bytes(rng, rng.randint(1, 48), sigma)
        pp = preprocess(pattern)
        assert pp.sparse.length >= distinct_count(pattern)


def _oracle_shift(pattern: bytes, end_pos: int, c: int) -> int:
    # smallest k >= 1 that either clears the window or lines c up with itself
    for k in range(1, end_pos + 2):
        if k > end_pos or pattern[end_pos - k] == c:
            return k
    raise AssertionError("unreachable")


def test_shift_table_matches_oracle_fuzz():
    rng = random.Random(303)
    for _ in range(300):
        sigma = rng.choice((1, 2, 4, 16, 256))
        pattern = rand_bytes(rng, rng.randint(1, 40), sigma)
        pp = preprocess(pattern)
        end_pos = pp.sparse.end_pos
        for c in range(256):
            assert pp.shifts[c] == _oracle_shift(pattern, end_pos, c), (pattern, c)


def test_shift_table_bounds_and_anchor_rule():
    rng = random.Random(404)
    for _ in range(300):
        sigma = rng.choice((1, 2, 4, 16, 64))
        pattern = rand_bytes(rng, rng.randint(1, 40), sigma)
        pp = preprocess(pattern)
        sd = pp.sparse
        for c in range(256):
            assert 1 <= pp.shifts[c] <= sd.end_pos + 1
        anchor = pp.shifts[sd.end_char]
        if sd.start_char == sd.end_char:
            assert anchor == sd.length - 1 or sd.length == 1
        if sd.length > 1 and sd.start_char != sd.end_char:
            assert anchor >= sd.length


def test_descriptor_is_rightmost_longest_over_all_pairs():
    rng = random.Random(505)
    for _ in range(200):
        sigma = rng.choice((2, 4, 8))
        pattern = rand_bytes(rng, rng.randint(1, 24), sigma)
        sd = preprocess(pattern).sparse
        for u in set(pattern):
            for v in set(pattern):
                ps = sparse_pair_brute(pattern, u, v)
                if not ps.present:
                    continue
                assert ps.length <= sd.length
                if ps.length == sd.length:
                    assert ps.start <= sd.start_pos


def test_single_byte_runs():
    for n in (1, 2, 3, 7):
        pp = preprocess(b"z" * n)
        sd = pp.sparse
        if n == 1:
            assert (sd.start_pos, sd.end_pos, sd.length) == (0, 0, 1)
        else:
            assert sd.length == 2
            assert (sd.start_pos, sd.end_pos) == (n - 2, n - 1)


def test_empty_pattern_rejected():
    with pytest.raises(InvalidPattern):
        preprocess(b"")
    with pytest.raises(InvalidPattern):
        sparse_brute(b"")
    with pytest.raises(InvalidPattern):
        sparse_pair_brute(b"", 0, 0)


def test_distinct_count():
    assert distinct_count(b"a") == 1
    assert distinct_count(WORKED) == 4
    assert distinct_count(bytes(range(256))) == 256
