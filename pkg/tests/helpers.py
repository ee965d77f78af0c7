"""Shared test utilities: an independent match oracle and corpus generators.

The oracle deliberately avoids every code path under test: it finds
occurrences by slicing, nothing else.
"""

from __future__ import annotations

import random

SIGMAS = (1, 2, 4, 16, 64, 256)


def naive_offsets(pattern: bytes, text: bytes) -> list[int]:
    """All occurrence offsets of pattern in text, by direct slicing."""
    n = len(pattern)
    return [i for i in range(len(text) - n + 1) if text[i : i + n] == pattern]


def rand_bytes(rng: random.Random, length: int, sigma: int) -> bytes:
    return bytes(rng.randrange(sigma) for _ in range(length))


def pattern_text_pairs(seed: int, count: int, max_n: int = 32, max_m: int = 4096):
    """Yield (pattern, text) pairs spanning tiny alphabets through full bytes.

    Text lengths are log-spread so very short texts (including m < n and
    m == 0) show up often instead of being drowned out by long ones.
    """
    rng = random.Random(seed)
    for _ in range(count):
        sigma = rng.choice(SIGMAS)
        n = rng.randint(1, max_n)
        k = rng.randrange(13)
        if k < 6:
            cap = 1 << rng.randrange(13)
            m = rng.randrange(min(cap, max_m) + 1)
        elif k < 8:
            m = 0
        else:
            m = rng.randrange(max_m + 1)
        pattern = rand_bytes(rng, n, sigma)
        if m >= n and rng.random() < 0.5:
            # plant the pattern so matches are common even at sigma=256
            pos = rng.randrange(m - n + 1)
            text = bytearray(rand_bytes(rng, m, sigma))
            text[pos : pos + n] = pattern
            text = bytes(text)
        else:
            text = rand_bytes(rng, m, sigma)
        yield pattern, text
