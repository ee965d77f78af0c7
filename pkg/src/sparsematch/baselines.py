"""Reference matchers: plain scan, last-position bad-character scan, failure-function scan.

All three report overlapping occurrences and count every byte comparison made
against the text, so they double as correctness oracles and cost yardsticks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPattern


@dataclass(frozen=True)
class BaselineResult:
    offsets: list[int]
    text_comparisons: int


def _checked(pattern: bytes, text: bytes) -> tuple[bytes, bytes]:
    if len(pattern) == 0:
        raise InvalidPattern("pattern must be non-empty")
    return bytes(pattern), bytes(text)


def naive_find_all(pattern: bytes, text: bytes) -> BaselineResult:
    """Compare left to right at every alignment."""
    pattern, text = _checked(pattern, text)
    n = len(pattern)
    m = len(text)
    offsets: list[int] = []
    comparisons = 0
    first = pattern[0]
    for i in range(m - n + 1):
        comparisons += 1
        if text[i] != first:
            continue
        j = 1
        while j < n:
            comparisons += 1
            if text[i + j] != pattern[j]:
                break
            j += 1
        else:
            offsets.append(i)
    return BaselineResult(offsets, comparisons)


def horspool_find_all(pattern: bytes, text: bytes) -> BaselineResult:
    """Bad-character scan with the shift anchored at the window's last position."""
    pattern, text = _checked(pattern, text)
    n = len(pattern)
    m = len(text)
    table = [n] * 256
    for j in range(n - 1):
        table[pattern[j]] = n - 1 - j
    offsets: list[int] = []
    comparisons = 0
    last_char = pattern[n - 1]
    i = 0
    last = m - n
    while i <= last:
        c = text[i + n - 1]
        comparisons += 1
        if c == last_char:
            j = n - 2
            while j >= 0:
                comparisons += 1
                if text[i + j] != pattern[j]:
                    break
                j -= 1
            else:
                offsets.append(i)
        i += table[c]
    return BaselineResult(offsets, comparisons)


def kmp_find_all(pattern: bytes, text: bytes) -> BaselineResult:
    """Failure-function scan; at most 2*len(text) - 1 text comparisons."""
    pattern, text = _checked(pattern, text)
    n = len(pattern)
    m = len(text)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k

    offsets: list[int] = []
    comparisons = 0
    k = 0
    for i in range(m):
        c = text[i]
        while True:
            comparisons += 1
            if c == pattern[k]:
                k += 1
                break
            if k == 0:
                break
            k = fail[k - 1]
        if k == n:
            offsets.append(i - n + 1)
            k = fail[k - 1]
    return BaselineResult(offsets, comparisons)
