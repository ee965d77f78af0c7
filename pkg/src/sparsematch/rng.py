"""Deterministic random source for the verifier and the experiment harness.

Every randomized run must be reproducible from its seed alone, across
processes and across independent implementations, so the generator is pinned
to three fixed rules rather than delegating to the interpreter's RNG:

* Stream: splitmix64. The 64-bit state advances by 0x9E3779B97F4A7C15 per
  draw; the output is the new state passed through two xor-shift-multiply
  rounds (constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) and a final
  ``z ^ (z >> 31)``.
* Bounded draw: ``below(k)`` maps one raw 64-bit word x to ``(x * k) >> 64``.
* Permutation: forward Fisher-Yates sweep over ``[0, n)``; step k swaps
  positions k and ``k + below(n - k)``, consuming exactly one word per step
  for k < n - 1 and none for the final fixed position.

Any implementation following the same three rules reproduces identical
streams, draws, and permutations for a given seed.
"""

from __future__ import annotations

from .errors import InvalidArguments

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream seeded with a 64-bit integer (wider seeds are masked)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound), one word per call."""
        if bound < 1:
            raise InvalidArguments(f"bound must be >= 1, got {bound}")
        return (self.next64() * bound) >> 64


def random_permutation(n: int, rng: SplitMix64) -> list[int]:
    """Uniform permutation of 0..n-1 via the forward Fisher-Yates sweep."""
    if n < 1:
        raise InvalidArguments(f"n must be >= 1, got {n}")
    perm = list(range(n))
    for k in range(n - 1):
        r = k + ((rng.next64() * (n - k)) >> 64)
        perm[k], perm[r] = perm[r], perm[k]
    return perm
