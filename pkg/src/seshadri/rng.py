"""Deterministic 64-bit random stream (splitmix64).

The standard library's ``random`` module does not promise identical output
for the derived distributions across interpreter versions, and the example
reports must be byte-stable forever.  splitmix64 is tiny, well mixed and
fully specified, so every seeded run reproduces exactly.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: one well-mixed 64-bit value from one input."""
    z = (z + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, *path: int) -> int:
    """Derive a child seed from a root seed and a tuple of integer indices.

    Used to give every factory attempt, and every random form inside one
    attempt, an independent deterministic stream.
    """
    state = mix64(seed & _MASK)
    for part in path:
        state = mix64(state ^ mix64(part & _MASK))
    return state


class SeededStream:
    """Sequential splitmix64 generator with rejection-sampled integer draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) without modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // bound) * bound
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound

    def next_nonzero(self, bound: int) -> int:
        """Uniform integer in [-bound, bound] excluding 0."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        idx = self.next_below(2 * bound)
        return idx - bound if idx < bound else idx - bound + 1
