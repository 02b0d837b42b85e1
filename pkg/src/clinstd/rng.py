"""Portable 64-bit PRNG (SplitMix64) for reproducible augmentation.

The generator is fixed by name and update equations so that identical seeds
produce identical streams on every platform and in any reimplementation.
All arithmetic is modulo 2**64.

State update and output (SplitMix64, Steele et al. 2014):

    state  = state + 0x9E3779B97F4A7C15
    z      = state
    z      = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9
    z      = (z XOR (z >> 27)) * 0x94D049BB133111EB
    output = z XOR (z >> 31)

Substream derivation for parallel work units (``Rng.derive(seed, index)``):

    state0 = seed XOR mix64((index + 1) * 0x9E3779B97F4A7C15)

where ``mix64`` is the three-line output scramble above. Substreams for
distinct indices start at decorrelated points of the counter sequence, so
work units may be processed in any order or in parallel with identical
results.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Rng:
    """Deterministic SplitMix64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    @classmethod
    def derive(cls, seed: int, index: int) -> "Rng":
        """Independent substream for work unit ``index`` of run ``seed``."""
        rng = cls.__new__(cls)
        rng._state = (seed & _MASK64) ^ _mix64(((index + 1) * _GAMMA) & _MASK64)
        return rng

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection sampling."""
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice(self, seq):
        if not seq:
            raise ValueError("cannot choose from an empty sequence")
        return seq[self.randrange(len(seq))]
