"""Deterministic random numbers for the test generators.

The generator is SplitMix64 (Steele, Lea, Flood: "Fast splittable
pseudorandom number generators").  It is fixed here, rather than relying on
any library default, so that a seed reproduces the exact same graphs and
ideal families in any reimplementation: the state advances by the golden
gamma 0x9E3779B97F4A7C15 and the output runs through the two standard
xor-shift/multiply finalizer rounds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit SplitMix64 stream seeded with an arbitrary integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n).  Modulo bias is irrelevant at n << 2**64."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def chance(self, probability: float) -> bool:
        """True with the given probability (deterministically from the stream)."""
        if not 0.0 <= probability <= 1.0:
            raise ValueError("probability out of range")
        return self.next_u64() < int(probability * 2.0**64)

    def choice(self, seq):
        if not seq:
            raise ValueError("choice() from an empty sequence")
        return seq[self.below(len(seq))]

    def shuffled(self, seq) -> list:
        """Fisher-Yates shuffle of a copy of seq."""
        out = list(seq)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out

    def split(self) -> "SplitMix64":
        """Child stream whose seed is drawn from this stream."""
        return SplitMix64(self.next_u64())
