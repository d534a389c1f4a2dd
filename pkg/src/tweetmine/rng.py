"""Seeded 64-bit PRNG (splitmix64) used by every randomized component.

The Gibbs kernel embeds the identical update so a sampling chain is a
pure function of its seed; ``test_lda`` cross-checks the two streams.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix(value: int) -> int:
    """One splitmix64 scramble; used to derive independent child seeds."""
    z = (value + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator with an inspectable state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_uint64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return min(int(self.next_float() * n), n - 1)


def draw_from_weights(weights, u: float) -> int:
    """Inverse-CDF draw over an unnormalized weight vector.

    Accumulates a plain running sum, matching the Gibbs kernel's inner
    loop bit for bit.
    """
    total = 0.0
    for w in weights:
        total += w
    r = u * total
    acc = 0.0
    for k, w in enumerate(weights):
        acc += w
        if r < acc:
            return k
    return len(weights) - 1
