"""Small portable PRNG so sampled forms are reproducible across platforms.

This is the standard splitmix64 generator.  Python's own Mersenne twister
would work, but its state layout is private and the stream-per-index trick
below (fixed stride between starting states) is awkward there.  Trial i
draws from ``stream(seed, i)``, which never overlaps neighbouring trials
as long as a single trial uses fewer than STREAM_BLOCK draws.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
STREAM_BLOCK = 1024

GENERATOR_NAME = "splitmix64"


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_uint64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("need a positive range")
        return self.next_uint64() % n

    def integer(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)


def stream(seed: int, index: int) -> SplitMix64:
    """Generator number ``index`` of the family seeded by ``seed``.

    Starting states sit STREAM_BLOCK steps apart on the splitmix64 orbit, so
    the streams are disjoint windows of one underlying sequence.
    """
    if index < 0:
        raise ValueError("index must be nonnegative")
    return SplitMix64((seed + index * STREAM_BLOCK * GAMMA) & MASK64)
