"""Portable seeded generator: xorshift64* seeded through one SplitMix64 step.

Constants (all 64-bit):

* SplitMix64 seeding: ``z = seed + 0x9E3779B97F4A7C15``;
  ``z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ z >> 27) * 0x94D049BB133111EB``; ``state = z ^ z >> 31``
  (a zero result is replaced by ``0x9E3779B97F4A7C15``).
* xorshift64*: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``;
  output ``x * 0x2545F4914F6CDD1D``.

``below(k)`` draws by rejection on the top bits so sequences are identical
on every platform and in any language that follows these steps.
"""

from __future__ import annotations

from typing import MutableSequence, Sequence, TypeVar

MASK64 = (1 << 64) - 1
T = TypeVar("T")


class Rng:
    def __init__(self, seed: int = 0):
        z = (seed + 0x9E3779B97F4A7C15) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        """Uniform integer in ``0..k-1``."""
        if k <= 0:
            raise ValueError("k must be positive")
        bits = max(1, (k - 1).bit_length())
        while True:
            r = self.next64() >> (64 - bits)
            if r < k:
                return r

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``lo..hi`` inclusive."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next64() >> 11) * (1.0 / (1 << 53))

    def chance(self, num: int, den: int) -> bool:
        """True with probability exactly ``num / den``."""
        return self.below(den) < num

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def shuffle(self, items: MutableSequence[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_mask(self, n: int, size: int) -> int:
        order = list(range(n))
        self.shuffle(order)
        mask = 0
        for v in order[:size]:
            mask |= 1 << v
        return mask
