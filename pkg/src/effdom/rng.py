"""Portable seeded PRNG (SplitMix64).

Python's ``random`` module is platform-stable for MT19937 output but its
derived helpers (``randrange``, ``shuffle``) are implementation details, so
instance files produced from a seed would not be reproducible elsewhere.
SplitMix64 is tiny, fully specified by the three constants below, and every
helper here is defined on top of the raw 64-bit stream.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SeededRng:
    def __init__(self, seed: int):
        self.seed = seed
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection sampling."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = ((1 << 64) // k) * k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        # 53 bits, same resolution as a double in [0, 1)
        return (self.next_u64() >> 11) < p * (1 << 53)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
