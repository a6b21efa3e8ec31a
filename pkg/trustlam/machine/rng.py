"""
Seeded random source for choice reduction.

Draws come from numpy's PCG64 bit generator as raw 64-bit words, so a seed
determines every branch taken, and uniform integers are obtained by
rejection sampling (no modulo bias, no floating point).
"""
from fractions import Fraction
from math import lcm

import numpy as np


class RngState:
    """
    Deterministic random state derived from an unsigned 64-bit seed. Not to be
    shared between concurrent evaluations.

    Args:
        seed (int): Seed, 0 <= seed < 2**64.
    """
    def __init__(self, seed=0):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError(f"Seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.bit_generator = np.random.PCG64(seed)

    def uniform_below(self, bound):
        """Uniform integer in ``[0, bound)``."""
        if bound < 1:
            raise ValueError(f"Bound must be positive, got {bound}")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        words = -(-bits // 64)
        while True:
            value = 0
            for word in self.bit_generator.random_raw(words):
                value = (value << 64) | int(word)
            value >>= words * 64 - bits
            if value < bound:
                return value


def sample_choice(weights, rng):
    """
    Index of the branch picked with the given exact probabilities.

    A uniform integer u below the least common denominator D of the weights
    selects the bucket of the cumulative partition of ``[0, D)`` containing u.

    Args:
        weights (sequence[Fraction]): Positive weights summing to 1.
        rng (RngState): Random state, advanced in place.

    Returns:
        int
    """
    weights = [Fraction(w) for w in weights]
    if any(w <= 0 for w in weights) or sum(weights) != 1:
        raise ValueError("Choice weights must be positive and sum to 1")
    if len(weights) == 1:
        return 0
    denom = lcm(*(w.denominator for w in weights))
    u = rng.uniform_below(denom)
    upper = 0
    for i, w in enumerate(weights):
        upper += w.numerator * (denom // w.denominator)
        if u < upper:
            return i
    return len(weights) - 1
