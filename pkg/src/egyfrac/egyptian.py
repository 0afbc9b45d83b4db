"""Unit-fraction tuples: greedy construction, term splitting, and exhaustive
enumeration of all representations with a fixed term count.

A representation of x is a nondecreasing tuple (m_1, ..., m_k) of positive
integers with sum of 1/m_i equal to x; denominators may repeat and may be 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .rationals import srq_decompose

EgyptianTuple = tuple[int, ...]


def as_tuple(denominators: Iterable[int]) -> EgyptianTuple:
    """Validate and freeze a nondecreasing tuple of positive denominators."""
    t = tuple(denominators)
    for i, m in enumerate(t):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"denominators must be positive integers, got {m!r}")
        if i and m < t[i - 1]:
            raise ValueError(f"denominators must be nondecreasing, got {t}")
    return t


def tuple_sum(t: Iterable[int]) -> Fraction:
    """Exact reciprocal sum; the empty tuple sums to 0."""
    return sum((Fraction(1, m) for m in t), Fraction(0))


def tuple_lcm(t: Iterable[int]) -> int:
    """Least common multiple of the denominators; 1 for the empty tuple."""
    return math.lcm(*t)


def greedy(x) -> EgyptianTuple:
    """Greedy representation: always take the largest unit fraction that fits.

    The next denominator is the smallest m >= 1 with m*x >= 1, so integer
    inputs emit leading 1s. The reduced numerator of the remainder drops
    strictly every step, which bounds the term count and forces termination.

    >>> greedy(Fraction(5, 6))
    (2, 3)
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"greedy needs a nonnegative input, got {x}")
    out = []
    while x:
        m = -(-x.denominator // x.numerator)  # ceil(1/x)
        out.append(m)
        x -= Fraction(1, m)
    return tuple(out)


def split_expand(t: Iterable[int], index: int) -> EgyptianTuple:
    """Replace the entry m at a 0-based index by m+1 and m*(m+1), re-sorted.

    Sum is preserved: 1/m = 1/(m+1) + 1/(m*(m+1)). Length grows by one.
    """
    t = as_tuple(t)
    if not 0 <= index < len(t):
        raise ValueError(f"index {index} out of range for {len(t)} entries")
    m = t[index]
    expanded = t[:index] + t[index + 1 :] + (m + 1, m * (m + 1))
    return tuple(sorted(expanded))


def position_range(prev: int, remaining: Fraction, slots: int) -> range:
    """Admissible denominators at one enumeration position.

    With remaining > 0 still to cover and `slots` terms left to place, the
    next denominator m needs 1/m <= remaining (no overshoot) and
    slots/m >= remaining (even repeating m everywhere must not fall short),
    alongside m >= prev to keep the tuple nondecreasing.
    """
    lo = max(prev, math.ceil(1 / remaining))
    hi = math.floor(slots / remaining)
    return range(lo, hi + 1)


def iter_exact(x, k: int) -> Iterator[EgyptianTuple]:
    """Yield every k-term representation of x, in lexicographic order."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"target sum must be nonnegative, got {x}")
    if k < 0:
        raise ValueError(f"term count must be nonnegative, got {k}")

    prefix: list[int] = []

    def walk(prev: int, remaining: Fraction, slots: int) -> Iterator[EgyptianTuple]:
        if slots == 0:
            if not remaining:
                yield tuple(prefix)
            return
        if remaining <= 0:
            return  # positive terms cannot close a zero gap
        for m in position_range(prev, remaining, slots):
            prefix.append(m)
            yield from walk(m, remaining - Fraction(1, m), slots - 1)
            prefix.pop()

    yield from walk(1, x, k)


def enumerate_exact(x, k: int) -> list[EgyptianTuple]:
    """All k-term representations of x as a lexicographically sorted list.

    >>> enumerate_exact(1, 3)
    [(2, 3, 6), (2, 4, 4), (3, 3, 3)]
    """
    return list(iter_exact(x, k))


def enumerate_deficiency(k: int, delta, q: int) -> list[EgyptianTuple]:
    """All k-tuples whose reciprocal sum is exactly k - delta.

    delta must be >= -1 with q*delta integral; the list is empty whenever
    k - delta falls outside [0, k] (in particular for every delta < 0).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    delta = Fraction(delta)
    srq_decompose(delta, q)  # validates delta >= -1 and q*delta integral
    target = k - delta
    if target < 0 or target > k:
        return []
    return enumerate_exact(target, k)
