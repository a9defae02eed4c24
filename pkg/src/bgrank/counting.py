"""Counting partitions: p(n), pairs pp(n), and p_j(n) by BG-rank.

Every count is an exact Python integer. ``pj_enumerate`` filters brute-force
enumeration and is the oracle for the closed form in ``pj_formula``.
"""

from __future__ import annotations

import operator
import threading
from fractions import Fraction
from functools import lru_cache
from collections import Counter
from math import isqrt
from numbers import Real
from typing import Iterator

from bgrank.partitions import Partition, bg_rank

__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "EnumerationBoundError",
    "enumerate_partitions",
    "pair_count",
    "pair_count_by_enumeration",
    "partition_count",
    "pj_enumerate",
    "pj_formula",
    "rank_exists",
    "rank_range",
]

DEFAULT_ENUMERATION_BOUND = 40


class EnumerationBoundError(ValueError):
    """Brute-force enumeration was requested beyond the configured bound."""


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")

    def rec(remaining: int, largest: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    return rec(n, n, [])


class _Table:
    """Append-only memo table; readers never see a partially built entry."""

    def __init__(self, first: list[int], step) -> None:
        self._values = first
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(self._values))
        return self._values[n]

    def upto(self, n: int) -> list[int]:
        self[n]
        return self._values[: n + 1]


def _next_partition_count(values: list[int]) -> int:
    # Euler's pentagonal-number recurrence
    n = len(values)
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * values[n - g1]
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * values[n - g2]
        k += 1
    return total


_P = _Table([1], _next_partition_count)


def _next_pair_count(values: list[int]) -> int:
    n = len(values)
    p = _P.upto(n)
    return sum(map(operator.mul, p, reversed(p)))


_PP = _Table([1], _next_pair_count)


def partition_count(n: int) -> int:
    """p(n), with p(n) = 0 for negative n."""
    if n < 0:
        return 0
    return _P[n]


def _as_nonnegative_int(x) -> int | None:
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return x if x >= 0 else None
    if isinstance(x, (Fraction, Real)):
        if x < 0 or x != int(x):
            return None
        return int(x)
    raise TypeError(f"unsupported argument {x!r}")


def pair_count(n) -> int:
    """pp(n): ordered pairs of partitions of total weight ``n``.

    Zero unless ``n`` is a nonnegative integer; ``Fraction(5, 2)`` and ``-1``
    both give 0.
    """
    k = _as_nonnegative_int(n)
    if k is None:
        return 0
    return _PP[k]


def partition_counts_upto(n: int) -> list[int]:
    return list(_P.upto(n))


def pair_counts_upto(n: int) -> list[int]:
    return list(_PP.upto(n))


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound}")


@lru_cache(maxsize=None)
def _rank_tally(n: int) -> Counter:
    return Counter(bg_rank(p) for p in enumerate_partitions(n))


def pj_enumerate(n: int, j: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Count partitions of ``n`` with BG-rank ``j`` by exhaustive enumeration."""
    _check_bound(n, bound)
    return _rank_tally(n)[j]


def pair_count_by_enumeration(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    _check_bound(n, bound)
    sizes = [sum(1 for _ in enumerate_partitions(k)) for k in range(n + 1)]
    return sum(sizes[k] * sizes[n - k] for k in range(n + 1))


def pj_formula(n: int, j: int) -> int:
    """p_j(n) = pp((n - j(2j - 1)) / 2)."""
    shifted = n - j * (2 * j - 1)
    if shifted < 0 or shifted % 2:
        return 0
    return pair_count(shifted // 2)


def rank_exists(n: int, j: int) -> bool:
    """Whether some partition of ``n`` has BG-rank ``j``."""
    return (n + j) % 2 == 0 and j * (2 * j - 1) <= n


def rank_range(n: int) -> list[int]:
    """All BG-ranks realised by partitions of ``n``, increasing."""
    reach = isqrt(n) + 1
    return [j for j in range(-reach, reach + 1) if rank_exists(n, j)]
