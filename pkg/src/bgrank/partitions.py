"""Partition values, the text format, and the BG-rank statistic.

Cells are addressed 1-indexed as (row, column); the cell (1, 1) carries
sign +1 and signs alternate chessboard style.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "Partition",
    "PartitionParseError",
    "Staircase",
    "bg_rank",
    "bg_rank_naive",
    "format_partition",
    "is_staircase",
    "normalize_partition",
    "parse_partition",
    "staircase_bg_rank",
]


class PartitionParseError(ValueError):
    """Raised for text that does not describe a weakly decreasing partition."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the unique partition of 0.

    >>> Partition((4, 3, 3, 1, 1, 1)).weight
    13
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for i, part in enumerate(parts):
            if isinstance(part, bool) or not isinstance(part, int):
                raise TypeError(f"part {part!r} is not an integer")
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if i and part > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Staircase:
    """The staircase partition height + (height - 1) + ... + 1."""

    height: int

    def __post_init__(self) -> None:
        if self.height < 0:
            raise ValueError(f"staircase height must be nonnegative, got {self.height}")

    @property
    def weight(self) -> int:
        return self.height * (self.height + 1) // 2

    def as_partition(self) -> Partition:
        return Partition(range(self.height, 0, -1))


_SPLIT = re.compile(r"[+,]")


def parse_partition(text: str) -> Partition:
    """Parse ``"4+3+3+1+1+1"`` (or comma separated) into a :class:`Partition`.

    The empty string and ``"0"`` both denote the empty partition. Parts are
    never reordered; increasing input is rejected.
    """
    stripped = text.strip()
    if stripped in ("", "0"):
        return Partition()
    parts = []
    for token in _SPLIT.split(stripped):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise PartitionParseError(f"not an integer part: {token!r}") from None
        if value < 1:
            raise PartitionParseError(f"parts must be positive, got {value}")
        if parts and value > parts[-1]:
            raise PartitionParseError(
                f"parts must be weakly decreasing: {parts[-1]} then {value}"
            )
        parts.append(value)
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    """Canonical single-line rendering; the empty partition renders as ``"0"``."""
    parts = tuple(p)
    return "+".join(map(str, parts)) if parts else "0"


def normalize_partition(parts: Iterable[int]) -> Partition:
    """Sort positive parts into a partition, dropping zeros."""
    return Partition(sorted((x for x in parts if x != 0), reverse=True))


def bg_rank_naive(p: Partition) -> int:
    """Sum of (-1)**(i + j) over every cell (i, j) of the Ferrers diagram."""
    total = 0
    for i, length in enumerate(p, start=1):
        for j in range(1, length + 1):
            total += 1 if (i + j) % 2 == 0 else -1
    return total


def bg_rank(p: Partition) -> int:
    # A row of odd length contributes the sign of its first cell; even rows cancel.
    rank = 0
    for i, length in enumerate(p):
        if length % 2:
            rank += -1 if i % 2 else 1
    return rank


def staircase_bg_rank(k: int) -> int:
    """BG-rank of the staircase of height ``k``."""
    if k < 0:
        raise ValueError(f"staircase height must be nonnegative, got {k}")
    return (k + 1) // 2 if k % 2 else -(k // 2)


def is_staircase(p: Partition) -> Optional[int]:
    """Return the height if ``p`` is ``(k, k-1, ..., 1)``, otherwise ``None``."""
    k = len(p)
    if all(part == k - i for i, part in enumerate(p)):
        return k
    return None
