"""Domino removal, 2-cores, and the 2-core/2-quotient correspondence.

A partition with beta-set of even size ``m`` splits its beta-numbers by
parity. Halving each class gives two beta-sets, hence two quotient
partitions ``q0`` (even class) and ``q1`` (odd class). The class-size
imbalance ``d = #even - #odd`` is always even and fixes the 2-core: the
staircase of height ``d - 1`` when ``d > 0`` and ``-d`` otherwise. It also
equals twice the BG-rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from bgrank.partitions import Partition, Staircase, format_partition

__all__ = [
    "Decomposition",
    "DominoPosition",
    "InvalidDominoError",
    "Orientation",
    "compose",
    "core_height_for_rank",
    "decompose",
    "remove_domino",
    "removable_dominoes",
    "two_core_by_removal",
]


class InvalidDominoError(ValueError):
    """The requested domino cannot be removed from the partition."""


class Orientation(str, Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True, order=True)
class DominoPosition:
    """Upper-left cell (1-indexed) of a domino, with its orientation."""

    row: int
    column: int
    orientation: Orientation

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.orientation is Orientation.HORIZONTAL:
            return (self.row, self.column), (self.row, self.column + 1)
        return (self.row, self.column), (self.row + 1, self.column)


@dataclass(frozen=True)
class Decomposition:
    core: Staircase
    q0: Partition
    q1: Partition

    @property
    def weight(self) -> int:
        return self.core.weight + 2 * self.q0.weight + 2 * self.q1.weight

    def to_dict(self) -> dict:
        return {
            "core_height": self.core.height,
            "q0": format_partition(self.q0),
            "q1": format_partition(self.q1),
        }


def _sort_key(d: DominoPosition) -> tuple[int, int, int]:
    # top row first, then leftmost, vertical before horizontal
    return d.row, d.column, 0 if d.orientation is Orientation.VERTICAL else 1


def removable_dominoes(p: Partition) -> list[DominoPosition]:
    """Every domino whose removal leaves a valid Ferrers diagram."""
    rows = list(p) + [0, 0]
    found = []
    for i in range(len(p)):
        length = rows[i]
        if length >= 2 and length - 2 >= rows[i + 1]:
            found.append(DominoPosition(i + 1, length - 1, Orientation.HORIZONTAL))
        if rows[i + 1] == length and rows[i + 2] < length:
            found.append(DominoPosition(i + 1, length, Orientation.VERTICAL))
    found.sort(key=_sort_key)
    return found


def remove_domino(p: Partition, d: DominoPosition) -> Partition:
    if d not in removable_dominoes(p):
        raise InvalidDominoError(f"{d} is not removable from {format_partition(p)}")
    rows = list(p)
    i = d.row - 1
    if d.orientation is Orientation.HORIZONTAL:
        rows[i] -= 2
    else:
        rows[i] -= 1
        rows[i + 1] -= 1
    return Partition(r for r in rows if r)


def two_core_by_removal(
    p: Partition,
    choose: Optional[Callable[[Sequence[DominoPosition]], DominoPosition]] = None,
) -> Partition:
    """Strip dominoes until none remain.

    ``choose`` picks which removable domino goes next; by default the first in
    the fixed order (top row, leftmost, vertical first).
    """
    if choose is None:
        choose = _first
    while True:
        options = removable_dominoes(p)
        if not options:
            return p
        p = remove_domino(p, choose(options))


def _first(options: Sequence[DominoPosition]) -> DominoPosition:
    return options[0]


def random_chooser(rng: random.Random) -> Callable[[Sequence[DominoPosition]], DominoPosition]:
    return lambda options: rng.choice(list(options))


def _beta_to_partition(beta: Sequence[int]) -> Partition:
    ordered = sorted(beta, reverse=True)
    r = len(ordered)
    return Partition(b - (r - 1 - i) for i, b in enumerate(ordered) if b - (r - 1 - i) > 0)


def _partition_to_beta(p: Partition, size: int) -> list[int]:
    padded = list(p) + [0] * (size - len(p))
    return [part + (size - 1 - i) for i, part in enumerate(padded)]


def decompose(p: Partition) -> Decomposition:
    size = len(p) + len(p) % 2
    beta = _partition_to_beta(p, size)
    evens = [b // 2 for b in beta if b % 2 == 0]
    odds = [(b - 1) // 2 for b in beta if b % 2 == 1]
    imbalance = len(evens) - len(odds)
    height = imbalance - 1 if imbalance > 0 else -imbalance
    return Decomposition(Staircase(height), _beta_to_partition(evens), _beta_to_partition(odds))


def compose(d: Decomposition) -> Partition:
    """Inverse of :func:`decompose`."""
    k = d.core.height
    imbalance = k + 1 if k % 2 else -k
    # smallest class sizes with the right imbalance that hold both quotients
    n_odd = max(len(d.q1), len(d.q0) - imbalance)
    n_even = n_odd + imbalance
    beta = [2 * b for b in _partition_to_beta(d.q0, n_even)]
    beta += [2 * b + 1 for b in _partition_to_beta(d.q1, n_odd)]
    return _beta_to_partition(beta)


def core_height_for_rank(j: int) -> int:
    """Height of the 2-core shared by all partitions of BG-rank ``j``."""
    return 2 * j - 1 if j > 0 else -2 * j
