"""Integer partitions as canonical tuples.

A partition is a tuple of weakly decreasing positive integers with no
trailing zeros.  Every public operation accepts raw iterables (possibly
with trailing zeros) and normalizes first, so plain tuples can be passed
around freely and used as dict keys.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonical form of ``parts``: validated and stripped of trailing zeros."""
    seq = tuple(int(p) for p in parts)
    for p in seq:
        if p < 0:
            raise ValueError(f"negative part {p} in {seq}")
    for prev, nxt in zip(seq, seq[1:]):
        if prev < nxt:
            raise ValueError(f"parts must be weakly decreasing, got {seq}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def part_at(lam: Partition, i: int) -> int:
    """Part ``i`` (0-indexed); parts beyond the length read as 0."""
    return lam[i] if 0 <= i < len(lam) else 0


def size(lam: Iterable[int]) -> int:
    return sum(lam)


def rectangle(alpha: int, gamma: int) -> Partition:
    """The partition with ``alpha`` parts equal to ``gamma``."""
    if alpha < 0 or gamma < 0:
        raise ValueError("rectangle dimensions must be nonnegative")
    return (gamma,) * alpha if gamma > 0 else ()


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff mu fits inside lam componentwise."""
    lam, mu = partition(lam), partition(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def is_horizontal_strip(lam: Iterable[int], pi: Iterable[int]) -> bool:
    """True iff pi is contained in lam and lam/pi has at most one square per column.

    Equivalent to the interleaving lam_i >= pi_i >= lam_{i+1} for all i.
    """
    lam, pi = partition(lam), partition(pi)
    if not contains(lam, pi):
        return False
    return all(part_at(pi, i) >= part_at(lam, i + 1) for i in range(len(lam)))


def rotated_complement(lam: Iterable[int], alpha: int, gamma: int) -> Partition:
    """Complement of lam inside the alpha x gamma rectangle, rotated 180 degrees.

    Involutive: applying it twice with the same rectangle returns lam.
    """
    lam = partition(lam)
    if not contains(rectangle(alpha, gamma), lam):
        raise ValueError(f"{lam} does not fit in a {alpha}x{gamma} rectangle")
    return partition(gamma - part_at(lam, alpha - 1 - i) for i in range(alpha))


def skew_size(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Number of squares of lam not in mu; requires mu inside lam."""
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return size(lam) - size(mu)


def skew_cells(lam: Iterable[int], mu: Iterable[int]) -> Iterator[tuple[int, int]]:
    """(row, col) pairs of the squares of lam/mu, 0-indexed, row-major."""
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    for r, width in enumerate(lam):
        for c in range(part_at(mu, r), width):
            yield (r, c)


def partitions_in_rectangle(alpha: int, gamma: int) -> Iterator[Partition]:
    """All partitions with at most ``alpha`` rows and parts at most ``gamma``."""
    if alpha < 0 or gamma < 0:
        raise ValueError("rectangle dimensions must be nonnegative")
    if alpha == 0:
        yield ()
        return
    for first in range(gamma, 0, -1):
        for rest in partitions_in_rectangle(alpha - 1, first):
            yield (first,) + rest
    yield ()


def horizontal_strips_within(lam: Iterable[int]) -> Iterator[Partition]:
    """All pi inside lam such that lam/pi is a horizontal strip.

    The rows of pi vary independently in [lam_{i+1}, lam_i]; the result is
    automatically a partition.
    """
    lam = partition(lam)
    ranges = [
        range(part_at(lam, i + 1), lam[i] + 1) for i in range(len(lam))
    ]
    for choice in _cartesian(*ranges):
        yield partition(choice)


def partitions_of(total: int, max_rows: int, max_part: int) -> Iterator[Partition]:
    """Partitions of ``total`` with at most ``max_rows`` parts, each <= ``max_part``."""
    if total < 0:
        return
    if total == 0:
        yield ()
        return
    if max_rows <= 0 or max_part <= 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_rows - 1, first):
            yield (first,) + rest
