"""Integer partitions.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order; the zero partition is the empty tuple.  Tuples hash fast and
are the keys of every sparse expression in the package.
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        if i and p > parts[i - 1]:
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` fits inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def exponents(lam: Partition) -> dict[int, int]:
    """Exponent form ``{k: m_k}``."""
    return dict(Counter(lam))


def z_of(lam: Partition) -> int:
    out = 1
    for k, m in Counter(lam).items():
        out *= k**m * factorial(m)
    return out


class FrobeniusForm(NamedTuple):
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.arms)

    def to_partition(self) -> Partition:
        r = self.rank
        if r == 0:
            return EMPTY
        # rows 1..r are arm + k; rows below the diagonal come from the legs
        rows = [self.arms[k] + k + 1 for k in range(r)]
        length = self.legs[0] + 1
        for i in range(r, length):
            rows.append(sum(1 for k in range(r) if self.legs[k] + k >= i))
        return make_partition(rows)


def frobenius(lam: Partition) -> FrobeniusForm:
    conj = conjugate(lam)
    r = sum(1 for i, p in enumerate(lam) if p > i)
    arms = tuple(lam[k] - k - 1 for k in range(r))
    legs = tuple(conj[k] - k - 1 for k in range(r))
    return FrobeniusForm(arms, legs)


def hook(arm: int, leg: int) -> Partition:
    """The hook ``(arm + 1, 1^leg)``."""
    return (arm + 1,) + (1,) * leg


class PartitionSet(enum.Enum):
    """Partition families used to define the Schur function series."""

    ALL = "P"
    EVEN_ROWS = "D"       # every part even
    EVEN_COLUMNS = "B"    # conjugates of EVEN_ROWS
    FROB_MINUS1 = "A"     # b_k = a_k + 1
    FROB_0 = "E"          # self-conjugate
    FROB_1 = "C"          # a_k = b_k + 1

    @classmethod
    def frob(cls, n: int) -> PartitionSet:
        try:
            return {-1: cls.FROB_MINUS1, 0: cls.FROB_0, 1: cls.FROB_1}[n]
        except KeyError:
            raise ValueError(f"only Frobenius offsets -1, 0, 1 are supported, got {n}") from None

    def __contains__(self, lam: object) -> bool:
        return is_member(lam, self)  # type: ignore[arg-type]


def is_member(lam: Partition, kind: PartitionSet) -> bool:
    if kind is PartitionSet.ALL:
        return True
    if kind is PartitionSet.EVEN_ROWS:
        return all(p % 2 == 0 for p in lam)
    if kind is PartitionSet.EVEN_COLUMNS:
        return all(p % 2 == 0 for p in conjugate(lam))
    offset = {PartitionSet.FROB_MINUS1: -1, PartitionSet.FROB_0: 0, PartitionSet.FROB_1: 1}[kind]
    f = frobenius(lam)
    return all(a - b == offset for a, b in zip(f.arms, f.legs))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n == 0:
        yield EMPTY
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _up_to(max_weight: int, kind: PartitionSet) -> tuple[Partition, ...]:
    return tuple(
        lam
        for n in range(max_weight + 1)
        for lam in partitions_of(n)
        if is_member(lam, kind)
    )


def partitions_up_to(max_weight: int, kind: PartitionSet = PartitionSet.ALL) -> list[Partition]:
    """Members of ``kind`` with weight at most ``max_weight``.

    Ordered by weight, and within one weight in reverse lexicographic order.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be non-negative")
    return list(_up_to(max_weight, kind))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every partition whose diagram fits inside ``lam`` (including ``()`` and ``lam``)."""

    def rec(i: int, bound: int) -> Iterator[Partition]:
        if i == len(lam):
            yield EMPTY
            return
        for p in range(min(bound, lam[i]), -1, -1):
            if p == 0:
                yield EMPTY
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    yield from rec(0, lam[0] if lam else 0)


def sort_key(lam: Partition) -> tuple:
    """Graded reverse-lexicographic key: lighter first, then larger lex first."""
    return (sum(lam), tuple(-p for p in lam) + (0,))


def fmt(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"
