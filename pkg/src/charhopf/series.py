"""The twelve Schur function series A..Q, truncated by weight.

Each series is ``sum sign(lam) {lam}`` over a family of partitions.  A series
is infinite, so anything that materializes one takes an explicit weight
cutoff; skewing a finite expression by a series is exact and takes none.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import CutoffError
from .expr import Ring, SymExpr, TensorExpr
from .partitions import EMPTY, Partition, PartitionSet, conjugate, frobenius, partitions_up_to
from .schur import _require_gl, mul_terms, skew_terms


def _plus(lam: Partition) -> int:
    return 1


def _half_weight(lam: Partition) -> int:
    return (-1) ** (sum(lam) // 2)


def _weight_sign(lam: Partition) -> int:
    return (-1) ** sum(lam)


def _e_sign(lam: Partition) -> int:
    return (-1) ** ((sum(lam) + frobenius(lam).rank) // 2)


def _g_sign(lam: Partition) -> int:
    return (-1) ** ((sum(lam) - frobenius(lam).rank) // 2)


def _rows(lam: Partition) -> bool:
    return len(lam) <= 1


def _columns(lam: Partition) -> bool:
    return all(p == 1 for p in lam)


class SeriesKind(enum.Enum):
    """Series tag with its partition family and sign rule."""

    A = ("A", PartitionSet.FROB_MINUS1, None, _half_weight)
    B = ("B", PartitionSet.EVEN_COLUMNS, None, _plus)
    C = ("C", PartitionSet.FROB_1, None, _half_weight)
    D = ("D", PartitionSet.EVEN_ROWS, None, _plus)
    E = ("E", PartitionSet.FROB_0, None, _e_sign)
    F = ("F", PartitionSet.ALL, None, _plus)
    G = ("G", PartitionSet.FROB_0, None, _g_sign)
    H = ("H", PartitionSet.ALL, None, _weight_sign)
    L = ("L", PartitionSet.ALL, _columns, _weight_sign)
    M = ("M", PartitionSet.ALL, _rows, _plus)
    P = ("P", PartitionSet.ALL, _rows, _weight_sign)
    Q = ("Q", PartitionSet.ALL, _columns, _plus)

    def __init__(self, tag: str, family: PartitionSet,
                 shape: Callable[[Partition], bool] | None, sign: Callable[[Partition], int]):
        self.tag = tag
        self.family = family
        self.shape = shape
        self.sign = sign

    def __str__(self) -> str:
        return self.tag

    @classmethod
    def parse(cls, tag: str) -> SeriesKind:
        try:
            return cls[tag.upper()]
        except KeyError:
            raise ValueError(f"unknown series {tag!r}; expected one of {''.join(k.tag for k in cls)}") from None

    @property
    def coproduct_type(self) -> str:
        """``'dual'`` for sum (-1)^|s| {s}(x){s'}, ``'cauchy'`` for sum {s}(x){s}, ``'trivial'`` for 1."""
        if self in (SeriesKind.A, SeriesKind.C, SeriesKind.E, SeriesKind.G):
            return "dual"
        if self in (SeriesKind.B, SeriesKind.D, SeriesKind.F, SeriesKind.H):
            return "cauchy"
        return "trivial"


@lru_cache(maxsize=None)
def _terms(kind: SeriesKind, cutoff: int) -> tuple[tuple[Partition, int], ...]:
    out = []
    for lam in partitions_up_to(cutoff, kind.family):
        if kind.shape is None or kind.shape(lam):
            out.append((lam, kind.sign(lam)))
    return tuple(out)


def series_dict(kind: SeriesKind, cutoff: int) -> dict[Partition, int]:
    return dict(_terms(kind, cutoff))


@dataclass(frozen=True)
class TruncatedSeries:
    kind: SeriesKind
    cutoff: int
    body: SymExpr

    def __str__(self) -> str:
        return f"{self.kind}<= {self.cutoff}: {self.body}"


def series_terms(kind: SeriesKind | str, cutoff: int) -> TruncatedSeries:
    """Every signed term of weight at most ``cutoff``."""
    if isinstance(kind, str):
        kind = SeriesKind.parse(kind)
    if cutoff < 0:
        raise CutoffError("cutoff must be non-negative")
    return TruncatedSeries(kind, cutoff, SymExpr(dict(_terms(kind, cutoff)), Ring.GL))


def skew_by_series_terms(terms: dict[Partition, int], kind: SeriesKind) -> dict[Partition, int]:
    top = max((sum(lam) for lam in terms), default=0)
    return skew_terms(terms, series_dict(kind, top))


def skew_by_series(f: SymExpr, kind: SeriesKind | str) -> SymExpr:
    """``f / Z`` for a series ``Z``; exact, since heavier terms skew to zero."""
    _require_gl(f)
    if isinstance(kind, str):
        kind = SeriesKind.parse(kind)
    return SymExpr(skew_by_series_terms(dict(f.terms), kind), Ring.GL)


def product_series_dict(kinds: tuple[SeriesKind, ...], cutoff: int) -> dict[Partition, int]:
    """Product of several series truncated at ``cutoff``."""
    acc: dict[Partition, int] = {EMPTY: 1}
    for kind in kinds:
        acc = mul_terms(acc, series_dict(kind, cutoff))
        acc = {lam: c for lam, c in acc.items() if sum(lam) <= cutoff}
    return acc


def skew_by_series_product(f: SymExpr, kinds: tuple[SeriesKind, ...]) -> SymExpr:
    """``f / (Z1 Z2 ...)``, exact."""
    _require_gl(f)
    return SymExpr(skew_terms(f.terms, product_series_dict(kinds, f.max_weight)), Ring.GL)


def truncated_product(u: TruncatedSeries, v: TruncatedSeries, cutoff: int) -> SymExpr:
    """Product of two truncated series, exact up to weight ``cutoff``."""
    if cutoff < 0:
        raise CutoffError("cutoff must be non-negative")
    for s in (u, v):
        if s.cutoff < cutoff:
            raise CutoffError(
                f"series {s.kind} is only known up to weight {s.cutoff}, product asked for {cutoff}"
            )
    prod = mul_terms(u.body.truncate(cutoff).terms, v.body.truncate(cutoff).terms)
    return SymExpr({lam: c for lam, c in prod.items() if sum(lam) <= cutoff}, Ring.GL)


def series_cut_coproduct(kind: SeriesKind | str, cutoff: int) -> TensorExpr:
    """The cut coproduct of a series with each slot of weight at most ``cutoff // 2``."""
    if isinstance(kind, str):
        kind = SeriesKind.parse(kind)
    if cutoff < 0:
        raise CutoffError("cutoff must be non-negative")
    ctype = kind.coproduct_type
    if ctype == "trivial":
        return TensorExpr({(EMPTY, EMPTY): 1}, (Ring.GL, Ring.GL))
    out = {}
    for sigma in partitions_up_to(cutoff // 2):
        if ctype == "dual":
            out[(sigma, conjugate(sigma))] = (-1) ** sum(sigma)
        else:
            out[(sigma, sigma)] = 1
    return TensorExpr(out, (Ring.GL, Ring.GL))
