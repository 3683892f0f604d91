"""Specialization of universal characters to explicit eigenvalues.

Arithmetic is exact by default: integers and strings are read as
:class:`fractions.Fraction`.  Float inputs switch to float arithmetic.

Argument lists for the finite groups (``x-bar`` is ``1/x``):

=================  ====================================
GL(N)              x_1..x_N
SO(2K)             x_1..x_K, x-bar_1..x-bar_K
O(2K)-             x_1..x_{K-1}, x-bar_1..x-bar_{K-1}, 1, -1
SO(2K+1)           x_1..x_K, x-bar_1..x-bar_K, 1
O(2K+1)-           x_1..x_K, x-bar_1..x-bar_K, -1
Sp(2K)             x_1..x_K, x-bar_1..x-bar_K
Sp(2K+1)           x_1..x_K, x-bar_1..x-bar_K, x_{2K+1}
=================  ====================================
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from .classical import to_gl
from .errors import EvaluationError, ModificationRuleRequired, RingMismatchError
from .expr import RationalExpr, Ring, SymExpr
from .partitions import Partition, make_partition
from .rational import to_basis

log = logging.getLogger(__name__)

Scalar = Fraction | float


def as_number(v: object) -> Scalar:
    if isinstance(v, float):
        return v
    if isinstance(v, (int, Fraction, str)):
        return Fraction(v)
    if isinstance(v, Number):
        return float(v)  # type: ignore[arg-type]
    raise TypeError(f"not a number: {v!r}")


def _inverse(x: Scalar) -> Scalar:
    if x == 0:
        raise EvaluationError("zero eigenvalue has no inverse")
    return 1 / x


class GroupKind(enum.Enum):
    GL = ("GL", "GL(N)", None)
    SO_EVEN = ("SO", "SO(2K)", Ring.O)
    O_EVEN_MINUS = ("O-", "O(2K)-", Ring.O)
    SO_ODD = ("SOodd", "SO(2K+1)", Ring.O)
    O_ODD_MINUS = ("Oodd-", "O(2K+1)-", Ring.O)
    SP_EVEN = ("Sp", "Sp(2K)", Ring.SP)
    SP_ODD = ("Spodd", "Sp(2K+1)", Ring.SP)

    def __init__(self, cli_name: str, label: str, ring: Ring | None):
        self.cli_name = cli_name
        self.label = label
        self.ring = ring

    @classmethod
    def parse(cls, name: str) -> GroupKind:
        for kind in cls:
            if name in (kind.cli_name, kind.label, kind.name):
                return kind
        names = ", ".join(k.cli_name for k in cls)
        raise ValueError(f"unknown group {name!r}; expected one of {names}")


@dataclass(frozen=True)
class EigenvalueSpec:
    """Eigenvalues of a group element; ``extra`` is x_{2K+1} for Sp(2K+1)."""

    kind: GroupKind
    xs: tuple
    extra: Scalar | None = None

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(as_number(x) for x in self.xs))
        if self.kind is GroupKind.SP_ODD:
            if self.extra is None:
                raise EvaluationError("Sp(2K+1) needs the extra eigenvalue x_{2K+1}")
            object.__setattr__(self, "extra", as_number(self.extra))
        elif self.extra is not None:
            raise EvaluationError(f"{self.kind.label} takes no extra eigenvalue")

    @property
    def rank(self) -> int:
        """N for GL(N), K otherwise."""
        if self.kind is GroupKind.O_EVEN_MINUS:
            return len(self.xs) + 1
        return len(self.xs)

    @property
    def dimension(self) -> int:
        return len(self.arguments())

    def arguments(self) -> list[Scalar]:
        xs = list(self.xs)
        if self.kind is GroupKind.GL:
            return xs
        args = xs + [_inverse(x) for x in xs]
        one = 1.0 if self.is_float else Fraction(1)
        if self.kind is GroupKind.O_EVEN_MINUS:
            args += [one, -one]
        elif self.kind is GroupKind.SO_ODD:
            args.append(one)
        elif self.kind is GroupKind.O_ODD_MINUS:
            args.append(-one)
        elif self.kind is GroupKind.SP_ODD:
            args.append(self.extra)
        return args

    @property
    def is_float(self) -> bool:
        return any(isinstance(x, float) for x in self.xs) or isinstance(self.extra, float)

    @classmethod
    def build(cls, kind: GroupKind | str, xs: Sequence, rank: int | None = None) -> EigenvalueSpec:
        """Spec from a flat value list; for Sp(2K+1) the last value is x_{2K+1}."""
        if isinstance(kind, str):
            kind = GroupKind.parse(kind)
        xs = list(xs)
        extra = None
        if kind is GroupKind.SP_ODD:
            if not xs:
                raise EvaluationError("Sp(2K+1) needs at least the extra eigenvalue")
            extra = xs.pop()
        spec = cls(kind, tuple(xs), extra)
        if rank is not None and rank != spec.rank:
            expected = rank - 1 if kind is GroupKind.O_EVEN_MINUS else rank
            raise EvaluationError(
                f"{kind.label} with rank {rank} needs {expected} free eigenvalue(s), got {len(spec.xs)}"
            )
        return spec


# -- Schur polynomials -------------------------------------------------------

def _combinatorial(lam: Partition, xs: Sequence[Scalar]) -> Scalar:
    """Branching recursion: peel off the last variable as a horizontal strip."""
    memo: dict[tuple[Partition, int], Scalar] = {}

    def rec(mu: Partition, n: int) -> Scalar:
        if not mu:
            return 1
        if len(mu) > n:
            return 0
        key = (mu, n)
        if key in memo:
            return memo[key]
        x = xs[n - 1]
        total: Scalar = 0
        # nu interlaces mu: mu[i+1] <= nu[i] <= mu[i]
        for nu in _interlacing(mu):
            total += rec(nu, n - 1) * x ** (sum(mu) - sum(nu))
        memo[key] = total
        return total

    return rec(lam, len(xs))


def _interlacing(mu: Partition) -> Iterable[Partition]:
    def go(i: int) -> Iterable[tuple[int, ...]]:
        if i == len(mu):
            yield ()
            return
        lo = mu[i + 1] if i + 1 < len(mu) else 0
        for p in range(mu[i], lo - 1, -1):
            for rest in go(i + 1):
                yield (p,) + rest

    for row in go(0):
        yield make_partition(row)


def _det_exact(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _alternant(lam: Partition, xs: Sequence[Scalar]) -> Scalar:
    n = len(xs)
    if len(set(xs)) != n:
        raise EvaluationError("alternant formula needs pairwise distinct values")
    parts = list(lam) + [0] * (n - len(lam))
    num = [[x ** (parts[i] + n - 1 - i) for x in xs] for i in range(n)]
    den = [[x ** (n - 1 - i) for x in xs] for i in range(n)]
    if any(isinstance(x, float) for x in xs):
        return float(np.linalg.det(np.array(num, dtype=float)) / np.linalg.det(np.array(den, dtype=float)))
    return _det_exact(num) / _det_exact(den)


def schur_value(lam: Iterable[int], xs: Sequence, method: str = "combinatorial") -> Scalar:
    """``s_lam(x_1, ..., x_N)``.

    ``method="alternant"`` uses the ratio of alternants; with repeated values
    it logs the degeneracy and falls back to the combinatorial route.
    """
    lam = make_partition(lam)
    vals = [as_number(x) for x in xs]
    if len(lam) > len(vals):
        return 0.0 if any(isinstance(v, float) for v in vals) else Fraction(0)
    if method == "alternant" and vals:
        try:
            return _alternant(lam, vals)
        except EvaluationError as exc:
            log.info("alternant route unavailable (%s); using branching recursion", exc)
    elif method not in ("combinatorial", "alternant"):
        raise ValueError(f"unknown method {method!r}")
    out = _combinatorial(lam, vals)
    return Fraction(out) if isinstance(out, int) else out


# -- characters ---------------------------------------------------------------

_RULES = {Ring.O: "orthogonal", Ring.SP: "symplectic"}


def check_stable_range(f: SymExpr, spec: EigenvalueSpec) -> None:
    """Refuse terms whose length exceeds the rank; those need modification rules."""
    if f.ring is Ring.GL:
        return
    too_long = [lam for lam in f.terms if len(lam) > spec.rank]
    if too_long:
        worst = max(too_long, key=len)
        raise ModificationRuleRequired(
            f"{_RULES[f.ring]} modification rules required: term of length {len(worst)} "
            f"exceeds rank {spec.rank} of {spec.kind.label}"
        )


def char_value(f: SymExpr, spec: EigenvalueSpec, method: str = "combinatorial") -> Scalar:
    """Evaluate a GL, O or Sp expression on the argument list of ``spec``."""
    if not isinstance(f, SymExpr):
        raise RingMismatchError(f"cannot evaluate {type(f).__name__} on a group spec")
    if f.ring is not Ring.GL and f.ring is not spec.kind.ring:
        raise RingMismatchError(f"{f.ring} expressions cannot be evaluated on {spec.kind.label}")
    check_stable_range(f, spec)
    args = spec.arguments()
    total: Scalar = 0.0 if spec.is_float else Fraction(0)
    for lam, c in to_gl(f).terms.items():
        total += c * schur_value(lam, args, method)
    return total


def rational_char_value(f: RationalExpr, xs: Sequence, method: str = "combinatorial") -> Scalar:
    """``sum_z (-1)^|z| s_{lam/z}(x) s_{mu/z'}(x-bar)`` on GL(N) eigenvalues."""
    if not isinstance(f, RationalExpr):
        raise RingMismatchError(f"expected a rational expression, got {type(f).__name__}")
    vals = [as_number(x) for x in xs]
    inv = [_inverse(x) for x in vals]
    total: Scalar = 0.0 if any(isinstance(v, float) for v in vals) else Fraction(0)
    for (lam, mu), c in to_basis(f, "tensor").terms.items():
        total += c * schur_value(lam, vals, method) * schur_value(mu, inv, method)
    return total
