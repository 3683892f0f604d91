"""Orthogonal and symplectic universal character rings.

``[lam] = {lam/C}`` and ``<lam> = {lam/A}``, with inverses ``{lam} = [lam/D]``
and ``{lam} = <lam/B>``.  The structure maps below work directly on bracket
labels through finite Schur-function sums; conversion through GL is kept for
tests.  The generic entry points (``product``, ``coproduct`` ...) dispatch on
the ring tag and also accept Schur-basis expressions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from . import schur
from .errors import RingMismatchError
from .expr import Ring, SymExpr, TensorExpr, accumulate
from .partitions import EMPTY, Partition, conjugate, is_member, make_partition, PartitionSet, subpartitions
from .schur import _mult, _skew, mul_terms, skew_terms
from .series import SeriesKind, product_series_dict, series_dict, skew_by_series_terms


@dataclass(frozen=True)
class _RingData:
    to_gl: SeriesKind        # bracket -> Schur:  {lam / to_gl}
    from_gl: SeriesKind      # Schur -> bracket:  [lam / from_gl]
    counit: SeriesKind       # signed indicator
    antipode: tuple[SeriesKind, SeriesKind]


_DATA = {
    Ring.O: _RingData(SeriesKind.C, SeriesKind.D, SeriesKind.C, (SeriesKind.A, SeriesKind.D)),
    Ring.SP: _RingData(SeriesKind.A, SeriesKind.B, SeriesKind.A, (SeriesKind.B, SeriesKind.C)),
}


def _ring_of(*exprs: SymExpr) -> Ring:
    rings = {getattr(f, "ring", None) for f in exprs}
    if len(rings) != 1 or not all(isinstance(f, SymExpr) for f in exprs):
        raise RingMismatchError(f"operands live in different rings: {sorted(map(str, rings))}")
    return rings.pop()


def _require(ring: Ring, *exprs: SymExpr) -> None:
    for f in exprs:
        if not isinstance(f, SymExpr) or f.ring is not ring:
            raise RingMismatchError(f"expected a {ring} expression, got {getattr(f, 'ring', type(f).__name__)}")


def _classical(f: SymExpr) -> _RingData:
    try:
        return _DATA[f.ring]
    except KeyError:
        raise RingMismatchError(f"expected an O or Sp expression, got {f.ring}") from None


# -- branching ---------------------------------------------------------------

def to_gl(f: SymExpr) -> SymExpr:
    """Expand bracket characters in Schur functions."""
    if f.ring is Ring.GL:
        return f
    data = _classical(f)
    return SymExpr(skew_by_series_terms(dict(f.terms), data.to_gl), Ring.GL)


def from_gl(f: SymExpr, ring: Ring | str) -> SymExpr:
    """Branch a Schur-basis expression into the ``ring`` bracket basis."""
    schur._require_gl(f)
    ring = Ring(ring)
    if ring is Ring.GL:
        return f
    data = _DATA[ring]
    return SymExpr(skew_by_series_terms(dict(f.terms), data.from_gl), ring)


def convert(f: SymExpr, ring: Ring | str) -> SymExpr:
    return from_gl(to_gl(f), ring)


def o_to_gl(f: SymExpr) -> SymExpr:
    _require(Ring.O, f)
    return to_gl(f)


def sp_to_gl(f: SymExpr) -> SymExpr:
    _require(Ring.SP, f)
    return to_gl(f)


def gl_to_o(f: SymExpr) -> SymExpr:
    return from_gl(f, Ring.O)


def gl_to_sp(f: SymExpr) -> SymExpr:
    return from_gl(f, Ring.SP)


# -- Hopf structure ----------------------------------------------------------

def _nl_terms(a: Mapping[Partition, int], b: Mapping[Partition, int]) -> dict[Partition, int]:
    """Newell-Littlewood product on labels: sum_z (mu/z)(nu/z)."""
    out: dict[Partition, int] = {}
    for mu, cm in a.items():
        for nu, cn in b.items():
            c = cm * cn
            small, big = (mu, nu) if sum(mu) <= sum(nu) else (nu, mu)
            for zeta in subpartitions(small):
                left = dict(_skew(mu, zeta))
                if not left:
                    continue
                right = dict(_skew(nu, zeta))
                if not right:
                    continue
                for lam, k in mul_terms(left, right).items():
                    accumulate(out, lam, c * k)
    return out


def product(f: SymExpr, g: SymExpr) -> SymExpr:
    ring = _ring_of(f, g)
    if ring is Ring.GL:
        return schur.product(f, g)
    return SymExpr(_nl_terms(f.terms, g.terms), ring)


def product_o(f: SymExpr, g: SymExpr) -> SymExpr:
    _require(Ring.O, f, g)
    return product(f, g)


def product_sp(f: SymExpr, g: SymExpr) -> SymExpr:
    _require(Ring.SP, f, g)
    return product(f, g)


def coproduct(f: SymExpr) -> TensorExpr:
    """``Delta[lam] = sum_s [lam/s] (x) [s/D]`` (``D -> B`` for Sp)."""
    if f.ring is Ring.GL:
        return schur.coproduct(f)
    data = _classical(f)
    out: dict = {}
    for lam, c in f.terms.items():
        for sigma in subpartitions(lam):
            right = skew_by_series_terms({sigma: 1}, data.from_gl)
            for left, k in _skew(lam, sigma):
                for r, kr in right.items():
                    accumulate(out, (left, r), c * k * kr)
    return TensorExpr(out, (f.ring, f.ring))


def coproduct_o(f: SymExpr) -> TensorExpr:
    _require(Ring.O, f)
    return coproduct(f)


def coproduct_sp(f: SymExpr) -> TensorExpr:
    _require(Ring.SP, f)
    return coproduct(f)


def _signed_indicator(kind: SeriesKind, lam: Partition) -> int:
    return kind.sign(lam) if is_member(lam, kind.family) else 0


def counit(f: SymExpr) -> int:
    """O: signed indicator of the C family; Sp: of the A family."""
    if f.ring is Ring.GL:
        return schur.counit(f)
    kind = _classical(f).counit
    return sum(c * _signed_indicator(kind, lam) for lam, c in f.terms.items())


def counit_o(f: SymExpr) -> int:
    _require(Ring.O, f)
    return counit(f)


def counit_sp(f: SymExpr) -> int:
    _require(Ring.SP, f)
    return counit(f)


def antipode(f: SymExpr) -> SymExpr:
    """``S[lam] = (-1)^|lam| [lam'/(AD)]``; Sp uses ``BC``."""
    if f.ring is Ring.GL:
        return schur.antipode(f)
    kinds = _classical(f).antipode
    top = f.max_weight
    series = product_series_dict(kinds, top)
    out: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        sign = (-1) ** sum(lam)
        for nu, k in skew_terms({conjugate(lam): 1}, series).items():
            accumulate(out, nu, sign * c * k)
    return SymExpr(out, f.ring)


def antipode_o(f: SymExpr) -> SymExpr:
    _require(Ring.O, f)
    return antipode(f)


def antipode_sp(f: SymExpr) -> SymExpr:
    _require(Ring.SP, f)
    return antipode(f)


def scalar(f: SymExpr, g: SymExpr) -> int:
    """Kronecker pairing of the bracket (or Schur) coefficients."""
    _ring_of(f, g)
    return sum(c * g.coefficient(lam) for lam, c in f.terms.items())


def scalar_o(f: SymExpr, g: SymExpr) -> int:
    _require(Ring.O, f, g)
    return scalar(f, g)


def scalar_sp(f: SymExpr, g: SymExpr) -> int:
    _require(Ring.SP, f, g)
    return scalar(f, g)


def _as_expr(mu: Partition | SymExpr, ring: Ring) -> SymExpr:
    if isinstance(mu, SymExpr):
        return mu
    return SymExpr({make_partition(mu): 1}, ring)


def adjoint_mult(mu: Partition | SymExpr, f: SymExpr) -> SymExpr:
    """Adjoint of multiplication by ``mu`` under the bracket scalar product.

    The bracket bases are self-dual, so this is multiplication itself.  In
    GL the adjoint is the skew.
    """
    m = _as_expr(mu, f.ring)
    if f.ring is Ring.GL:
        return schur.foulkes_gl(m, f)
    return product(m, f)


def adjoint_mult_o(mu: Partition | SymExpr, f: SymExpr) -> SymExpr:
    _require(Ring.O, f)
    return adjoint_mult(mu, f)


def adjoint_mult_sp(mu: Partition | SymExpr, f: SymExpr) -> SymExpr:
    _require(Ring.SP, f)
    return adjoint_mult(mu, f)


def foulkes(lam: Partition | SymExpr, f: SymExpr) -> SymExpr:
    """``[lam]^perp [mu] = [mu/(lam D)]``; Sp uses ``B``; GL is the plain skew."""
    a = _as_expr(lam, f.ring)
    _ring_of(a, f)
    if f.ring is Ring.GL:
        return schur.foulkes_gl(a, f)
    kind = _classical(f).from_gl
    series = series_dict(kind, max(f.max_weight, 0))
    divisor = mul_terms(a.terms, series)
    top = f.max_weight
    divisor = {k: c for k, c in divisor.items() if sum(k) <= top}
    return SymExpr(skew_terms(f.terms, divisor), f.ring)


def foulkes_o(lam: Partition | SymExpr, f: SymExpr) -> SymExpr:
    _require(Ring.O, f)
    return foulkes(lam, f)


def foulkes_sp(lam: Partition | SymExpr, f: SymExpr) -> SymExpr:
    _require(Ring.SP, f)
    return foulkes(lam, f)


# -- p, h, e ---------------------------------------------------------------

def _hooks(n: int) -> dict[Partition, int]:
    return schur.p_terms(n)


def basis_element(ring: Ring | str, family: str, n: int) -> SymExpr:
    """Image of ``p_n``, ``h_n`` or ``e_n`` in the bracket basis of ``ring``.

    Orthogonal: ``p_n = hooks + [0]`` for even n, ``h_n = sum [n-2k]``,
    ``e_n = [1^n]``.  Symplectic: ``p_n = hooks - <0>`` for even n,
    ``h_n = <n>``, ``e_n = sum <1^(n-2r)>``.
    """
    ring = Ring(ring)
    if n < 1:
        raise ValueError(f"basis elements are indexed by n >= 1, got {n}")
    if family not in ("p", "h", "e"):
        raise ValueError(f"family must be one of p, h, e; got {family!r}")
    if ring is Ring.GL:
        return {"p": schur.from_p, "h": schur.from_h, "e": schur.from_e}[family]((n,))
    if ring not in _DATA:
        raise RingMismatchError(f"no p/h/e basis in {ring}")
    even = n % 2 == 0
    if family == "p":
        terms = _hooks(n)
        if even:
            terms[EMPTY] = 1 if ring is Ring.O else -1
        return SymExpr(terms, ring)
    orthogonal = ring is Ring.O
    if (family == "h") == orthogonal:
        # sum over k of the row [n-2k] or the column <1^(n-2k)>
        terms = {}
        for m in range(n, -1, -2):
            terms[(m,) if family == "h" else (1,) * m] = 1
        terms = {make_partition(k): c for k, c in terms.items()}
        return SymExpr(terms, ring)
    lam = (n,) if family == "h" else (1,) * n
    return SymExpr({lam: 1}, ring)


# -- linear forms ------------------------------------------------------------

class LinearFormKind(enum.Enum):
    """The linear forms a, b, c, d on the Schur ring.

    ``c`` and ``a`` are the signed indicators of the C and A families; ``d``
    and ``b`` are the plain indicators of the D and B families.
    """

    a = SeriesKind.A
    b = SeriesKind.B
    c = SeriesKind.C
    d = SeriesKind.D

    def __call__(self, lam: Partition) -> int:
        return _signed_indicator(self.value, lam)


def convolve_forms(x: LinearFormKind | str, y: LinearFormKind | str, f: SymExpr) -> int:
    """``(x * y)(f) = sum x(f_(1)) y(f_(2))`` through the Schur coproduct."""
    schur._require_gl(f)
    x = LinearFormKind[x] if isinstance(x, str) else x
    y = LinearFormKind[y] if isinstance(y, str) else y
    total = 0
    for (left, right), c in schur.coproduct(f).terms.items():
        total += c * x(left) * y(right)
    return total
