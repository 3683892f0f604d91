"""Dual character rings in the starred bases ``[lam]* = {lam} D`` and ``<lam>* = {lam} B``.

The starred basis is Kronecker dual to the bracket basis.  Products and
coproducts here produce infinitely many terms, so every operation takes a
weight cutoff and the result records the weight up to which it is exact:

* a :class:`DualExpr` with ``cutoff=None`` is a finite, exact expression;
* ``dual_product`` and ``dual_antipode`` at cutoff ``W`` are exact up to
  ``min(W, f.cutoff, g.cutoff)``, since no operation lowers label weight;
* ``dual_coproduct`` at per-slot cutoff ``W`` needs its input exact up to
  ``2W`` (a label of weight ``n`` feeds slot pairs of total weight ``n + 2|z|``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutoffError, RingMismatchError
from .expr import DualExpr, Ring, SymExpr, TensorExpr, accumulate
from .partitions import EMPTY, Partition, conjugate, partitions_up_to, subpartitions
from .schur import _mult, _skew, mul_terms
from .series import SeriesKind, product_series_dict, series_dict


@dataclass(frozen=True)
class _DualData:
    series: SeriesKind                  # [lam]* = {lam} * series
    unit: SeriesKind                    # unit = [unit]*
    antipode: tuple[SeriesKind, SeriesKind]
    bracket: Ring


_DATA = {
    Ring.O_DUAL: _DualData(SeriesKind.D, SeriesKind.C, (SeriesKind.B, SeriesKind.C), Ring.O),
    Ring.SP_DUAL: _DualData(SeriesKind.B, SeriesKind.A, (SeriesKind.D, SeriesKind.A), Ring.SP),
}

DUAL_OF = {Ring.O: Ring.O_DUAL, Ring.SP: Ring.SP_DUAL}


def _data(f: DualExpr) -> _DualData:
    if not isinstance(f, DualExpr):
        raise RingMismatchError(f"expected a dual expression, got {type(f).__name__}")
    return _DATA[f.ring]


def _effective(cutoff: int, *exprs: DualExpr) -> int:
    if cutoff < 0:
        raise CutoffError("cutoff must be non-negative")
    for f in exprs:
        if f.cutoff is not None and f.cutoff < cutoff:
            raise CutoffError(
                f"operand is only exact up to weight {f.cutoff}; cannot produce a result exact up to {cutoff}"
            )
    return cutoff


def _truncate(terms: dict, cutoff: int) -> dict:
    return {k: c for k, c in terms.items() if sum(k) <= cutoff}


def dual_unit(ring: Ring | str, cutoff: int) -> DualExpr:
    """The unit ``[C]*`` (``<A>*`` for Sp) truncated at ``cutoff``."""
    ring = Ring(ring)
    if ring not in _DATA:
        raise RingMismatchError(f"{ring} is not a dual ring")
    return DualExpr(series_dict(_DATA[ring].unit, cutoff), ring, cutoff)


def dual_to_gl(f: DualExpr, cutoff: int) -> SymExpr:
    """Schur expansion of ``f`` up to weight ``cutoff``."""
    data = _data(f)
    _effective(cutoff, f)
    terms = mul_terms(f.terms, series_dict(data.series, cutoff))
    return SymExpr(_truncate(terms, cutoff), Ring.GL)


def gl_to_dual(f: SymExpr, ring: Ring | str, cutoff: int) -> DualExpr:
    """Starred expansion of a Schur expression, exact up to ``cutoff``.

    Since ``CD = 1`` we have ``g = (g C) D``, so the starred coefficients of
    ``g`` are the Schur coefficients of ``g C`` (``g A`` for Sp*).
    """
    ring = Ring(ring)
    if ring not in _DATA:
        raise RingMismatchError(f"{ring} is not a dual ring")
    if not isinstance(f, SymExpr) or f.ring is not Ring.GL:
        raise RingMismatchError("expected a Schur-basis expression")
    inverse = _DATA[ring].unit
    terms = mul_terms(f.terms, series_dict(inverse, cutoff))
    return DualExpr(_truncate(terms, cutoff), ring, cutoff)


def dual_product(f: DualExpr, g: DualExpr, cutoff: int) -> DualExpr:
    """``[mu]* [nu]* = [mu nu D]*`` (``B`` for Sp) up to weight ``cutoff``."""
    if f.ring is not g.ring:
        raise RingMismatchError(f"cannot multiply {f.ring} by {g.ring}")
    data = _data(f)
    _effective(cutoff, f, g)
    fg = _truncate(mul_terms(_truncate(dict(f.terms), cutoff), _truncate(dict(g.terms), cutoff)), cutoff)
    terms = _truncate(mul_terms(fg, series_dict(data.series, cutoff)), cutoff)
    return DualExpr(terms, f.ring, cutoff)


def dual_coproduct(f: DualExpr, cutoff: int) -> TensorExpr:
    """``delta [lam]* = sum_{s,z} [(lam/s) z]* (x) [s z]*`` with both slots of weight at most ``cutoff``."""
    _data(f)
    if cutoff < 0:
        raise CutoffError("cutoff must be non-negative")
    if f.cutoff is not None and f.cutoff < 2 * cutoff:
        raise CutoffError(
            f"a coproduct exact up to weight {cutoff} per slot needs an operand exact up to "
            f"{2 * cutoff}; operand is exact up to {f.cutoff}"
        )
    zetas = partitions_up_to(cutoff)
    out: dict = {}
    for lam, c in f.terms.items():
        if sum(lam) > 2 * cutoff:
            continue
        for sigma in subpartitions(lam):
            if sum(sigma) > cutoff:
                continue
            for rest, k in _skew(lam, sigma):
                if sum(rest) > cutoff:
                    continue
                for zeta in zetas:
                    z = sum(zeta)
                    if z + sum(rest) > cutoff or z + sum(sigma) > cutoff:
                        continue
                    left = _mult(rest, zeta)
                    right = _mult(sigma, zeta)
                    for a, ka in left:
                        for b, kb in right:
                            accumulate(out, (a, b), c * k * ka * kb)
    return TensorExpr(out, (f.ring, f.ring))


def dual_counit(f: DualExpr) -> int:
    _data(f)
    return f.coefficient(EMPTY)


def dual_antipode(f: DualExpr, cutoff: int) -> DualExpr:
    """``S[lam]* = (-1)^|lam| [lam' B C]*``; Sp uses ``D A``."""
    data = _data(f)
    _effective(cutoff, f)
    series = product_series_dict(data.antipode, cutoff)
    out: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        if sum(lam) > cutoff:
            continue
        sign = (-1) ** sum(lam)
        for nu, k in mul_terms({conjugate(lam): 1}, series).items():
            if sum(nu) <= cutoff:
                accumulate(out, nu, sign * c * k)
    return DualExpr(out, f.ring, cutoff)


def dual_multiply(t: TensorExpr, cutoff: int) -> DualExpr:
    """Apply the dual product to a tensor of starred labels, up to weight ``cutoff``."""
    ring = t.rings[0]
    if t.rings[1] != ring or ring not in _DATA:
        raise RingMismatchError(f"expected a tensor square of a dual ring, got {t.rings}")
    flat: dict[Partition, int] = {}
    for (a, b), c in t.terms.items():
        if sum(a) + sum(b) > cutoff:
            continue
        for lam, k in _mult(a, b):
            accumulate(flat, lam, c * k)
    terms = _truncate(mul_terms(flat, series_dict(_DATA[ring].series, cutoff)), cutoff)
    return DualExpr(terms, ring, cutoff)


def pairing(f: DualExpr, g: SymExpr) -> int:
    """``<f | g>`` between a starred and a bracket expression: Kronecker on labels."""
    data = _data(f)
    if not isinstance(g, SymExpr) or g.ring is not data.bracket:
        raise RingMismatchError(f"{f.ring} pairs with {data.bracket} expressions")
    if f.cutoff is not None and g.max_weight > f.cutoff:
        raise CutoffError("dual operand is not exact up to the weight of the bracket operand")
    return sum(c * g.coefficient(lam) for lam, c in f.terms.items())
