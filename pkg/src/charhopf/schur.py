"""The ring of symmetric functions in the Schur basis.

Products and skews go through the Littlewood-Richardson kernel in
:mod:`charhopf._kernels`; results are memoized per partition pair.  The
label-level helpers (``mul_terms``, ``skew_terms``) work on plain dicts so the
orthogonal and symplectic rings can reuse them with their own brackets.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from . import _kernels
from .errors import RingMismatchError
from .expr import LinearCombination, Ring, SymExpr, TensorExpr, accumulate
from .partitions import EMPTY, Partition, conjugate, contains, make_partition, subpartitions


@lru_cache(maxsize=None)
def _mult(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not nu:
        return ((mu, 1),)
    if not mu:
        return ((nu, 1),)
    # fewer letters means a shallower search
    if len(nu) > len(mu):
        mu, nu = nu, mu
    return tuple(sorted(_kernels.tally(_kernels.product_shapes(mu, nu)).items()))


@lru_cache(maxsize=None)
def _skew(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not mu:
        return ((lam, 1),)
    if not contains(lam, mu):
        return ()
    if lam == mu:
        return ((EMPTY, 1),)
    return tuple(sorted(_kernels.tally(_kernels.skew_contents(lam, mu)).items()))


def clear_caches() -> None:
    _mult.cache_clear()
    _skew.cache_clear()


def mul_terms(a: Mapping[Partition, int], b: Mapping[Partition, int]) -> dict[Partition, int]:
    """Schur product of two label dicts."""
    out: dict[Partition, int] = {}
    for mu, cm in a.items():
        for nu, cn in b.items():
            c = cm * cn
            for lam, k in _mult(mu, nu):
                accumulate(out, lam, c * k)
    return out


def skew_terms(a: Mapping[Partition, int], b: Mapping[Partition, int]) -> dict[Partition, int]:
    """``sum a_lam b_mu s_{lam/mu}`` on label dicts."""
    out: dict[Partition, int] = {}
    for lam, cl in a.items():
        for mu, cm in b.items():
            if sum(mu) > sum(lam):
                continue
            c = cl * cm
            for nu, k in _skew(lam, mu):
                accumulate(out, nu, c * k)
    return out


def _require_gl(*exprs: LinearCombination) -> None:
    for f in exprs:
        if not isinstance(f, SymExpr) or f.ring is not Ring.GL:
            tag = getattr(f, "ring", type(f).__name__)
            raise RingMismatchError(f"expected a Schur-basis expression, got {tag}")


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """The Littlewood-Richardson coefficient ``c^lam_{mu nu}``."""
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    return dict(_skew(lam, mu)).get(nu, 0)


def product(f: SymExpr, g: SymExpr) -> SymExpr:
    _require_gl(f, g)
    return SymExpr(mul_terms(f.terms, g.terms), Ring.GL)


def skew(lam: Partition, mu: Partition) -> SymExpr:
    """``s_{lam/mu}`` expanded in Schur functions."""
    return SymExpr(dict(_skew(make_partition(lam), make_partition(mu))), Ring.GL)


def skew_expr(f: SymExpr, g: SymExpr) -> SymExpr:
    """``f / g``, the skew extended bilinearly."""
    _require_gl(f, g)
    return SymExpr(skew_terms(f.terms, g.terms), Ring.GL)


def coproduct_terms(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    out: dict = {}
    for mu in subpartitions(lam):
        for nu, k in _skew(lam, mu):
            out[(mu, nu)] = k
    return out


def coproduct(f: SymExpr) -> TensorExpr:
    _require_gl(f)
    out: dict = {}
    for lam, c in f.terms.items():
        for key, k in coproduct_terms(lam).items():
            accumulate(out, key, c * k)
    return TensorExpr(out, (Ring.GL, Ring.GL))


def antipode(f: SymExpr) -> SymExpr:
    _require_gl(f)
    return SymExpr({conjugate(lam): (-1) ** sum(lam) * c for lam, c in f.terms.items()}, Ring.GL)


def counit(f: SymExpr) -> int:
    _require_gl(f)
    return f.coefficient(EMPTY)


def schur_hall(f: SymExpr, g: SymExpr) -> int:
    _require_gl(f, g)
    return sum(c * g.coefficient(lam) for lam, c in f.terms.items())


def tensor_product(x: TensorExpr, y: TensorExpr) -> TensorExpr:
    """Slot-wise product in a tensor square of the Schur ring."""
    if x.rings != (Ring.GL, Ring.GL) or y.rings != (Ring.GL, Ring.GL):
        raise RingMismatchError("slot-wise product needs GL (x) GL operands")
    out: dict = {}
    for (a1, a2), ca in x.terms.items():
        for (b1, b2), cb in y.terms.items():
            c = ca * cb
            for l1, k1 in _mult(a1, b1):
                for l2, k2 in _mult(a2, b2):
                    accumulate(out, (l1, l2), c * k1 * k2)
    return TensorExpr(out, x.rings)


# -- multiplicative bases --------------------------------------------------

def h_terms(n: int) -> dict[Partition, int]:
    return {(n,) if n else EMPTY: 1}


def e_terms(n: int) -> dict[Partition, int]:
    return {(1,) * n: 1}


def p_terms(n: int) -> dict[Partition, int]:
    """Hook expansion ``p_n = sum_b (-1)^b s_(n-b, 1^b)``."""
    if n == 0:
        return {EMPTY: 1}
    return {(n - b,) + (1,) * b: (-1) ** b for b in range(n)}


def _multiplicative(lam: Partition, one_part) -> SymExpr:
    acc: dict[Partition, int] = {EMPTY: 1}
    for part in make_partition(lam):
        acc = mul_terms(acc, one_part(part))
    return SymExpr(acc, Ring.GL)


def from_h(lam: Partition) -> SymExpr:
    return _multiplicative(lam, h_terms)


def from_e(lam: Partition) -> SymExpr:
    return _multiplicative(lam, e_terms)


def from_p(lam: Partition) -> SymExpr:
    return _multiplicative(lam, p_terms)


def foulkes_gl(f: SymExpr, g: SymExpr) -> SymExpr:
    """``f^perp(g)``: the adjoint of multiplication by ``f``, i.e. ``g / f``."""
    _require_gl(f, g)
    return SymExpr(skew_terms(g.terms, f.terms), Ring.GL)
