"""Evaluate parsed expressions to library values."""

from __future__ import annotations

from dataclasses import dataclass

from .. import classical, dual, rational
from ..errors import CutoffError, RingMismatchError
from ..expr import DualExpr, RationalExpr, Ring, SymExpr
from ..schur import skew_terms
from ..series import SeriesKind, series_terms, skew_by_series_terms
from .syntax import Atom, Family, Node, PairAtom, Product, Scaled, Series, Skew, Sum

Value = SymExpr | DualExpr | RationalExpr


@dataclass(frozen=True)
class Context:
    """``ring`` resolves p/h/e atoms; ``cutoff`` bounds infinite results."""

    ring: Ring | None = None
    cutoff: int | None = None


def atom_rings(node: Node) -> set[str]:
    if isinstance(node, Atom):
        return {node.ring}
    if isinstance(node, Scaled):
        return atom_rings(node.operand)
    if isinstance(node, Sum):
        return set().union(*(atom_rings(n) for n in node.items))
    if isinstance(node, (Product, Skew)):
        return atom_rings(node.left) | atom_rings(node.right)
    return set()


def infer_ring(node: Node, explicit: Ring | str | None) -> Ring:
    """Ring for p/h/e atoms: the explicit choice, else the single classical ring present, else GL."""
    if explicit is not None:
        return Ring(explicit)
    classical_rings = {r for r in atom_rings(node) if r in ("O", "Sp")}
    if len(classical_rings) == 1:
        return Ring(classical_rings.pop())
    return Ring.GL


def evaluate(node: Node, ctx: Context = Context()) -> Value:
    ring = infer_ring(node, ctx.ring)
    return _eval(node, Context(ring, ctx.cutoff))


def _eval(node: Node, ctx: Context) -> Value:
    if isinstance(node, Atom):
        ring = Ring(node.ring)
        if ring in (Ring.O_DUAL, Ring.SP_DUAL):
            return DualExpr({node.partition: 1}, ring)
        return SymExpr({node.partition: 1}, ring)
    if isinstance(node, PairAtom):
        return RationalExpr({(node.left, node.right): 1}, node.basis)
    if isinstance(node, Family):
        return classical.basis_element(ctx.ring or Ring.GL, node.family, node.n)
    if isinstance(node, Series):
        if ctx.cutoff is None:
            raise CutoffError(f"series {node.letter} is infinite; pass --cutoff or use it as a skew divisor")
        return series_terms(node.letter, ctx.cutoff).body
    if isinstance(node, Scaled):
        return node.factor * _eval(node.operand, ctx)
    if isinstance(node, Sum):
        acc = _eval(node.items[0], ctx)
        for item in node.items[1:]:
            acc = acc + _eval(item, ctx)
        return acc
    if isinstance(node, Product):
        return multiply(_eval(node.left, ctx), _eval(node.right, ctx), ctx)
    if isinstance(node, Skew):
        return _skew(_eval(node.left, ctx), node.right, ctx)
    raise TypeError(f"not a syntax node: {node!r}")


def multiply(a: Value, b: Value, ctx: Context) -> Value:
    if isinstance(a, SymExpr) and isinstance(b, SymExpr):
        return classical.product(a, b)
    if isinstance(a, DualExpr) and isinstance(b, DualExpr):
        if ctx.cutoff is None:
            raise CutoffError("dual products are infinite; pass --cutoff")
        return dual.dual_product(a, b, ctx.cutoff)
    if isinstance(a, RationalExpr) and isinstance(b, RationalExpr):
        return rational.rational_product(a, b)
    raise RingMismatchError(f"cannot multiply {_tag(a)} by {_tag(b)}")


def _skew(a: Value, divisor: Node, ctx: Context) -> Value:
    """Label-level skew: ``[lam/X]`` means sum of ``[nu]`` over ``{lam/X} = sum {nu}``."""
    if isinstance(a, RationalExpr):
        raise RingMismatchError("skews are not defined on rational expressions")
    if isinstance(a, DualExpr) and a.cutoff is not None:
        raise CutoffError("skewing lowers weights, so a truncated dual expression cannot be skewed exactly")
    if isinstance(divisor, Series):
        terms = skew_by_series_terms(dict(a.terms), SeriesKind.parse(divisor.letter))
    else:
        b = _eval(divisor, ctx)
        if not isinstance(b, SymExpr) or (b.ring is not Ring.GL and b.ring is not a.ring):
            raise RingMismatchError(f"cannot skew {_tag(a)} by {_tag(b)}; use a Schur-function divisor")
        terms = skew_terms(a.terms, b.terms)
    if isinstance(a, DualExpr):
        return DualExpr(terms, a.ring, a.cutoff)
    return SymExpr(terms, a.ring)


def _tag(v: object) -> str:
    for attr in ("ring", "basis"):
        if hasattr(v, attr):
            return str(getattr(v, attr))
    return type(v).__name__
