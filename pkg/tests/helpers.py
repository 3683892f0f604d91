"""Independent oracles and Hopf-axiom checkers shared by the test modules.

The monomial oracle expands Schur polynomials by enumerating semistandard
tableaux cell by cell; it shares no code with the LR kernel.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Callable

from charhopf import classical, schur
from charhopf.expr import Ring, SymExpr, TensorExpr, accumulate
from charhopf.partitions import conjugate, partitions_of, partitions_up_to

Poly = dict  # exponent tuple -> int


# -- monomial oracle ---------------------------------------------------------

@lru_cache(maxsize=None)
def schur_poly(lam: tuple, n: int) -> tuple:
    """``s_lam(x_1..x_n)`` as sorted (exponents, coefficient) pairs, by tableau enumeration."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    out: Counter = Counter()
    filling: dict = {}

    def place(i: int) -> None:
        if i == len(cells):
            exps = [0] * n
            for v in filling.values():
                exps[v] += 1
            out[tuple(exps)] += 1
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])          # rows weakly increase
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)      # columns strictly increase
        for v in range(lo, n):
            filling[(r, c)] = v
            place(i + 1)
        filling.pop((r, c), None)

    place(0)
    return tuple(sorted(out.items()))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def schur_decompose(poly: Poly, n: int) -> dict:
    """Expand a symmetric polynomial in Schur polynomials by peeling leading monomials."""
    poly = dict(poly)
    result: dict = {}
    while poly:
        lead = max(poly)  # lexicographically largest exponent is a partition
        c = poly[lead]
        lam = tuple(e for e in lead if e)
        assert list(lead) == sorted(lead, reverse=True), "input is not symmetric"
        result[lam] = c
        for e, k in schur_poly(lam, n):
            v = poly.get(e, 0) - c * k
            if v:
                poly[e] = v
            else:
                poly.pop(e, None)
    return result


def power_sum_poly(n: int, nvars: int) -> Poly:
    out = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = n
        out[tuple(e)] = 1
    return out


# -- generic Hopf-axiom machinery ---------------------------------------------

def basis(ring, lam) -> SymExpr:
    return SymExpr({lam: 1}, ring)


def all_basis(ring, max_weight: int) -> list[SymExpr]:
    return [basis(ring, lam) for lam in partitions_up_to(max_weight)]


def triple_left(t: TensorExpr, cop: Callable, ring) -> dict:
    """``(Delta (x) id) t`` as a dict on label triples."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (a1, a2), k in cop(basis(ring, a)).terms.items():
            accumulate(out, (a1, a2, b), c * k)
    return out


def triple_right(t: TensorExpr, cop: Callable, ring) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), k in cop(basis(ring, b)).terms.items():
            accumulate(out, (a, b1, b2), c * k)
    return out


def counit_slot(t: TensorExpr, eps: Callable, ring, slot: int) -> SymExpr:
    out: dict = {}
    for (a, b), c in t.terms.items():
        keep, drop = (a, b) if slot == 1 else (b, a)
        e = eps(basis(ring, drop))
        if e:
            accumulate(out, keep, c * e)
    return SymExpr(out, ring)


def convolve(t: TensorExpr, left: Callable, right: Callable, mult: Callable, ring) -> SymExpr:
    """``m (left (x) right) t``."""
    acc = SymExpr({}, ring)
    for (a, b), c in t.terms.items():
        acc = acc + c * mult(left(basis(ring, a)), right(basis(ring, b)))
    return acc


def tensor_mult(x: TensorExpr, y: TensorExpr, mult: Callable, ring) -> TensorExpr:
    """Slot-wise product in a tensor square."""
    out: dict = {}
    for (a1, a2), ca in x.terms.items():
        for (b1, b2), cb in y.terms.items():
            left = mult(basis(ring, a1), basis(ring, b1))
            right = mult(basis(ring, a2), basis(ring, b2))
            for l, kl in left.terms.items():
                for r, kr in right.terms.items():
                    accumulate(out, (l, r), ca * cb * kl * kr)
    return TensorExpr(out, (ring, ring))


def tensor_map(t: TensorExpr, fn: Callable, ring_in, ring_out) -> TensorExpr:
    """Apply a linear map to both slots."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for l, kl in fn(basis(ring_in, a)).terms.items():
            for r, kr in fn(basis(ring_in, b)).terms.items():
                accumulate(out, (l, r), c * kl * kr)
    return TensorExpr(out, (ring_out, ring_out))


def unit(ring) -> SymExpr:
    return basis(ring, ())


def check_hopf_axioms(ring, max_weight: int, mult, cop, eps, anti) -> None:
    """Coassociativity, counit, cocommutativity and antipode on basis elements,
    bialgebra compatibility on pairs of total weight at most ``max_weight``."""
    for f in all_basis(ring, max_weight):
        d = cop(f)
        assert triple_left(d, cop, ring) == triple_right(d, cop, ring), f
        assert counit_slot(d, eps, ring, 1) == f, f
        assert counit_slot(d, eps, ring, 2) == f, f
        assert d.swap() == d, f
        ident = lambda g: g  # noqa: E731
        assert convolve(d, ident, anti, mult, ring) == eps(f) * unit(ring), f
        assert convolve(d, anti, ident, mult, ring) == eps(f) * unit(ring), f
    for a in range(max_weight + 1):
        for b in range(max_weight - a + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    f, g = basis(ring, mu), basis(ring, nu)
                    assert cop(mult(f, g)) == tensor_mult(cop(f), cop(g), mult, ring), (mu, nu)
                    assert eps(mult(f, g)) == eps(f) * eps(g)


def gl_oracle_product(f: SymExpr, g: SymExpr) -> SymExpr:
    return classical.from_gl(schur.product(classical.to_gl(f), classical.to_gl(g)), f.ring)


def gl_oracle_coproduct(f: SymExpr) -> TensorExpr:
    t = schur.coproduct(classical.to_gl(f))
    return tensor_map(t, lambda g: classical.from_gl(g, f.ring), Ring.GL, f.ring)


def gl_oracle_antipode(f: SymExpr) -> SymExpr:
    return classical.from_gl(schur.antipode(classical.to_gl(f)), f.ring)


def gl_oracle_counit(f: SymExpr) -> int:
    return schur.counit(classical.to_gl(f))


def chi_even(n: int) -> int:
    return 1 if n % 2 == 0 else 0


def conj(lam):
    return conjugate(lam)
