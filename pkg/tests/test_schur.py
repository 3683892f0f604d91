import itertools
import threading

import pytest
from hypothesis import given, settings, strategies as st

from charhopf import schur
from charhopf.errors import RingMismatchError
from charhopf.expr import Ring, SymExpr, TensorExpr
from charhopf.partitions import conjugate, partitions_of, partitions_up_to, z_of

from helpers import poly_mul, power_sum_poly, schur_decompose, schur_poly

S = SymExpr.basis
ONE = SymExpr.one()

small = st.sampled_from(partitions_up_to(4))


def exps_of_weight(n, nvars):
    for combo in itertools.combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def h_poly(n, nvars):
    return {e: 1 for e in exps_of_weight(n, nvars)}


def e_poly(n, nvars):
    out = {}
    for combo in itertools.combinations(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def multiplicative_oracle(lam, one_part):
    n = max(sum(lam), 1)
    acc = {(0,) * n: 1}
    for part in lam:
        acc = poly_mul(acc, one_part(part, n))
    return SymExpr(schur_decompose(acc, n))


@pytest.mark.parametrize("mu, nu, lam, c", [
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((), (3, 1), (3, 1), 1),
    ((1,), (1,), (2,), 1),
    ((1,), (1,), (3,), 0),
    ((2,), (1,), (1, 1, 1), 0),
])
def test_lr_coefficient_examples(mu, nu, lam, c):
    assert schur.lr_coefficient(mu, nu, lam) == c


def test_product_examples():
    assert schur.product(S((1,)), S((1,))) == S((2,)) + S((1, 1))
    assert schur.product(S((2,)), S((1,))) == S((3,)) + S((2, 1))
    f = 3 * S((2, 1)) - S((1,))
    assert schur.product(ONE, f) == f


def test_skew_examples():
    assert schur.skew((2, 1), (1,)) == S((2,)) + S((1, 1))
    assert schur.skew((3, 1), ()) == S((3, 1))
    assert schur.skew((3, 1), (3, 1)) == ONE
    assert schur.skew((2,), (1, 1)) == SymExpr.zero()


def test_coproduct_examples():
    assert schur.coproduct(S((1,))) == TensorExpr({((1,), ()): 1, ((), (1,)): 1})
    assert schur.coproduct(S((2,))) == TensorExpr({((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1})
    assert schur.coproduct(ONE) == TensorExpr({((), ()): 1})


def test_antipode_counit_examples():
    assert schur.antipode(S((2, 1))) == -S((2, 1))
    assert schur.antipode(S((3,))) == -S((1, 1, 1))
    assert schur.antipode(ONE) == ONE
    assert schur.counit(ONE) == 1
    assert schur.counit(S((2,))) == 0
    assert schur.counit(3 * ONE - S((1,))) == 3


def test_schur_hall_examples():
    assert schur.schur_hall(S((2,)), S((2,))) == 1
    assert schur.schur_hall(S((2,)), S((1, 1))) == 0
    assert schur.schur_hall(schur.from_p((2,)), schur.from_p((2,))) == 2


def test_basis_examples():
    assert schur.from_p((2,)) == S((2,)) - S((1, 1))
    assert schur.from_p((3,)) == S((3,)) - S((2, 1)) + S((1, 1, 1))
    for n in range(1, 6):
        assert schur.from_h((n,)) == S((n,))
        assert schur.from_e((n,)) == S((1,) * n)


def test_foulkes_examples():
    assert schur.foulkes_gl(S((1,)), S((2, 1))) == S((2,)) + S((1, 1))
    g = S((3, 1)) - 2 * S((2,))
    assert schur.foulkes_gl(ONE, g) == g
    p2 = schur.from_p((2,))
    assert schur.foulkes_gl(p2, p2) == 2 * ONE


def test_products_match_monomial_oracle():
    for a in range(1, 4):
        for b in range(1, 6 - a + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    n = a + b
                    prod = poly_mul(dict(schur_poly(mu, n)), dict(schur_poly(nu, n)))
                    assert schur.product(S(mu), S(nu)) == SymExpr(schur_decompose(prod, n)), (mu, nu)


def test_multiplicative_bases_match_monomial_oracle():
    for lam in partitions_up_to(5):
        if not lam:
            continue
        assert schur.from_h(lam) == multiplicative_oracle(lam, h_poly), lam
        assert schur.from_e(lam) == multiplicative_oracle(lam, e_poly), lam
        assert schur.from_p(lam) == multiplicative_oracle(lam, power_sum_poly), lam


def test_power_sums_are_orthogonal_with_z_norm():
    for a in range(1, 7):
        for lam in partitions_of(a):
            for mu in partitions_of(a):
                got = schur.schur_hall(schur.from_p(lam), schur.from_p(mu))
                assert got == (z_of(lam) if lam == mu else 0)


def test_coassociativity_and_self_duality():
    for lam in partitions_up_to(6):
        d = schur.coproduct(S(lam))
        left = {}
        right = {}
        for (a, b), c in d.terms.items():
            for (a1, a2), k in schur.coproduct(S(a)).terms.items():
                left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * k
            for (b1, b2), k in schur.coproduct(S(b)).terms.items():
                right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * k
        assert {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}
        # <Delta s_lam | s_mu (x) s_nu> = <s_lam | s_mu s_nu>
        for (mu, nu), c in d.terms.items():
            assert c == schur.schur_hall(S(lam), schur.product(S(mu), S(nu)))


def test_leibniz_rule():
    for lam in partitions_up_to(3):
        d = schur.coproduct(S(lam))
        for mu in partitions_up_to(3):
            for nu in partitions_up_to(2):
                fg = schur.product(S(mu), S(nu))
                lhs = schur.foulkes_gl(S(lam), fg)
                rhs = SymExpr.zero()
                for (a, b), c in d.terms.items():
                    rhs = rhs + c * schur.product(schur.foulkes_gl(S(a), S(mu)), schur.foulkes_gl(S(b), S(nu)))
                assert lhs == rhs, (lam, mu, nu)


@given(small, small, small)
@settings(max_examples=60, deadline=None)
def test_product_commutative_and_associative(a, b, c):
    fa, fb, fc = S(a), S(b), S(c)
    assert schur.product(fa, fb) == schur.product(fb, fa)
    assert schur.product(schur.product(fa, fb), fc) == schur.product(fa, schur.product(fb, fc))


@given(small, small)
@settings(max_examples=60, deadline=None)
def test_skew_is_adjoint_of_product(lam, mu):
    for nu in partitions_of(sum(lam) + sum(mu)):
        assert schur.schur_hall(schur.product(S(lam), S(mu)), S(nu)) == \
            schur.schur_hall(S(lam), schur.skew(nu, mu))


@given(small)
@settings(max_examples=40, deadline=None)
def test_antipode_is_involution_and_conjugation(lam):
    f = S(lam)
    assert schur.antipode(schur.antipode(f)) == f
    assert schur.antipode(f) == (-1) ** sum(lam) * S(conjugate(lam))


def test_ring_tags_enforced():
    with pytest.raises(RingMismatchError):
        schur.product(S((1,)), SymExpr.basis((1,), Ring.O))
    with pytest.raises(RingMismatchError):
        schur.coproduct(SymExpr.basis((1,), Ring.SP))


def test_cache_is_deterministic_under_threads():
    schur.clear_caches()
    pairs = [(mu, nu) for mu in partitions_up_to(4) for nu in partitions_up_to(3)]
    results = [None] * 4

    def work(i):
        results[i] = [schur.product(S(mu), S(nu)) for mu, nu in pairs]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
