import pytest

from charhopf import classical, schur
from charhopf.classical import LinearFormKind, basis_element
from charhopf.errors import RingMismatchError
from charhopf.expr import Ring, SymExpr, TensorExpr, accumulate
from charhopf.partitions import partitions_up_to, subpartitions
from charhopf.schur import mul_terms, skew_terms
from charhopf.series import SeriesKind, series_dict

from helpers import (
    check_hopf_axioms,
    gl_oracle_antipode,
    gl_oracle_coproduct,
    gl_oracle_counit,
    gl_oracle_product,
)

O, SP, GL = Ring.O, Ring.SP, Ring.GL
RINGS = [O, SP]
BRANCH = {O: SeriesKind.D, SP: SeriesKind.B}


def B(lam, ring=O):
    return SymExpr.basis(lam, ring)


def label_skew(lam, divisor):
    return skew_terms({lam: 1}, divisor)


def coproduct_form(lam, ring, form):
    """The four equivalent coproduct expressions, computed on labels."""
    z = series_dict(BRANCH[ring], sum(lam))
    out = {}
    for s in subpartitions(lam):
        if form in (1, 4):
            zd = mul_terms({s: 1}, z)
            pieces = [((a, s) if form == 1 else (s, a), k) for a, k in label_skew(lam, zd).items()]
        else:
            pieces = []
            for a, ka in label_skew(lam, {s: 1}).items():
                for b, kb in label_skew(s, z).items():
                    pieces.append((((a, b) if form == 3 else (b, a)), ka * kb))
        for key, k in pieces:
            accumulate(out, key, k)
    return TensorExpr(out, (ring, ring))


# -- examples ---------------------------------------------------------------

def test_branching_examples():
    assert classical.o_to_gl(B((2, 1))) == SymExpr.basis((2, 1)) - SymExpr.basis((1,))
    assert classical.o_to_gl(B(())) == SymExpr.one()
    assert classical.sp_to_gl(B((1, 1), SP)) == SymExpr.basis((1, 1)) - SymExpr.one()
    assert classical.gl_to_o(SymExpr.basis((2,))) == B((2,)) + B(())
    assert classical.gl_to_sp(SymExpr.basis((1, 1))) == B((1, 1), SP) + B((), SP)
    assert classical.gl_to_o(SymExpr.basis((1, 1))) == B((1, 1))


def test_product_examples():
    assert classical.product_o(B((1,)), B((1,))) == B((2,)) + B((1, 1)) + B(())
    assert classical.product_sp(B((1,), SP), B((1,), SP)) == B((2,), SP) + B((1, 1), SP) + B((), SP)
    f = B((2, 1)) - 2 * B((1,))
    assert classical.product_o(B(()), f) == f


def test_coproduct_examples():
    assert classical.coproduct_o(B((1,))) == TensorExpr({((1,), ()): 1, ((), (1,)): 1}, (O, O))
    assert classical.coproduct_o(B((2,))) == TensorExpr(
        {((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1, ((), ()): 1}, (O, O))
    p2 = basis_element(O, "p", 2)
    assert classical.coproduct_o(p2) == TensorExpr.from_pair(p2, B(())) + TensorExpr.from_pair(B(()), p2)


def test_counit_antipode_examples():
    assert classical.counit_o(B(())) == 1
    assert classical.counit_o(B((2,))) == -1
    assert classical.counit_sp(B((1, 1), SP)) == -1
    assert classical.antipode_o(B((1,))) == -B((1,))
    assert classical.antipode_o(B(())) == B(())
    assert classical.antipode_sp(B((2,), SP)) == B((1, 1), SP) + B((), SP)


def test_scalar_adjoint_foulkes_examples():
    assert classical.scalar_o(B((2,)), B((2,))) == 1
    assert classical.scalar_o(B((2,)), B((1, 1))) == 0
    p2 = basis_element(O, "p", 2)
    assert classical.scalar_o(p2, p2) == 3
    assert classical.adjoint_mult_o((1,), B((1,))) == B((2,)) + B((1, 1)) + B(())
    f = B((3,)) - B((1, 1))
    assert classical.adjoint_mult_o((), f) == f
    assert classical.scalar_o(classical.adjoint_mult_o((1,), B((2,))), B((1,))) == 1
    assert classical.scalar_o(B((2,)), classical.product_o(B((1,)), B((1,)))) == 1
    assert classical.foulkes_o((1,), B((2,))) == B((1,))
    # [0] is not the identity for the Foulkes derivative; the C-series element is
    assert classical.foulkes_o((), B((3,))) == B((3,)) + B((1,))
    c_unit = SymExpr(series_dict(SeriesKind.C, 4), O)
    assert classical.foulkes_o(c_unit, f) == f
    assert classical.foulkes_o(p2, p2) == p2 + 3 * B(())


def test_basis_element_examples():
    assert basis_element(O, "p", 2) == B((2,)) - B((1, 1)) + B(())
    assert basis_element(O, "h", 3) == B((3,)) + B((1,))
    assert basis_element(SP, "e", 2) == B((1, 1), SP) + B((), SP)
    with pytest.raises(ValueError):
        basis_element(O, "p", 0)
    with pytest.raises(ValueError):
        basis_element(O, "q", 2)


def test_convolve_forms_examples():
    for lam in partitions_up_to(6):
        f = SymExpr.basis(lam)
        delta = 1 if not lam else 0
        assert classical.convolve_forms("c", "d", f) == delta
        assert classical.convolve_forms(LinearFormKind.a, LinearFormKind.b, f) == delta
    assert classical.convolve_forms("a", "b", SymExpr.basis((2, 1))) == 0


# -- oracles and axioms ----------------------------------------------------------

@pytest.mark.parametrize("ring", RINGS)
def test_round_trips(ring):
    for lam in partitions_up_to(8):
        f = B(lam, ring)
        assert classical.from_gl(classical.to_gl(f), ring) == f
        g = SymExpr.basis(lam)
        assert classical.to_gl(classical.from_gl(g, ring)) == g


@pytest.mark.parametrize("ring", RINGS)
def test_structure_maps_match_gl_oracle(ring):
    labels = partitions_up_to(6)
    for lam in labels:
        f = B(lam, ring)
        assert classical.coproduct(f) == gl_oracle_coproduct(f), lam
        assert classical.antipode(f) == gl_oracle_antipode(f), lam
        assert classical.counit(f) == gl_oracle_counit(f), lam
        for mu in labels:
            if sum(lam) + sum(mu) <= 6:
                g = B(mu, ring)
                assert classical.product(f, g) == gl_oracle_product(f, g), (lam, mu)


@pytest.mark.parametrize("ring", RINGS)
def test_hopf_axioms(ring):
    check_hopf_axioms(ring, 6, classical.product, classical.coproduct, classical.counit, classical.antipode)


@pytest.mark.parametrize("ring", RINGS)
def test_four_coproduct_forms_agree(ring):
    for lam in partitions_up_to(6):
        expected = classical.coproduct(B(lam, ring))
        for form in (1, 2, 3, 4):
            assert coproduct_form(lam, ring, form) == expected, (lam, form)


@pytest.mark.parametrize("ring", RINGS)
def test_foulkes_from_coproduct_and_pairing(ring):
    # a^perp(b) = <a | b_(1)> b_(2)
    for lam in partitions_up_to(4):
        for mu in partitions_up_to(5):
            expected = SymExpr.zero(ring)
            for (left, right), c in classical.coproduct(B(mu, ring)).terms.items():
                if left == lam:
                    expected = expected + c * B(right, ring)
            assert classical.foulkes(lam, B(mu, ring)) == expected, (lam, mu)


@pytest.mark.parametrize("ring", RINGS)
def test_multiplication_is_self_adjoint(ring):
    labels = partitions_up_to(5)
    for mu in partitions_up_to(2):
        for nu in labels:
            for lam in labels:
                if sum(lam) > 5 or sum(mu) + sum(nu) > 5:
                    continue
                lhs = classical.scalar(B(nu, ring), classical.adjoint_mult(mu, B(lam, ring)))
                rhs = classical.scalar(classical.product(B(mu, ring), B(nu, ring)), B(lam, ring))
                assert lhs == rhs


def test_gl_adjoint_is_skew():
    assert classical.adjoint_mult((1,), SymExpr.basis((2, 1))) == schur.skew((2, 1), (1,))


def test_power_sums_not_orthogonal():
    assert classical.scalar_o(basis_element(O, "p", 2), basis_element(O, "p", 4)) != 0


@pytest.mark.parametrize("ring", [GL, O, SP])
def test_table_elements_are_primitive_or_divided_powers(ring):
    one = SymExpr.one(ring)
    for n in range(1, 9):
        p = basis_element(ring, "p", n)
        assert classical.coproduct(p) == TensorExpr.from_pair(p, one) + TensorExpr.from_pair(one, p)
        for fam in "he":
            expected = TensorExpr.from_pair(basis_element(ring, fam, n), one)
            expected = expected + TensorExpr.from_pair(one, basis_element(ring, fam, n))
            for r in range(1, n):
                expected = expected + TensorExpr.from_pair(basis_element(ring, fam, n - r), basis_element(ring, fam, r))
            assert classical.coproduct(basis_element(ring, fam, n)) == expected, (fam, n)


@pytest.mark.parametrize("ring", [O, SP])
def test_table_elements_match_branching(ring):
    for n in range(1, 9):
        assert basis_element(ring, "p", n) == classical.from_gl(schur.from_p((n,)), ring)
        assert basis_element(ring, "h", n) == classical.from_gl(schur.from_h((n,)), ring)
        assert basis_element(ring, "e", n) == classical.from_gl(schur.from_e((n,)), ring)


def test_symplectic_power_sum_with_plus_sign_is_not_primitive():
    # the printed table gives +<0> for even n; only -<0> is primitive
    p2 = basis_element(SP, "p", 2)
    printed = p2 + 2 * B((), SP)
    one = SymExpr.one(SP)
    prim = TensorExpr.from_pair(printed, one) + TensorExpr.from_pair(one, printed)
    assert classical.coproduct(printed) != prim
    assert p2.coefficient(()) == -1


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        classical.product(B((1,)), B((1,), SP))
    with pytest.raises(RingMismatchError):
        classical.product_sp(B((1,)), B((1,)))
    with pytest.raises(RingMismatchError):
        classical.o_to_gl(B((1,), SP))
    with pytest.raises(RingMismatchError):
        classical.gl_to_o(B((1,)))
