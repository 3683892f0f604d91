"""Universal rational characters of GL.

Mixed characters ``{lam; mu-bar} = sum_z (-1)^|z| {lam/z} (x) {mu/z'}-bar``
form a basis of the tensor square of the Schur ring; the inverse expansion is
``{lam} (x) {mu}-bar = sum_h {lam/h; mu/h}``.  Structure maps work in the
mixed basis.

The counit and antipode are the transports of the tensor-square counit and
antipode to the mixed basis:

    eps({mu; nu-bar}) = (-1)^|mu| [nu = mu']
    S({mu; nu-bar})   = (-1)^(|mu|+|nu|) {mu'; nu'-bar}
"""

from __future__ import annotations

from typing import Mapping

from .errors import RingMismatchError
from .expr import RationalBasis, RationalExpr, TensorExpr, accumulate
from .partitions import EMPTY, Partition, conjugate, partitions_up_to, subpartitions
from .schur import _mult, _skew, mul_terms

Pair = tuple[Partition, Partition]


def _require(f: RationalExpr, basis: RationalBasis | None = None) -> None:
    if not isinstance(f, RationalExpr):
        raise RingMismatchError(f"expected a rational expression, got {type(f).__name__}")
    if basis is not None and f.basis is not basis:
        raise RingMismatchError(f"expected the {basis} basis, got {f.basis}")


def _common_skews(lam: Partition, mu: Partition, conj: bool) -> list[tuple[Partition, Partition]]:
    """Pairs ``(z, z')`` (or ``(z, z)``) with ``z`` inside ``lam`` and its partner inside ``mu``."""
    out = []
    for z in subpartitions(lam):
        partner = conjugate(z) if conj else z
        if len(partner) <= len(mu) and all(a <= b for a, b in zip(partner, mu)):
            out.append((z, partner))
    return out


def mixed_to_tensor(f: RationalExpr) -> RationalExpr:
    """``{lam; mu-bar} -> sum_z (-1)^|z| {lam/z} (x) {mu/z'}-bar``."""
    _require(f, RationalBasis.MIXED)
    out: dict = {}
    for (lam, mu), c in f.terms.items():
        for z, zc in _common_skews(lam, mu, conj=True):
            sign = (-1) ** sum(z)
            for a, ka in _skew(lam, z):
                for b, kb in _skew(mu, zc):
                    accumulate(out, (a, b), sign * c * ka * kb)
    return RationalExpr(out, RationalBasis.TENSOR)


def _tensor_to_mixed_terms(terms: Mapping[Pair, int]) -> dict:
    out: dict = {}
    for (lam, mu), c in terms.items():
        for h, _ in _common_skews(lam, mu, conj=False):
            for a, ka in _skew(lam, h):
                for b, kb in _skew(mu, h):
                    accumulate(out, (a, b), c * ka * kb)
    return out


def tensor_to_mixed(f: RationalExpr) -> RationalExpr:
    """``{lam} (x) {mu}-bar -> sum_h {lam/h; mu/h}``."""
    _require(f, RationalBasis.TENSOR)
    return RationalExpr(_tensor_to_mixed_terms(f.terms), RationalBasis.MIXED)


def to_mixed(f: RationalExpr) -> RationalExpr:
    _require(f)
    return f if f.basis is RationalBasis.MIXED else tensor_to_mixed(f)


def to_basis(f: RationalExpr, basis: RationalBasis | str) -> RationalExpr:
    basis = RationalBasis(basis)
    f = to_mixed(f)
    return f if basis is RationalBasis.MIXED else mixed_to_tensor(f)


def rational_product(f: RationalExpr, g: RationalExpr) -> RationalExpr:
    """``{k; l} {m; n} = sum_{s,t} {(k/s)(m/t); (l/t)(n/s)}`` (bars on the right)."""
    f, g = to_mixed(f), to_mixed(g)
    out: dict = {}
    for (kappa, lam), cf in f.terms.items():
        for (mu, nu), cg in g.terms.items():
            c = cf * cg
            # s runs inside kappa and nu, t inside mu and lam
            for s, _ in _common_skews(kappa, nu, conj=False):
                ks = dict(_skew(kappa, s))
                ns = dict(_skew(nu, s))
                for t, _ in _common_skews(mu, lam, conj=False):
                    left = mul_terms(ks, dict(_skew(mu, t)))
                    right = mul_terms(dict(_skew(lam, t)), ns)
                    for a, ka in left.items():
                        for b, kb in right.items():
                            accumulate(out, (a, b), c * ka * kb)
    return RationalExpr(out, RationalBasis.MIXED)


def tensor_basis_product(f: RationalExpr, g: RationalExpr) -> RationalExpr:
    """Slot-wise Schur product in the tensor basis."""
    _require(f, RationalBasis.TENSOR)
    _require(g, RationalBasis.TENSOR)
    out: dict = {}
    for (a1, b1), cf in f.terms.items():
        for (a2, b2), cg in g.terms.items():
            for a, ka in _mult(a1, a2):
                for b, kb in _mult(b1, b2):
                    accumulate(out, (a, b), cf * cg * ka * kb)
    return RationalExpr(out, RationalBasis.TENSOR)


def rational_coproduct(f: RationalExpr) -> TensorExpr:
    """``Delta{m; n} = sum_{s,t,r} {m/s; n/t} (x) {s/r; t/r}``."""
    _require(f, RationalBasis.MIXED)
    out: dict = {}
    for (mu, nu), c in f.terms.items():
        for sigma in subpartitions(mu):
            left_a = _skew(mu, sigma)
            for tau in subpartitions(nu):
                left_b = _skew(nu, tau)
                right = _tensor_to_mixed_terms({(sigma, tau): 1})
                for a, ka in left_a:
                    for b, kb in left_b:
                        for key, kr in right.items():
                            accumulate(out, ((a, b), key), c * ka * kb * kr)
    return TensorExpr(out, (RationalBasis.MIXED, RationalBasis.MIXED))


def tensor_basis_coproduct(f: RationalExpr) -> TensorExpr:
    """Coproduct of the tensor square: each slot splits independently."""
    _require(f, RationalBasis.TENSOR)
    out: dict = {}
    for (lam, mu), c in f.terms.items():
        for alpha in subpartitions(lam):
            for a, ka in _skew(lam, alpha):
                for beta in subpartitions(mu):
                    for b, kb in _skew(mu, beta):
                        accumulate(out, ((a, b), (alpha, beta)), c * ka * kb)
    return TensorExpr(out, (RationalBasis.TENSOR, RationalBasis.TENSOR))


def rational_counit(f: RationalExpr) -> int:
    _require(f, RationalBasis.MIXED)
    return sum(c * (-1) ** sum(mu) for (mu, nu), c in f.terms.items() if nu == conjugate(mu))


def rational_antipode(f: RationalExpr) -> RationalExpr:
    _require(f, RationalBasis.MIXED)
    return RationalExpr(
        {(conjugate(mu), conjugate(nu)): (-1) ** (sum(mu) + sum(nu)) * c for (mu, nu), c in f.terms.items()},
        RationalBasis.MIXED,
    )


def rational_scalar(f: RationalExpr, g: RationalExpr) -> int:
    """Kronecker pairing in the mixed basis; tensor-basis inputs are converted first."""
    f, g = to_mixed(f), to_mixed(g)
    return sum(c * g.coefficient(key) for key, c in f.terms.items())


def rational_unit() -> RationalExpr:
    return RationalExpr.mixed(EMPTY, EMPTY)


def tensor_multiply(t: TensorExpr) -> RationalExpr:
    """Apply the product to a tensor of mixed characters."""
    if t.rings != (RationalBasis.MIXED, RationalBasis.MIXED):
        raise RingMismatchError(f"expected mixed (x) mixed, got {t.rings}")
    out = RationalExpr({}, RationalBasis.MIXED)
    for (left, right), c in t.terms.items():
        out = out + c * rational_product(RationalExpr({left: 1}), RationalExpr({right: 1}))
    return out


# -- the J and K series -------------------------------------------------------

def cauchy_series(kind: str, cutoff: int) -> RationalExpr:
    """``J = sum (-1)^|z| {z} (x) {z'}-bar`` or ``K = sum {z} (x) {z}-bar``, slots of weight <= cutoff."""
    if kind not in ("J", "K"):
        raise ValueError("kind must be 'J' or 'K'")
    terms = {}
    for z in partitions_up_to(cutoff):
        if kind == "J":
            terms[(z, conjugate(z))] = (-1) ** sum(z)
        else:
            terms[(z, z)] = 1
    return RationalExpr(terms, RationalBasis.TENSOR)


def cauchy_cut_coproduct(kind: str, cutoff: int) -> TensorExpr:
    """``J'`` or ``K'`` in the tensor basis with every partition of weight <= cutoff."""
    if kind not in ("J", "K"):
        raise ValueError("kind must be 'J' or 'K'")
    out = {}
    parts = partitions_up_to(cutoff)
    for s in parts:
        for t in parts:
            if kind == "J":
                out[((s, t), (conjugate(t), conjugate(s)))] = (-1) ** (sum(s) + sum(t))
            else:
                out[((s, t), (t, s))] = 1
    return TensorExpr(out, (RationalBasis.TENSOR, RationalBasis.TENSOR))
