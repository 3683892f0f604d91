"""Sparse integer linear combinations over partition labels.

Every value is immutable: a frozen mapping from labels to nonzero Python
integers plus a tag saying which basis the labels refer to.  Arithmetic
between values with different tags raises :class:`RingMismatchError`; there
is no implicit coercion.
"""

from __future__ import annotations

import enum
from types import MappingProxyType
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

from .errors import CutoffError, RingMismatchError
from .partitions import Partition, fmt, make_partition, sort_key


class Ring(str, enum.Enum):
    GL = "GL"
    O = "O"
    SP = "Sp"
    O_DUAL = "O*"
    SP_DUAL = "Sp*"

    def __str__(self) -> str:
        return self.value


class RationalBasis(str, enum.Enum):
    MIXED = "mixed"
    TENSOR = "tensor"

    def __str__(self) -> str:
        return self.value


_BRACKETS = {
    Ring.GL: ("{", "}"),
    Ring.O: ("[", "]"),
    Ring.SP: ("<", ">"),
    Ring.O_DUAL: ("[", "]*"),
    Ring.SP_DUAL: ("<", ">*"),
}


def key_weight(key: Any) -> int:
    """Weight of a label: a partition, or a nested pair of partitions."""
    if not key:
        return 0
    if isinstance(key[0], tuple):
        return sum(key_weight(k) for k in key)
    return sum(key)


def key_order(key: Any) -> tuple:
    if key and isinstance(key[0], tuple):
        return (key_weight(key),) + tuple(key_order(k) for k in key)
    return sort_key(key)


def print_order(key: Any) -> tuple:
    """Heaviest first, reverse lexicographic within a weight, slot by slot for pairs."""
    if key and isinstance(key[0], tuple):
        return (-key_weight(key),) + tuple(print_order(k) for k in key)
    return (-sum(key), tuple(-p for p in key) + (0,))


def accumulate(out: dict, key: Hashable, coeff: int) -> None:
    """``out[key] += coeff`` dropping zeros."""
    v = out.get(key, 0) + coeff
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def format_terms(items: Iterable[tuple[Any, int]], atom: Callable[[Any], str]) -> str:
    parts: list[str] = []
    for key, c in items:
        a = atom(key)
        mag = abs(c)
        body = a if mag == 1 else f"{mag}{a}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


class LinearCombination:
    """Shared behaviour of all sparse expression types."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Any, int] | Iterable[tuple[Any, int]] = ()):
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            accumulate(clean, self._canon(key), int(c))
        self._terms = MappingProxyType(clean)
        self._hash: int | None = None

    # -- hooks for subclasses -------------------------------------------------
    @staticmethod
    def _canon(key: Any) -> Any:
        return key

    def _tag(self) -> Hashable:
        raise NotImplementedError

    def _new(self, terms: Mapping[Any, int]) -> LinearCombination:
        raise NotImplementedError

    def _atom(self, key: Any) -> str:
        raise NotImplementedError

    # -- mapping protocol -----------------------------------------------------
    @property
    def terms(self) -> Mapping[Any, int]:
        return self._terms

    def coefficient(self, key: Any) -> int:
        return self._terms.get(self._canon(key), 0)

    def __getitem__(self, key: Any) -> int:
        return self.coefficient(key)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Any, int]]:
        """Terms in graded reverse-lexicographic order, lightest first."""
        return sorted(self._terms.items(), key=lambda kv: key_order(kv[0]))

    def __iter__(self) -> Iterator[tuple[Any, int]]:
        return iter(self.items())

    def leading_first(self) -> list[tuple[Any, int]]:
        """Terms heaviest first, reverse lexicographic within a weight; the print order."""
        return sorted(self._terms.items(), key=lambda kv: print_order(kv[0]))

    @property
    def max_weight(self) -> int:
        return max((key_weight(k) for k in self._terms), default=0)

    def truncate(self, max_weight: int):
        return self._new({k: c for k, c in self._terms.items() if key_weight(k) <= max_weight})

    def map_terms(self, fn: Callable[[Any, int], Mapping[Any, int]]) -> dict:
        out: dict = {}
        for key, c in self._terms.items():
            for k2, c2 in fn(key, c).items():
                accumulate(out, k2, c2)
        return out

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: LinearCombination) -> None:
        if type(self) is not type(other) or self._tag() != other._tag():
            raise RingMismatchError(
                f"cannot combine {type(self).__name__}[{self._tag()}] "
                f"with {type(other).__name__}[{other._tag()}]"
            )

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(out, k, c)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, n: int):
        return self._new({k: n * c for k, c in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return (
            type(self) is type(other)
            and self._tag() == other._tag()
            and dict(self._terms) == dict(other._terms)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._tag(), frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self.leading_first(), self._atom)

    def __repr__(self) -> str:
        return f"{type(self).__name__}[{self._tag()}]({self})"


class SymExpr(LinearCombination):
    """Element of one of the character rings, written in its bracket basis.

    ``ring`` is :attr:`Ring.GL` for Schur functions ``{lam}``, :attr:`Ring.O`
    for orthogonal characters ``[lam]`` and :attr:`Ring.SP` for symplectic
    characters ``<lam>``.
    """

    __slots__ = ("ring",)

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = (),
                 ring: Ring | str = Ring.GL):
        self.ring = Ring(ring)
        super().__init__(terms)

    @staticmethod
    def _canon(key: Any) -> Partition:
        return make_partition(key)

    def _tag(self) -> Hashable:
        return self.ring

    def _new(self, terms):
        return SymExpr(terms, self.ring)

    def _atom(self, key: Partition) -> str:
        lo, hi = _BRACKETS[self.ring]
        return f"{lo}{fmt(key)}{hi}"

    @classmethod
    def basis(cls, lam: Iterable[int], ring: Ring | str = Ring.GL) -> SymExpr:
        return cls({tuple(lam): 1}, ring)

    @classmethod
    def one(cls, ring: Ring | str = Ring.GL) -> SymExpr:
        return cls({(): 1}, ring)

    @classmethod
    def zero(cls, ring: Ring | str = Ring.GL) -> SymExpr:
        return cls({}, ring)

    def with_ring(self, ring: Ring | str) -> SymExpr:
        """Relabel the same coefficients in another bracket basis (no conversion)."""
        return SymExpr(self._terms, ring)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            from . import classical

            return classical.product(self, other)
        return super().__mul__(other)


CharExpr = SymExpr


def _min_cutoff(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class DualExpr(LinearCombination):
    """Element of a dual character ring in the starred basis.

    ``cutoff`` is the weight up to which the stored terms are exact; ``None``
    marks a finite expression that is exact as it stands.  Terms above the
    cutoff are dropped on construction.
    """

    __slots__ = ("ring", "cutoff")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = (),
                 ring: Ring | str = Ring.O_DUAL, cutoff: int | None = None):
        self.ring = Ring(ring)
        if self.ring not in (Ring.O_DUAL, Ring.SP_DUAL):
            raise RingMismatchError(f"dual expressions live in O* or Sp*, not {self.ring}")
        if cutoff is not None and cutoff < 0:
            raise CutoffError("cutoff must be non-negative")
        self.cutoff = cutoff
        super().__init__(terms)
        if cutoff is not None:
            self._terms = MappingProxyType(
                {k: c for k, c in self._terms.items() if sum(k) <= cutoff}
            )

    @staticmethod
    def _canon(key: Any) -> Partition:
        return make_partition(key)

    def _tag(self) -> Hashable:
        return self.ring

    def _new(self, terms):
        return DualExpr(terms, self.ring, self.cutoff)

    def _atom(self, key: Partition) -> str:
        lo, hi = _BRACKETS[self.ring]
        return f"{lo}{fmt(key)}{hi}"

    @classmethod
    def basis(cls, lam: Iterable[int], ring: Ring | str = Ring.O_DUAL) -> DualExpr:
        return cls({tuple(lam): 1}, ring)

    def with_cutoff(self, cutoff: int | None) -> DualExpr:
        if cutoff is not None and self.cutoff is not None and cutoff > self.cutoff:
            raise CutoffError(f"expression is only exact up to weight {self.cutoff}, asked for {cutoff}")
        return DualExpr(self._terms, self.ring, cutoff)

    def __add__(self, other):
        if not isinstance(other, DualExpr):
            return NotImplemented
        self._check(other)
        cut = _min_cutoff(self.cutoff, other.cutoff)
        out = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(out, k, c)
        return DualExpr(out, self.ring, cut)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualExpr):
            return NotImplemented
        return super().__eq__(other) and self.cutoff == other.cutoff

    def __hash__(self) -> int:
        return hash((super().__hash__(), self.cutoff))

    def __mul__(self, other):
        if isinstance(other, DualExpr):
            from . import dual

            cut = _min_cutoff(self.cutoff, other.cutoff)
            if cut is None:
                raise CutoffError("the dual product is infinite; pass an explicit cutoff to dual_product")
            return dual.dual_product(self, other, cut)
        return super().__mul__(other)

    def __repr__(self) -> str:
        return f"DualExpr[{self.ring}, cutoff={self.cutoff}]({self})"


class TensorExpr(LinearCombination):
    """Element of a tensor square; labels are ``(left, right)`` pairs."""

    __slots__ = ("rings",)

    def __init__(self, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = (),
                 rings: tuple = (Ring.GL, Ring.GL)):
        self.rings = tuple(rings)
        super().__init__(terms)

    def _tag(self) -> Hashable:
        return self.rings

    def _new(self, terms):
        return TensorExpr(terms, self.rings)

    def _atom(self, key: tuple) -> str:
        return f"{_slot_atom(self.rings[0], key[0])}@{_slot_atom(self.rings[1], key[1])}"

    def swap(self) -> TensorExpr:
        return TensorExpr({(b, a): c for (a, b), c in self._terms.items()}, self.rings[::-1])

    def truncate_slots(self, max_weight: int) -> TensorExpr:
        """Keep terms whose slots both have weight at most ``max_weight``."""
        return self._new({
            k: c for k, c in self._terms.items()
            if key_weight(k[0]) <= max_weight and key_weight(k[1]) <= max_weight
        })

    @classmethod
    def from_pair(cls, left: LinearCombination, right: LinearCombination) -> TensorExpr:
        terms: dict = {}
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                accumulate(terms, (a, b), ca * cb)
        return cls(terms, (left._tag(), right._tag()))


def _slot_atom(tag: Any, key: Any) -> str:
    if isinstance(tag, RationalBasis):
        return RationalExpr({key: 1}, tag)._atom(key)
    lo, hi = _BRACKETS[Ring(tag)]
    return f"{lo}{fmt(key)}{hi}"


class RationalExpr(LinearCombination):
    """Element of the rational character ring; labels are ``(covariant, contravariant)``.

    In the mixed basis ``(lam, mu)`` stands for ``{lam; mu-bar}``; in the tensor
    basis it stands for ``{lam} (x) {mu-bar}``.
    """

    __slots__ = ("basis",)

    def __init__(self, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = (),
                 basis: RationalBasis | str = RationalBasis.MIXED):
        self.basis = RationalBasis(basis)
        super().__init__(terms)

    @staticmethod
    def _canon(key: Any) -> tuple[Partition, Partition]:
        lam, mu = key
        return (make_partition(lam), make_partition(mu))

    def _tag(self) -> Hashable:
        return self.basis

    def _new(self, terms):
        return RationalExpr(terms, self.basis)

    def _atom(self, key: tuple[Partition, Partition]) -> str:
        sep = ";" if self.basis is RationalBasis.MIXED else "|"
        return "{" + fmt(key[0]) + sep + fmt(key[1]) + "}"

    @classmethod
    def mixed(cls, lam: Iterable[int] = (), mu: Iterable[int] = ()) -> RationalExpr:
        return cls({(tuple(lam), tuple(mu)): 1}, RationalBasis.MIXED)

    @classmethod
    def tensor(cls, lam: Iterable[int] = (), mu: Iterable[int] = ()) -> RationalExpr:
        return cls({(tuple(lam), tuple(mu)): 1}, RationalBasis.TENSOR)

    def __mul__(self, other):
        if isinstance(other, RationalExpr):
            from . import rational

            return rational.rational_product(self, other)
        return super().__mul__(other)
