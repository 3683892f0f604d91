"""Expression syntax: tokenizer, recursive-descent parser and printer.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | INT factor | atom
    atom    := '{' part (';' | '|' part)? '}'        GL, mixed, tensor-basis rational
             | '[' part ']' ['*']                    O, dual O
             | '<' part '>' ['*']                    Sp, dual Sp (also the Unicode angle brackets)
             | ('p' | 'h' | 'e') ['_'] INT           power sum, complete, elementary
             | SERIES                                one of A B C D E F G H L M P Q
             | '(' expr ')'
    part    := INT (',' INT)* | empty

A ``*`` directly after a closing ``]`` or ``>`` is the dual marker unless the
next non-blank character starts an operand, so ``[1]*[1]`` is a product and
``[1]* + [2]*`` is a sum of dual atoms; write ``[1]* * [1]*`` for a dual product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import ParseError
from ..partitions import Partition, fmt, make_partition

SERIES_LETTERS = frozenset("ABCDEFGHLMPQ")
FAMILIES = frozenset("phe")

# -- abstract syntax -----------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """A basis element; ``ring`` is one of GL, O, Sp, O*, Sp*."""

    ring: str
    partition: Partition


@dataclass(frozen=True)
class PairAtom:
    """Rational character; ``basis`` is ``mixed`` (``;``) or ``tensor`` (``|``)."""

    basis: str
    left: Partition
    right: Partition


@dataclass(frozen=True)
class Family:
    family: str
    n: int


@dataclass(frozen=True)
class Series:
    letter: str


@dataclass(frozen=True)
class Scaled:
    factor: int
    operand: "Node"


@dataclass(frozen=True)
class Sum:
    items: tuple["Node", ...]


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Skew:
    left: "Node"
    right: "Node"


Node = Union[Atom, PairAtom, Family, Series, Scaled, Sum, Product, Skew]

_OPEN = {"{": "}", "[": "]", "<": ">", "⟨": "⟩"}
_RING_OF = {"[": "O", "<": "Sp", "⟨": "Sp"}


def scale(k: int, node: Node) -> Node:
    """Canonical scaling: nested factors fold, a factor of 1 disappears."""
    if isinstance(node, Scaled):
        k, node = k * node.factor, node.operand
    return node if k == 1 else Scaled(k, node)


# -- parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def starts_operand(self, ch: str) -> bool:
        return ch.isdigit() or ch in _OPEN or ch == "(" or ch in FAMILIES or ch in SERIES_LETTERS

    def parse(self) -> Node:
        if not self.peek():
            raise self.error("empty expression")
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self) -> Node:
        items = [self.term()]
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            items.append(scale(-1, t) if op == "-" else t)
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def term(self) -> Node:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            right = self.factor()
            node = Product(node, right) if op == "*" else Skew(node, right)
        return node

    def factor(self) -> Node:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return scale(-1, self.factor())
        if ch.isdigit():
            k = self.integer()
            if not self.starts_operand(self.peek()):
                raise self.error("a scalar must be followed by an operand")
            return scale(k, self.factor())
        return self.atom()

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def partition(self, closers: str) -> Partition:
        start = self.pos
        parts: list[int] = []
        if self.peek() in closers:
            return ()
        while True:
            parts.append(self.integer())
            if self.peek() != ",":
                break
            self.pos += 1
        try:
            return make_partition(parts)
        except ValueError as exc:
            raise self.error(str(exc), start) from None

    def dual_marker(self) -> bool:
        self.skip()
        if self.pos < len(self.text) and self.text[self.pos] == "*":
            save = self.pos
            self.pos += 1
            if not self.starts_operand(self.peek()):
                return True
            self.pos = save
        return False

    def atom(self) -> Node:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.take(")")
            return node
        if ch == "{":
            self.pos += 1
            left = self.partition("};|")
            sep = self.peek()
            if sep in (";", "|"):
                self.pos += 1
                right = self.partition("}")
                self.take("}")
                return PairAtom("mixed" if sep == ";" else "tensor", left, right)
            self.take("}")
            return Atom("GL", left)
        if ch in _RING_OF:
            self.pos += 1
            lam = self.partition(_OPEN[ch])
            self.take(_OPEN[ch])
            ring = _RING_OF[ch]
            if self.dual_marker():
                ring += "*"
            return Atom(ring, lam)
        if ch in FAMILIES:
            self.pos += 1
            if self.peek() == "_":
                self.pos += 1
            if not self.peek().isdigit():
                raise self.error(f"expected a degree after {ch!r}")
            n = self.integer()
            if n < 1:
                raise self.error("degree must be positive", start)
            return Family(ch, n)
        if ch in SERIES_LETTERS:
            self.pos += 1
            nxt = self.text[self.pos] if self.pos < len(self.text) else ""
            if nxt.isalnum():
                raise self.error("a series is a single letter", start)
            return Series(ch)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {ch!r}")


def parse(text: str) -> Node:
    """Parse ``text``; raises :class:`ParseError` with a 0-based offset."""
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------------

_CLOSE = {"GL": ("{", "}"), "O": ("[", "]"), "Sp": ("<", ">"), "O*": ("[", "]*"), "Sp*": ("<", ">*")}


def _is_primary(node: Node) -> bool:
    return isinstance(node, (Atom, PairAtom, Family, Series))


def to_text(node: Node) -> str:
    """Print ``node`` so that ``parse(to_text(node)) == node``."""
    if isinstance(node, Atom):
        lo, hi = _CLOSE[node.ring]
        return f"{lo}{fmt(node.partition)}{hi}"
    if isinstance(node, PairAtom):
        sep = ";" if node.basis == "mixed" else "|"
        return "{" + fmt(node.left) + sep + fmt(node.right) + "}"
    if isinstance(node, Family):
        return f"{node.family}{node.n}"
    if isinstance(node, Series):
        return node.letter
    if isinstance(node, Scaled):
        inner = to_text(node.operand)
        if not _is_primary(node.operand):
            inner = f"({inner})"
        if node.factor == -1:
            return f"-{inner}"
        return f"{node.factor}{inner}"
    if isinstance(node, Sum):
        out = [_sum_item(node.items[0])]
        for item in node.items[1:]:
            if isinstance(item, Scaled) and item.factor < 0:
                out.append("- " + _sum_item(scale(-1, item)))
            else:
                out.append("+ " + _sum_item(item))
        return " ".join(out)
    if isinstance(node, (Product, Skew)):
        left = to_text(node.left)
        if isinstance(node.left, Sum) or (isinstance(node.left, Scaled) and not _is_primary(node.left.operand)):
            left = f"({left})"
        right = to_text(node.right)
        if not _is_primary(node.right):
            right = f"({right})"
        op = "*" if isinstance(node, Product) else "/"
        gap = " " if left.endswith("*") else ""
        return f"{left}{gap}{op}{gap}{right}"
    raise TypeError(f"not a syntax node: {node!r}")


def _sum_item(node: Node) -> str:
    text = to_text(node)
    return f"({text})" if isinstance(node, Sum) else text
