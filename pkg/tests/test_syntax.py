import random

import pytest

from charhopf.cli.syntax import (
    Atom,
    Family,
    PairAtom,
    Product,
    Scaled,
    Series,
    Skew,
    Sum,
    parse,
    scale,
    to_text,
)
from charhopf.errors import ParseError
from charhopf.partitions import partitions_up_to

LABELS = partitions_up_to(4)
RINGS = ["GL", "O", "Sp", "O*", "Sp*"]


def random_leaf(rng):
    pick = rng.random()
    if pick < 0.5:
        return Atom(rng.choice(RINGS), rng.choice(LABELS))
    if pick < 0.7:
        return PairAtom(rng.choice(["mixed", "tensor"]), rng.choice(LABELS), rng.choice(LABELS))
    if pick < 0.85:
        return Family(rng.choice("phe"), rng.randint(1, 12))
    return Series(rng.choice("ABCDEFGHLMPQ"))


def random_node(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return random_leaf(rng)
    kind = rng.choice(["sum", "product", "skew", "scaled"])
    if kind == "sum":
        return Sum(tuple(random_node(rng, depth - 1) for _ in range(rng.randint(2, 3))))
    if kind == "scaled":
        return scale(rng.choice([-3, -2, -1, 2, 7]), random_node(rng, depth - 1))
    cls = Product if kind == "product" else Skew
    return cls(random_node(rng, depth - 1), random_node(rng, depth - 1))


def test_round_trip_corpus():
    rng = random.Random(2024)
    for _ in range(1000):
        node = random_node(rng, 4)
        text = to_text(node)
        assert parse(text) == node, text


@pytest.mark.parametrize("text, node", [
    ("[1]*[1]", Product(Atom("O", (1,)), Atom("O", (1,)))),
    ("{2,1}/C", Skew(Atom("GL", (2, 1)), Series("C"))),
    ("[2,1]*", Atom("O*", (2, 1))),
    ("[1]* + [2]*", Sum((Atom("O*", (1,)), Atom("O*", (2,))))),
    ("[1]* * [1]*", Product(Atom("O*", (1,)), Atom("O*", (1,)))),
    ("{2,1;1}", PairAtom("mixed", (2, 1), (1,))),
    ("{1|1}", PairAtom("tensor", (1,), (1,))),
    ("⟨1,1⟩", Atom("Sp", (1, 1))),
    ("<>", Atom("Sp", ())),
    ("p_3", Family("p", 3)),
    ("2{1} - 3[0]", Sum((Scaled(2, Atom("GL", (1,))), Scaled(-3, Atom("O", ()))))),
    ("-(-{1})", Atom("GL", (1,))),
])
def test_parse_examples(text, node):
    assert parse(text) == node


@pytest.mark.parametrize("text, offset", [
    ("[1,1", 4),
    ("", 0),
    ("{1,2}", 1),
    ("{1} +", 5),
    ("3", 1),
    ("AB", 0),
    ("p", 1),
    ("{1} )", 4),
])
def test_parse_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
