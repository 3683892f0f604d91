"""Text and JSON rendering of results."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any

from ..expr import DualExpr, LinearCombination, RationalExpr, SymExpr, TensorExpr


def _tag(tag: Any) -> Any:
    if isinstance(tag, tuple):
        return [str(t) for t in tag]
    return str(tag)


def _label(key: Any) -> list:
    if key and isinstance(key[0], tuple):
        return [_label(k) for k in key]
    return list(key)


def records(value: LinearCombination) -> list[dict]:
    out = []
    for key, c in value.leading_first():
        if isinstance(value, (SymExpr, DualExpr)):
            rec: dict[str, Any] = {"coefficient": c, "partition": list(key), "ring": str(value.ring)}
            if isinstance(value, DualExpr):
                rec["cutoff"] = value.cutoff
        elif isinstance(value, RationalExpr):
            rec = {"coefficient": c, "partitions": [list(key[0]), list(key[1])], "ring": str(value.basis)}
        elif isinstance(value, TensorExpr):
            rec = {"coefficient": c, "partitions": [_label(key[0]), _label(key[1])], "ring": _tag(value.rings)}
        else:  # pragma: no cover - every expression type is handled above
            raise TypeError(type(value).__name__)
        out.append(rec)
    return out


def format_scalar(v: Any) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(v) if isinstance(v, float) else str(v)


def render(value: Any, as_json: bool) -> str:
    if isinstance(value, LinearCombination):
        if as_json:
            return json.dumps(records(value))
        return str(value)
    text = format_scalar(value)
    if as_json:
        return json.dumps({"value": text})
    return text


def schema() -> dict:
    """The JSON schema every ``--json`` output validates against."""
    return json.loads(resources.files("charhopf.cli").joinpath("output.schema.json").read_text())
