"""``charhopf`` command line.

Exit status: 0 success, 2 parse or usage error, 3 semantic error (ring
mismatch, missing or insufficient cutoff), 4 evaluation error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .. import classical, dual, rational, series
from ..errors import (
    CutoffError,
    EvaluationError,
    ModificationRuleRequired,
    ParseError,
    RingMismatchError,
)
from ..expr import DualExpr, RationalExpr, Ring, SymExpr
from ..numeric import EigenvalueSpec, GroupKind, char_value, rational_char_value
from .evaluate import Context, evaluate, multiply
from .render import render
from .syntax import parse

EXIT_PARSE, EXIT_SEMANTIC, EXIT_EVAL = 2, 3, 4


def _ring(text: str) -> Ring:
    aliases = {"gl": Ring.GL, "o": Ring.O, "sp": Ring.SP, "o*": Ring.O_DUAL, "sp*": Ring.SP_DUAL}
    try:
        return aliases[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown ring {text!r}; expected GL, O, Sp, O* or Sp*") from None


def _cutoff(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("cutoff must be non-negative")
    return n


def _values(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON records instead of text")
    common.add_argument("--ring", type=_ring, help="ring for p/h/e atoms (default: inferred, else GL)")
    common.add_argument("--cutoff", type=_cutoff, help="weight cutoff for infinite results")

    p = argparse.ArgumentParser(prog="charhopf", description="Hopf algebras of classical group characters.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, n_expr: int = 1):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if n_expr == 1:
            sp.add_argument("expr")
        elif n_expr == 2:
            sp.add_argument("left")
            sp.add_argument("right")
        return sp

    sp = sub.add_parser("prod", parents=[common], help="evaluate and multiply expressions")
    sp.add_argument("exprs", nargs="+")
    add("coprod", "coproduct of an expression")
    sp = add("branch", "convert between the GL, O and Sp bases")
    sp.add_argument("--to", type=_ring, required=True)
    add("antipode", "antipode of an expression")
    add("counit", "counit of an expression")
    add("scalar", "scalar product of two expressions", 2)
    add("foulkes", "Foulkes derivative LEFT^perp(RIGHT)", 2)
    add("adjoint", "adjoint of multiplication LEFT^dagger(RIGHT)", 2)
    sp = sub.add_parser("series", parents=[common], help="terms or cut coproduct of a series")
    sp.add_argument("letter")
    sp.add_argument("--coproduct", action="store_true", help="print the cut coproduct instead")
    sp = add("dual", "operations in the dual rings O* and Sp* (needs --cutoff)", 0)
    sp.add_argument("op", choices=["eval", "coprod", "antipode", "counit", "to-gl", "unit"])
    sp.add_argument("expr", help="starred expression, or the ring O* / Sp* for 'unit'")
    sp = add("rational", "operations on rational characters", 0)
    sp.add_argument("op", choices=["eval", "coprod", "antipode", "counit", "to-tensor", "to-mixed"])
    sp.add_argument("expr")
    sp = add("eval", "evaluate on explicit eigenvalues")
    sp.add_argument("--group", required=True, help=", ".join(k.cli_name for k in GroupKind))
    sp.add_argument("--rank", type=int)
    sp.add_argument("--x", type=_values, default=[], help="comma separated eigenvalues")
    sp.add_argument("--float", action="store_true", help="use floating point arithmetic")
    sp.add_argument("--method", choices=["combinatorial", "alternant"], default="combinatorial")
    return p


def _expr(text: str, args: argparse.Namespace):
    return evaluate(parse(text), Context(args.ring, args.cutoff))


def _require_cutoff(args: argparse.Namespace) -> int:
    if args.cutoff is None:
        raise CutoffError("this operation needs an explicit --cutoff")
    return args.cutoff


def run(args: argparse.Namespace):
    cmd = args.command
    if cmd == "prod":
        values = [_expr(t, args) for t in args.exprs]
        acc = values[0]
        for v in values[1:]:
            acc = multiply(acc, v, Context(args.ring, args.cutoff))
        return acc
    if cmd == "series":
        cutoff = _require_cutoff(args)
        if args.coproduct:
            return series.series_cut_coproduct(args.letter, cutoff)
        return series.series_terms(args.letter, cutoff).body
    if cmd == "dual":
        return _run_dual(args)
    if cmd == "rational":
        return _run_rational(args)
    if cmd == "eval":
        return _run_eval(args)
    if cmd in ("scalar", "foulkes", "adjoint"):
        left, right = _expr(args.left, args), _expr(args.right, args)
        if cmd == "scalar":
            if isinstance(left, RationalExpr):
                return rational.rational_scalar(left, right)
            if isinstance(left, DualExpr):
                return dual.pairing(left, right)
            if isinstance(right, DualExpr):
                return dual.pairing(right, left)
            return classical.scalar(left, right)
        _need_symexpr(left, right)
        return classical.foulkes(left, right) if cmd == "foulkes" else classical.adjoint_mult(left, right)

    value = _expr(args.expr, args)
    if isinstance(value, DualExpr):
        return _dual_op(cmd, value, args)
    if isinstance(value, RationalExpr):
        return _rational_op(cmd, value)
    if cmd == "coprod":
        return classical.coproduct(value)
    if cmd == "branch":
        if args.to in (Ring.O_DUAL, Ring.SP_DUAL):
            return dual.gl_to_dual(classical.to_gl(value), args.to, _require_cutoff(args))
        return classical.convert(value, args.to)
    if cmd == "antipode":
        return classical.antipode(value)
    if cmd == "counit":
        return classical.counit(value)
    raise AssertionError(cmd)  # pragma: no cover


def _need_symexpr(*values) -> None:
    for v in values:
        if not isinstance(v, SymExpr):
            raise RingMismatchError("foulkes and adjoint act on GL, O or Sp expressions")


def _dual_op(cmd: str, value: DualExpr, args: argparse.Namespace):
    if cmd == "counit":
        return dual.dual_counit(value)
    cutoff = _require_cutoff(args)
    if cmd == "coprod":
        return dual.dual_coproduct(value, cutoff)
    if cmd == "antipode":
        return dual.dual_antipode(value, cutoff)
    if cmd == "branch":
        if args.to is not Ring.GL:
            raise RingMismatchError("dual expressions branch only to GL")
        return dual.dual_to_gl(value, cutoff)
    raise RingMismatchError(f"{cmd} is not defined on dual expressions")


def _run_dual(args: argparse.Namespace):
    cutoff = _require_cutoff(args)
    if args.op == "unit":
        try:
            ring = _ring(args.expr)
        except argparse.ArgumentTypeError as exc:
            raise RingMismatchError(str(exc)) from None
        return dual.dual_unit(ring, cutoff)
    value = _expr(args.expr, args)
    if not isinstance(value, DualExpr):
        raise RingMismatchError("the dual subcommand needs a starred expression such as [2,1]*")
    if args.op == "eval":
        return value
    if args.op == "to-gl":
        return dual.dual_to_gl(value, cutoff)
    return _dual_op(args.op, value, args)


def _rational_op(cmd: str, value: RationalExpr):
    if cmd == "coprod":
        return rational.rational_coproduct(rational.to_mixed(value))
    if cmd == "antipode":
        return rational.rational_antipode(rational.to_mixed(value))
    if cmd == "counit":
        return rational.rational_counit(rational.to_mixed(value))
    raise RingMismatchError(f"{cmd} is not defined on rational expressions")


def _run_rational(args: argparse.Namespace):
    value = _expr(args.expr, args)
    if not isinstance(value, RationalExpr):
        raise RingMismatchError("the rational subcommand needs an expression such as {2,1;1}")
    if args.op == "eval":
        return rational.to_mixed(value)
    if args.op == "to-tensor":
        return rational.to_basis(value, "tensor")
    if args.op == "to-mixed":
        return rational.to_mixed(value)
    return _rational_op(args.op, value)


def _run_eval(args: argparse.Namespace):
    try:
        kind = GroupKind.parse(args.group)
    except ValueError as exc:
        raise EvaluationError(str(exc)) from None
    xs = [float(x) if args.float else x for x in args.x]
    value = _expr(args.expr, args)
    if isinstance(value, RationalExpr):
        if kind is not GroupKind.GL:
            raise RingMismatchError("rational characters evaluate on GL(N) only")
        return rational_char_value(value, xs, args.method)
    try:
        spec = EigenvalueSpec.build(kind, xs, args.rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise EvaluationError(str(exc)) from None
    return char_value(value, spec, args.method)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.offset}^", file=sys.stderr)
        return EXIT_PARSE
    except (ModificationRuleRequired, EvaluationError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (RingMismatchError, CutoffError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    print(render(result, args.json))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
