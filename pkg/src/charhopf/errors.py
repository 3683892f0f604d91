"""Exception hierarchy shared by the library and the command line front end."""

from __future__ import annotations


class CharHopfError(Exception):
    """Base class for every error raised by :mod:`charhopf`."""


class RingMismatchError(CharHopfError, TypeError):
    """Operands live in different character rings (or bases)."""


class CutoffError(CharHopfError, ValueError):
    """A truncated computation was asked for more than its inputs guarantee."""


class ModificationRuleRequired(CharHopfError, ValueError):
    """Evaluation outside the stable range would need finite-rank modification rules."""


class EvaluationError(CharHopfError, ValueError):
    """Numeric specialisation failed (zero eigenvalue, degenerate alternant, ...)."""


class ParseError(CharHopfError, ValueError):
    """Syntax error in a textual expression; ``offset`` is 0-based."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")
