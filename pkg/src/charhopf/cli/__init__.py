"""Command line front end: expression syntax, evaluation and rendering."""

from .evaluate import Context, evaluate
from .main import main
from .syntax import parse, to_text

__all__ = ["Context", "evaluate", "main", "parse", "to_text"]
