"""Symmetry breaking for ground answer set programs in smodels format."""

from ._core import (
    BreakResult,
    BudgetExceeded,
    ParseError,
    Program,
    answer_sets,
    break_symmetries,
    detect,
    parse,
)

__all__ = [
    "BreakResult",
    "BudgetExceeded",
    "ParseError",
    "Program",
    "answer_sets",
    "break_symmetries",
    "detect",
    "parse",
]
