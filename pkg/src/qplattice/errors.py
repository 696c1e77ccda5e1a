"""Exception hierarchy shared by the whole package.

Everything user-facing derives from :class:`LatticeError` so callers (and the
CLI) can distinguish bad input from an internal bug with one except clause.
"""


class LatticeError(Exception):
    """Base class for all errors raised on invalid input or usage."""


class ValidationError(LatticeError):
    """A precondition on grids, matrices, or configuration was violated."""


class ModeError(LatticeError):
    """Exact and floating-point values were mixed, or exactness is impossible."""


class ParseError(LatticeError):
    """Syntax error in a wavefunction expression; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class EvaluationError(LatticeError):
    """Arithmetic failure while evaluating an expression (e.g. division by zero)."""
