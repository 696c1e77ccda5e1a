"""Centered discretisation of the position axis.

A grid has an odd dimension D = 2N+1 with rows labelled by the signed index
n in {-N, ..., +N}; row n samples the position q_n = l*n where l is the grid
spacing.  The middle row (n = 0) is the origin.  Grids are immutable and carry
the boundary rule used when operator bands are truncated to finite size.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ModeError, ValidationError
from .scalars import ComplexRational, NumericMode, Scalar, coerce


class Boundary(Enum):
    OPEN = "open"
    PERIODIC = "periodic"


def as_rational(value) -> Fraction:
    """Parse an exact rational from ints, Fractions, or 'p/q' / decimal strings.

    Decimal strings convert exactly (a decimal is a rational with a
    power-of-ten denominator); floats are rejected to keep exactness explicit.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational number: {value!r}") from exc
    raise ValidationError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class Grid:
    """Half-width N, exact spacing, boundary rule, and the action scale hbar."""

    half_width: int
    spacing: Fraction = Fraction(1)
    boundary: Boundary = Boundary.OPEN
    hbar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "spacing", as_rational(self.spacing))
        object.__setattr__(self, "hbar", as_rational(self.hbar))
        if not isinstance(self.half_width, int) or self.half_width < 1:
            raise ValidationError(f"half_width must be a positive integer, got {self.half_width!r}")
        if self.spacing <= 0:
            raise ValidationError(f"spacing must be positive, got {self.spacing}")
        if self.hbar <= 0:
            raise ValidationError(f"hbar must be positive, got {self.hbar}")
        if not isinstance(self.boundary, Boundary):
            raise ValidationError(f"boundary must be a Boundary, got {self.boundary!r}")

    @property
    def dim(self) -> int:
        return 2 * self.half_width + 1

    def indices(self) -> range:
        """Signed row indices -N..+N, in row order."""
        return range(-self.half_width, self.half_width + 1)

    def position(self, n: int) -> Fraction:
        """q_n = spacing * n, exact."""
        if abs(n) > self.half_width:
            raise ValidationError(f"row index {n} outside [-{self.half_width}, {self.half_width}]")
        return self.spacing * n


def grid_new(half_width: int, spacing=1, boundary: Boundary = Boundary.OPEN, hbar=1) -> Grid:
    """Construct a validated grid (thin functional alias for Grid(...))."""
    return Grid(half_width, spacing, boundary, hbar)


class WaveVector:
    """Samples of a wavefunction on a grid: entry at row n is psi(l*n)."""

    __slots__ = ("grid", "mode", "entries")

    def __init__(self, grid: Grid, entries: Sequence[Scalar], mode: NumericMode):
        entries = tuple(coerce(e, mode) for e in entries)
        if len(entries) != grid.dim:
            raise ValidationError(
                f"wavevector has {len(entries)} entries, grid dimension is {grid.dim}"
            )
        self.grid = grid
        self.mode = mode
        self.entries = entries

    def entry(self, n: int) -> Scalar:
        """Value at signed row index n."""
        if abs(n) > self.grid.half_width:
            raise ValidationError(f"row index {n} out of range")
        return self.entries[n + self.grid.half_width]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, WaveVector):
            return NotImplemented
        return (
            self.mode is other.mode
            and self.grid.dim == other.grid.dim
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"WaveVector(dim={self.grid.dim}, mode={self.mode.value})"

    def to_float(self) -> "WaveVector":
        if self.mode is NumericMode.FLOAT:
            return self
        return WaveVector(self.grid, [e.to_complex() for e in self.entries], NumericMode.FLOAT)


def sample(f: Callable, grid: Grid, mode: NumericMode = NumericMode.EXACT) -> WaveVector:
    """Sample f at every grid point, entry n = f(l*n).

    In exact mode f receives a Fraction and must return an exact value (int,
    Fraction, or ComplexRational); a float result raises ModeError.  In float
    mode f receives a float.
    """
    values = []
    for n in grid.indices():
        q = grid.position(n)
        if mode is NumericMode.EXACT:
            value = f(q)
            if not isinstance(value, (int, Fraction, ComplexRational)):
                raise ModeError(
                    f"f({q}) returned {type(value).__name__}; exact sampling needs "
                    "rational-valued functions (use float mode instead)"
                )
        else:
            value = f(float(q))
        values.append(coerce(value, mode))
    return WaveVector(grid, values, mode)
