"""The position, symmetric-difference derivative, and momentum matrices.

Position is diagonal with entry l*n at row n.  The derivative acts as
(d psi)_n = (psi_{n+1} - psi_{n-1}) / (2 l): +1/(2l) on the superdiagonal and
-1/(2l) on the subdiagonal, zero diagonal, which makes it real and
antisymmetric.  Momentum is defined as p = +i*hbar*d, which is Hermitian.

With an open boundary the band is truncated at the edge rows; with a periodic
boundary the two wrap-around corners carry the band across the seam and the
derivative becomes circulant.
"""

from __future__ import annotations

from fractions import Fraction

from .banded import BandedMatrix
from .grid import Boundary, Grid
from .scalars import ComplexRational, NumericMode


def build_position(grid: Grid, mode: NumericMode = NumericMode.EXACT) -> BandedMatrix:
    """Diagonal matrix of the grid positions q_n = l*n (boundary-independent)."""
    values = [grid.position(n) for n in grid.indices()]
    if mode is NumericMode.FLOAT:
        values = [float(v) for v in values]
    return BandedMatrix(grid.dim, {0: values}, grid.boundary, mode)


def build_derivative(grid: Grid, mode: NumericMode = NumericMode.EXACT) -> BandedMatrix:
    """Symmetric-difference derivative: real, antisymmetric, zero diagonal."""
    dim = grid.dim
    step = Fraction(1, 2) / grid.spacing
    if mode is NumericMode.FLOAT:
        step = float(step)
    up = [step] * dim
    down = [-step] * dim
    if grid.boundary is Boundary.OPEN:
        up[dim - 1] = 0        # row +N has no right neighbour
        down[0] = 0            # row -N has no left neighbour
    return BandedMatrix(dim, {1: up, -1: down}, grid.boundary, mode)


def build_momentum(grid: Grid, mode: NumericMode = NumericMode.EXACT) -> BandedMatrix:
    """p = i*hbar times the derivative matrix; Hermitian in both boundary modes."""
    if mode is NumericMode.EXACT:
        factor = ComplexRational(0, grid.hbar)
    else:
        factor = 1j * float(grid.hbar)
    return build_derivative(grid, mode) * factor
