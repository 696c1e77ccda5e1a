"""Finite-dimensional position/momentum matrices on a centered grid.

The package builds the diagonal position matrix q and the symmetric-difference
momentum matrix p = i*hbar*d over exact rational (or floating-point) scalars,
computes their products and commutator exactly, and quantifies how the
commutator differs from i*hbar times the identity: it is the traceless
neighbour-averaging matrix (i*hbar/2) * (sub- + super-diagonal ones), which
converges to i*hbar*1 at second order as the grid spacing shrinks.
"""

from .banded import (
    BandedMatrix,
    antisymmetry_deviation,
    apply,
    commutator,
    hermitian_deviation,
    identity_scaled,
    matmul,
    trace,
)
from .errors import (
    EvaluationError,
    LatticeError,
    ModeError,
    ParseError,
    ValidationError,
)
from .grid import Boundary, Grid, WaveVector, as_rational, grid_new, sample
from .operators import build_derivative, build_momentum, build_position
from .scalars import ComplexRational, NumericMode, magnitude, to_float

__all__ = [
    "BandedMatrix",
    "Boundary",
    "ComplexRational",
    "EvaluationError",
    "Grid",
    "LatticeError",
    "ModeError",
    "NumericMode",
    "ParseError",
    "ValidationError",
    "WaveVector",
    "antisymmetry_deviation",
    "apply",
    "as_rational",
    "build_derivative",
    "build_momentum",
    "build_position",
    "commutator",
    "grid_new",
    "hermitian_deviation",
    "identity_scaled",
    "magnitude",
    "matmul",
    "sample",
    "to_float",
    "trace",
]

__version__ = "0.1.0"
