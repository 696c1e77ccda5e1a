"""Experiments on the commutator: what it equals, and what it is not.

The commutator of the momentum and position matrices is NOT i*hbar times the
identity.  Acting on a sampled wavefunction it averages the two neighbouring
samples, ([d, q] psi)_n = (psi_{n+1} + psi_{n-1}) / 2, so the difference from
i*hbar*psi is a second-difference term of size hbar * l^2 * |psi''| / 2.  This
module verifies the averaging identity exactly, reports the trace identity
(the commutator is identically traceless while i*hbar*Tr(1) = i*hbar*D grows
without bound), measures the deviation for concrete wavefunctions, and runs
the fixed-window convergence study that exhibits the second-order shrink.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .banded import BandedMatrix, commutator, identity_scaled
from .errors import ValidationError
from .grid import Boundary, Grid, WaveVector, as_rational, sample
from .operators import build_derivative, build_momentum, build_position
from .scalars import ComplexRational, NumericMode, coerce, magnitude


@dataclass(frozen=True)
class TraceParadoxReport:
    """Trace of the commutator versus the value i*hbar*D it would need."""

    dim: int
    boundary: Boundary
    trace_commutator: object          # exact complex zero in exact mode
    fallacy_value: object             # i*hbar*D
    max_deviation_from_unit: object   # max entry magnitude of [p,q] - i*hbar*1


@dataclass(frozen=True)
class ConvergenceRow:
    ell: float
    max_interior_error: float
    observed_order: Optional[float]   # log2 of successive error ratio; None on the first row


def interior_indices(grid: Grid) -> range:
    """Rows with both neighbours inside the grid (|n| < N); edge rows are reported separately."""
    return range(-grid.half_width + 1, grid.half_width)


def averaging_residual(grid: Grid, psi: WaveVector) -> WaveVector:
    """Residual of ([d, q] psi)_n against the neighbour average, row by row.

    Interior rows compare against (psi_{n+1} + psi_{n-1}) / 2.  Edge rows
    compare against the boundary-specific closed form: with an open boundary
    only the inner neighbour survives, ([d, q] psi)_{+-N} = psi_{+-(N-1)} / 2;
    with a periodic boundary the wrapped neighbour enters with the position
    jump across the seam, e.g. ([d, q] psi)_{+N} = psi_{N-1}/2 - N*psi_{-N}.
    Every entry is exactly zero in exact mode.
    """
    if psi.grid.dim != grid.dim:
        raise ValidationError(
            f"dimension mismatch: grid {grid.dim}, vector {psi.grid.dim}"
        )
    mode = psi.mode
    acted = commutator(build_derivative(grid, mode), build_position(grid, mode)).apply(psi)
    half = coerce(Fraction(1, 2), mode)
    n_max = grid.half_width
    residual = []
    for n in grid.indices():
        if abs(n) < n_max:
            expected = half * (psi.entry(n + 1) + psi.entry(n - 1))
        elif grid.boundary is Boundary.OPEN:
            expected = half * psi.entry(n - 1 if n > 0 else n + 1)
        elif n > 0:
            expected = half * psi.entry(n - 1) - n_max * psi.entry(-n_max)
        else:
            expected = half * psi.entry(n + 1) - n_max * psi.entry(n_max)
        residual.append(acted.entry(n) - expected)
    return WaveVector(grid, residual, mode)


def commutator_vs_unit(grid: Grid, psi: WaveVector):
    """Max over interior rows of |([p, q] psi)_n - i*hbar*psi_n|.

    For a twice-differentiable wavefunction this is (hbar * l^2 / 2) |psi''|
    plus higher-order terms; it vanishes identically for affine psi.
    """
    if psi.grid.dim != grid.dim:
        raise ValidationError(
            f"dimension mismatch: grid {grid.dim}, vector {psi.grid.dim}"
        )
    mode = psi.mode
    acted = commutator(
        build_momentum(grid, mode), build_position(grid, mode)
    ).apply(psi)
    ihbar = _i_hbar(grid, mode)
    worst = 0
    for n in interior_indices(grid):
        worst = max(worst, magnitude(acted.entry(n) - ihbar * psi.entry(n)))
    return worst


def deviation_from_unit(grid: Grid, mode: NumericMode = NumericMode.EXACT) -> BandedMatrix:
    """The matrix i*hbar*1 - [p, q]: hbar on the diagonal, -hbar/2 off it."""
    c = commutator(build_momentum(grid, mode), build_position(grid, mode))
    return identity_scaled(grid, _i_hbar(grid, mode), mode) - c


def trace_paradox(grid: Grid, mode: NumericMode = NumericMode.EXACT) -> TraceParadoxReport:
    """Tr[p, q] = 0 exactly, versus the fallacious value i*hbar*Tr(1) = i*hbar*D."""
    c = commutator(build_momentum(grid, mode), build_position(grid, mode))
    deviation = identity_scaled(grid, _i_hbar(grid, mode), mode) - c
    worst = 0
    for _n, _m, value in deviation.nonzero_entries():
        worst = max(worst, magnitude(value))
    if mode is NumericMode.EXACT:
        fallacy = ComplexRational(0, grid.hbar * grid.dim)
    else:
        fallacy = 1j * float(grid.hbar) * grid.dim
    return TraceParadoxReport(
        dim=grid.dim,
        boundary=grid.boundary,
        trace_commutator=c.trace(),
        fallacy_value=fallacy,
        max_deviation_from_unit=worst,
    )


def convergence_study(
    f: Callable[[float], float],
    ell0,
    steps: int,
    window,
    hbar=1,
) -> List[ConvergenceRow]:
    """Fixed-window shrink study: halve the spacing, watch the error fall 4x.

    The physical window [-W, W] stays fixed while the spacing follows the
    geometric schedule l_k = l_0 / 2^k (so the dimension grows).  Each row
    records the interior deviation of [p, q] psi from i*hbar*psi for psi
    sampled from f, and the observed order log2(err_{k-1} / err_k), which
    approaches 2 for smooth f.
    """
    if steps < 2:
        raise ValidationError(f"need at least 2 steps, got {steps}")
    ell0 = as_rational(ell0)
    window = as_rational(window)
    if ell0 <= 0 or window <= 0:
        raise ValidationError("spacing and window must be positive")
    rows: List[ConvergenceRow] = []
    previous = None
    for k in range(steps):
        ell = ell0 / 2**k
        n_half = max(1, math.ceil(window / ell))
        grid = Grid(n_half, ell, Boundary.OPEN, as_rational(hbar))
        psi = sample(f, grid, NumericMode.FLOAT)
        error = float(commutator_vs_unit(grid, psi))
        order = None
        if previous is not None and previous > 0 and error > 0:
            order = math.log2(previous / error)
        rows.append(ConvergenceRow(float(ell), error, order))
        previous = error
    return rows


def plane_wave(grid: Grid, m: int) -> WaveVector:
    """Float-mode samples of e^{i k q} with k = 2*pi*m / (D*l).

    Phases are reduced with integer arithmetic (m*n mod D) so the samples are
    exactly periodic across the seam.
    """
    dim = grid.dim
    entries = [
        cmath.exp(2j * math.pi * ((m * n) % dim) / dim) for n in grid.indices()
    ]
    return WaveVector(grid, entries, NumericMode.FLOAT)


def dispersion_check(grid: Grid, m: int) -> Tuple[float, float]:
    """Rayleigh-quotient eigenvalue of p on a plane wave, and the residual.

    Only defined for periodic grids, where the wrapped derivative makes the
    plane wave with k = 2*pi*m/(D*l) an exact eigenvector with eigenvalue
    -(hbar/l) * sin(k*l); the sign follows from p = +i*hbar*d.
    """
    if grid.boundary is not Boundary.PERIODIC:
        raise ValidationError("dispersion check requires a periodic boundary")
    if abs(m) > grid.half_width:
        raise ValidationError(
            f"mode index {m} exceeds half-width {grid.half_width}"
        )
    psi = plane_wave(grid, m)
    acted = build_momentum(grid, NumericMode.FLOAT).apply(psi)
    numerator = sum(a.conjugate() * b for a, b in zip(psi.entries, acted.entries))
    denominator = sum(abs(a) ** 2 for a in psi.entries)
    eigenvalue = (numerator / denominator).real
    residual = max(abs(b - eigenvalue * a) for a, b in zip(psi.entries, acted.entries))
    return eigenvalue, residual


def _i_hbar(grid: Grid, mode: NumericMode):
    if mode is NumericMode.EXACT:
        return ComplexRational(0, grid.hbar)
    return 1j * float(grid.hbar)
