"""Square complex matrices stored by diagonals.

Rows and columns carry the grid's signed labels n, m in {-N, ..., +N}
(dimension D = 2N+1).  Storage is diagonals-major: a mapping from diagonal
offset to a full row-indexed tuple of entries.

* Open boundary: offset k holds A[n, n+k]; slots that fall outside the matrix
  are identically zero and the band is simply truncated at the edges.
* Periodic boundary: offsets are cyclic, normalised to the symmetric range
  {-N, ..., +N}; offset c holds A[n, m] with m - n = c (mod D).  Wrap-around
  corner entries therefore live in the same diagonal as the band they
  continue, which keeps products of periodic matrices exactly representable.

Bandwidths grow under multiplication, bw(AB) <= bw(A) + bw(B), saturating at
D-1 (open) since entries cannot leave the matrix.  All values in one matrix
share a single numeric mode; mixing modes raises ModeError.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Sequence, Tuple

from .errors import ModeError, ValidationError
from .grid import Boundary, Grid, WaveVector
from .scalars import NumericMode, Scalar, ZERO, coerce, magnitude, scalar_mode


class BandedMatrix:
    __slots__ = ("dim", "half_width", "boundary", "mode", "_diags")

    def __init__(
        self,
        dim: int,
        diagonals: Mapping[int, Sequence],
        boundary: Boundary,
        mode: NumericMode,
    ):
        if dim < 1 or dim % 2 == 0:
            raise ValidationError(f"dimension must be odd and positive, got {dim}")
        self.dim = dim
        self.half_width = (dim - 1) // 2
        self.boundary = boundary
        self.mode = mode
        stored: Dict[int, Tuple[Scalar, ...]] = {}
        for offset, values in diagonals.items():
            self._check_offset(offset)
            if len(values) != dim:
                raise ValidationError(
                    f"diagonal {offset} has {len(values)} slots, expected {dim}"
                )
            row = [coerce(v, mode) for v in values]
            if boundary is Boundary.OPEN:
                for i, v in enumerate(row):
                    if not 0 <= i + offset < dim and v:
                        raise ValidationError(
                            f"entry at row {i - self.half_width}, offset {offset} "
                            "falls outside an open-boundary matrix"
                        )
            if any(row):
                stored[offset] = tuple(row)
        self._diags = stored

    def _check_offset(self, offset: int) -> None:
        if self.boundary is Boundary.OPEN:
            if abs(offset) > self.dim - 1:
                raise ValidationError(f"offset {offset} exceeds dimension {self.dim}")
        elif not -self.half_width <= offset <= self.half_width:
            raise ValidationError(
                f"periodic offsets are cyclic; expected {-self.half_width}..{self.half_width}, got {offset}"
            )

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_entries(
        cls,
        dim: int,
        entries: Mapping[Tuple[int, int], Scalar],
        boundary: Boundary,
        mode: NumericMode,
    ) -> "BandedMatrix":
        """Build from a sparse {(row n, col m): value} mapping, signed indices."""
        half = (dim - 1) // 2
        zero = ZERO[mode]
        diags: Dict[int, list] = {}
        for (n, m), value in entries.items():
            if abs(n) > half or abs(m) > half:
                raise ValidationError(f"index ({n}, {m}) outside half-width {half}")
            offset = _offset_for(n, m, dim, half, boundary)
            row = diags.setdefault(offset, [zero] * dim)
            row[n + half] = value
        return cls(dim, diags, boundary, mode)

    @classmethod
    def zero(cls, dim: int, boundary: Boundary, mode: NumericMode) -> "BandedMatrix":
        return cls(dim, {}, boundary, mode)

    # -- inspection -----------------------------------------------------------

    @property
    def lower_bw(self) -> int:
        return max((-k for k in self._diags if k < 0), default=0)

    @property
    def upper_bw(self) -> int:
        return max((k for k in self._diags if k > 0), default=0)

    def diagonals(self) -> Dict[int, Tuple[Scalar, ...]]:
        return dict(self._diags)

    def entry(self, n: int, m: int) -> Scalar:
        """A[n, m] with signed indices."""
        half = self.half_width
        if abs(n) > half or abs(m) > half:
            raise ValidationError(f"index ({n}, {m}) outside half-width {half}")
        offset = _offset_for(n, m, self.dim, half, self.boundary)
        diag = self._diags.get(offset)
        if diag is None:
            return ZERO[self.mode]
        return diag[n + half]

    def nonzero_entries(self) -> Iterator[Tuple[int, int, Scalar]]:
        """Yield (row, col, value) for every nonzero entry, row-major order."""
        half, dim = self.half_width, self.dim
        items = []
        for offset, diag in self._diags.items():
            for i, value in enumerate(diag):
                if not value:
                    continue
                if self.boundary is Boundary.OPEN:
                    j = i + offset
                else:
                    j = (i + offset) % dim
                items.append((i - half, j - half, value))
        items.sort(key=lambda t: (t[0], t[1]))
        return iter(items)

    def dense(self) -> list:
        """Full D x D list-of-lists, 0-based row/column order."""
        half = self.half_width
        return [
            [self.entry(n, m) for m in range(-half, half + 1)]
            for n in range(-half, half + 1)
        ]

    def __eq__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.boundary is other.boundary
            and self.mode is other.mode
            and self._diags == other._diags
        )

    def __repr__(self):
        return (
            f"BandedMatrix(dim={self.dim}, bw=({self.lower_bw}, {self.upper_bw}), "
            f"boundary={self.boundary.value}, mode={self.mode.value})"
        )

    # -- algebra ----------------------------------------------------------------

    def _check_compatible(self, other: "BandedMatrix") -> None:
        if self.dim != other.dim:
            raise ValidationError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.boundary is not other.boundary:
            raise ValidationError(
                f"boundary mismatch: {self.boundary.value} vs {other.boundary.value}"
            )
        if self.mode is not other.mode:
            raise ModeError(f"numeric mode mismatch: {self.mode.value} vs {other.mode.value}")

    def __add__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        self._check_compatible(other)
        zero = ZERO[self.mode]
        diags: Dict[int, list] = {}
        for offset in set(self._diags) | set(other._diags):
            a = self._diags.get(offset)
            b = other._diags.get(offset)
            if a is None:
                diags[offset] = list(b)
            elif b is None:
                diags[offset] = list(a)
            else:
                diags[offset] = [x + y for x, y in zip(a, b)]
        return BandedMatrix(self.dim, diags, self.boundary, self.mode)

    def __sub__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BandedMatrix(
            self.dim,
            {k: [-v for v in d] for k, d in self._diags.items()},
            self.boundary,
            self.mode,
        )

    def __mul__(self, scalar):
        factor = coerce(scalar, self.mode)
        return BandedMatrix(
            self.dim,
            {k: [factor * v for v in d] for k, d in self._diags.items()},
            self.boundary,
            self.mode,
        )

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        self._check_compatible(other)
        dim, half = self.dim, self.half_width
        zero = ZERO[self.mode]
        acc: Dict[int, list] = {}
        if self.boundary is Boundary.OPEN:
            for k1, d1 in self._diags.items():
                for k2, d2 in other._diags.items():
                    k = k1 + k2
                    if abs(k) > dim - 1:
                        continue
                    lo = max(0, -k1, -k)
                    hi = min(dim - 1, dim - 1 - k1, dim - 1 - k)
                    if lo > hi:
                        continue
                    out = acc.setdefault(k, [zero] * dim)
                    for i in range(lo, hi + 1):
                        out[i] = out[i] + d1[i] * d2[i + k1]
        else:
            for c1, d1 in self._diags.items():
                for c2, d2 in other._diags.items():
                    c = (c1 + c2 + half) % dim - half
                    out = acc.setdefault(c, [zero] * dim)
                    for i in range(dim):
                        out[i] = out[i] + d1[i] * d2[(i + c1) % dim]
        return BandedMatrix(dim, acc, self.boundary, self.mode)

    def apply(self, vector: WaveVector) -> WaveVector:
        """Matrix-vector product."""
        if vector.grid.dim != self.dim:
            raise ValidationError(
                f"dimension mismatch: matrix {self.dim}, vector {vector.grid.dim}"
            )
        if vector.mode is not self.mode:
            raise ModeError(
                f"numeric mode mismatch: matrix {self.mode.value}, vector {vector.mode.value}"
            )
        dim = self.dim
        out = [ZERO[self.mode]] * dim
        entries = vector.entries
        for offset, diag in self._diags.items():
            if self.boundary is Boundary.OPEN:
                lo, hi = max(0, -offset), min(dim - 1, dim - 1 - offset)
                for i in range(lo, hi + 1):
                    out[i] = out[i] + diag[i] * entries[i + offset]
            else:
                for i in range(dim):
                    out[i] = out[i] + diag[i] * entries[(i + offset) % dim]
        return WaveVector(vector.grid, out, self.mode)

    def trace(self) -> Scalar:
        diag = self._diags.get(0)
        if diag is None:
            return ZERO[self.mode]
        total = ZERO[self.mode]
        for v in diag:
            total = total + v
        return total

    def to_float(self) -> "BandedMatrix":
        if self.mode is NumericMode.FLOAT:
            return self
        return BandedMatrix(
            self.dim,
            {k: [v.to_complex() for v in d] for k, d in self._diags.items()},
            self.boundary,
            NumericMode.FLOAT,
        )


def _offset_for(n: int, m: int, dim: int, half: int, boundary: Boundary) -> int:
    if boundary is Boundary.OPEN:
        return m - n
    return (m - n + half) % dim - half


# -- module-level operation names -------------------------------------------------


def identity_scaled(grid: Grid, value, mode: NumericMode = NumericMode.EXACT) -> BandedMatrix:
    """c times the unit matrix on the grid's dimension."""
    c = coerce(value, mode)
    return BandedMatrix(grid.dim, {0: [c] * grid.dim}, grid.boundary, mode)


def matmul(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    return a @ b


def commutator(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    """AB - BA, exact in exact mode."""
    return a @ b - b @ a


def trace(a: BandedMatrix) -> Scalar:
    return a.trace()


def apply(a: BandedMatrix, vector: WaveVector) -> WaveVector:
    return a.apply(vector)


def _conj(value: Scalar) -> Scalar:
    return value.conjugate()


def _mirror_positions(a: BandedMatrix):
    """All (i, j, mirrored j-row index, offset pair) the band can touch."""
    dim, half = a.dim, a.half_width
    offsets = set(a._diags)
    offsets |= {-k for k in a._diags}
    if a.boundary is Boundary.PERIODIC:
        offsets = {(k + half) % dim - half for k in offsets}
    for k in offsets:
        if a.boundary is Boundary.OPEN:
            lo, hi = max(0, -k), min(dim - 1, dim - 1 - k)
            for i in range(lo, hi + 1):
                yield i, i + k, k
        else:
            for i in range(dim):
                yield i, (i + k) % dim, k


def hermitian_deviation(a: BandedMatrix):
    """Max entrywise magnitude of A - A(dagger); exactly 0 iff A is Hermitian."""
    half = a.half_width
    worst = 0
    for i, j, _k in _mirror_positions(a):
        z = a.entry(i - half, j - half) - _conj(a.entry(j - half, i - half))
        worst = max(worst, magnitude(z))
    return worst


def antisymmetry_deviation(a: BandedMatrix):
    """Max deviation from being a real antisymmetric matrix.

    Measures both A + A(transpose) and any imaginary content; exactly 0 iff
    the matrix is real with A[n, m] = -A[m, n].
    """
    half = a.half_width
    worst = 0
    for i, j, _k in _mirror_positions(a):
        v = a.entry(i - half, j - half)
        z = v + a.entry(j - half, i - half)
        worst = max(worst, magnitude(z))
        if isinstance(v, complex):
            worst = max(worst, abs(v.imag))
        else:
            worst = max(worst, abs(v.im))
    return worst
