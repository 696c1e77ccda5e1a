"""Scalar fields the matrices live over.

Two numeric modes exist and never mix inside one object:

* ``NumericMode.EXACT``  -- complex numbers with arbitrary-precision rational
  real and imaginary parts (:class:`ComplexRational`).  Closed and exact under
  +, -, *, / so that operator identities can be asserted with zero tolerance.
* ``NumericMode.FLOAT``  -- ordinary Python ``complex`` (double precision),
  used for transcendental wavefunctions and convergence studies.

Mixing the two is an error, never an implicit promotion; ``to_float`` is the
explicit one-way conversion.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ModeError


class NumericMode(Enum):
    EXACT = "exact"
    FLOAT = "float"


class ComplexRational:
    """A complex number with exact rational real and imaginary parts.

    Arithmetic accepts ints and :class:`~fractions.Fraction` values (which are
    exact) but refuses floats and complex floats: those belong to the other
    numeric mode.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        # zero-component fast paths; most operator entries are purely real or
        # purely imaginary and this dominates the exact-mode running time
        if not self.im and not other.im:
            return ComplexRational(self.re * other.re, 0)
        if not self.re and not other.re:
            return ComplexRational(-(self.im * other.im), 0)
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero")
        return ComplexRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = _as_complex_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    # -- comparison / inspection --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"ComplexRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * float(self.im)


Scalar = Union[ComplexRational, complex]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise ModeError(
        f"exact arithmetic requires rational components, got {type(value).__name__}"
    )


def _as_complex_rational(value):
    if isinstance(value, ComplexRational):
        return value
    if isinstance(value, (int, Fraction)):
        return ComplexRational(value, 0)
    if isinstance(value, (float, complex)):
        raise ModeError("cannot mix exact and floating-point values")
    return NotImplemented


ZERO = {NumericMode.EXACT: ComplexRational(0, 0), NumericMode.FLOAT: 0j}
ONE = {NumericMode.EXACT: ComplexRational(1, 0), NumericMode.FLOAT: 1 + 0j}


def coerce(value, mode: NumericMode) -> Scalar:
    """Normalise ``value`` into the scalar type of ``mode``.

    Exact mode accepts ints, Fractions and ComplexRationals; anything carrying
    floating point raises :class:`ModeError`.  Float mode accepts every
    numeric type (rationals are rounded to the nearest double).
    """
    if mode is NumericMode.EXACT:
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (int, Fraction)):
            return ComplexRational(value, 0)
        raise ModeError(
            f"value of type {type(value).__name__} is not exactly representable"
        )
    if isinstance(value, ComplexRational):
        return value.to_complex()
    if isinstance(value, (int, float, Fraction)):
        return complex(value)
    if isinstance(value, complex):
        return value
    raise ModeError(f"cannot interpret {type(value).__name__} as a float scalar")


def to_float(value: Scalar) -> complex:
    """Explicit exact-to-float conversion (the only sanctioned direction)."""
    if isinstance(value, ComplexRational):
        return value.to_complex()
    return complex(value)


def scalar_mode(value: Scalar) -> NumericMode:
    return NumericMode.EXACT if isinstance(value, ComplexRational) else NumericMode.FLOAT


def _exact_sqrt(value: Fraction):
    """Square root of a nonnegative rational, exact when one exists."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return math.sqrt(num / den)


def magnitude(value: Scalar):
    """|value|, as an exact Fraction whenever that is representable."""
    if isinstance(value, ComplexRational):
        return _exact_sqrt(value.abs_squared())
    return abs(value)
