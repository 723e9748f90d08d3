"""Scalar arithmetic for the geometric representation.

Bond labels in {2, 3, 4, 6, inf} give reflection coefficients 2cos(pi/m) in
{0, 1, sqrt2, sqrt3, 2}, so every matrix entry lives in Z[sqrt2, sqrt3] and is
handled exactly by :class:`Quad`.  Any other label falls back to floats with a
sign tolerance of ``TOLERANCE``.
"""

from __future__ import annotations

import math

TOLERANCE = 1e-9

EXACT_LABELS = frozenset({2, 3, 4, 6, math.inf})

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)


class ArithmeticPrecisionError(ArithmeticError):
    """A floating-point sign test was too close to zero to decide."""


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_sqrt2(p: int, q: int) -> int:
    """Sign of p + q*sqrt2 for integers p, q."""
    sp, sq = _sign(p), _sign(q)
    if sp == 0:
        return sq
    if sq == 0 or sp == sq:
        return sp
    # opposite signs: the larger magnitude wins; p^2 == 2q^2 only at zero
    return sp if p * p > 2 * q * q else sq


class Quad:
    """An element a + b*sqrt2 + c*sqrt3 + d*sqrt6 with integer coefficients."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: Quad) -> Quad:
        return Quad(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Quad) -> Quad:
        return Quad(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Quad:
        return Quad(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: Quad) -> Quad:
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quad(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quad):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __float__(self) -> float:
        return self.a + self.b * _SQRT2 + self.c * _SQRT3 + self.d * _SQRT6

    def __repr__(self) -> str:
        return f"Quad{self.coeffs}"

    def sign(self) -> int:
        """Exact sign, decided by squaring out sqrt3 over Q(sqrt2)."""
        a, b, c, d = self.a, self.b, self.c, self.d
        sx = _sign_sqrt2(a, b)
        sy = _sign_sqrt2(c, d)
        if sx == 0:
            return sy
        if sy == 0 or sx == sy:
            return sx
        # x + y*sqrt3 with x, y of opposite sign: compare x^2 against 3y^2
        n0 = a * a + 2 * b * b - 3 * c * c - 6 * d * d
        n1 = 2 * a * b - 6 * c * d
        return sx * _sign_sqrt2(n0, n1)


QUAD_ZERO = Quad()
QUAD_ONE = Quad(1)

_EXACT_COEFF = {
    2: Quad(0),
    3: Quad(1),
    4: Quad(0, 1),
    6: Quad(0, 0, 1),
    math.inf: Quad(2),
}


def reflection_coefficient(m: float, exact: bool):
    """Return 2cos(pi/m) (2 for m = inf) as a Quad or a float."""
    if exact:
        return _EXACT_COEFF[m]
    if m == math.inf:
        return 2.0
    return 2.0 * math.cos(math.pi / m)


def is_zero(x) -> bool:
    if isinstance(x, Quad):
        return not x
    return abs(x) < TOLERANCE


def column_sign(column) -> int:
    """Sign of a sign-coherent root vector given by its coordinates.

    Exact vectors use their first nonzero coordinate.  Float vectors use the
    coordinate of largest magnitude; if that lies within the tolerance, or a
    coordinate of the opposite sign exceeds it, the sign is indeterminate.
    """
    first = column[0]
    if isinstance(first, Quad):
        for x in column:
            if x:
                return x.sign()
        raise ArithmeticPrecisionError("zero root vector")
    big = max(column, key=abs)
    if abs(big) < TOLERANCE:
        raise ArithmeticPrecisionError(f"root coordinates {column!r} within tolerance of zero")
    s = 1 if big > 0 else -1
    for x in column:
        if x * s < -TOLERANCE:
            raise ArithmeticPrecisionError(f"root vector {column!r} is not sign-coherent")
    return s
