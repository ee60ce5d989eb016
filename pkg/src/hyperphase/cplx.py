"""Complex arithmetic with a point at infinity, generalized circles, and Mobius maps.

All downstream geometry lives on the Riemann sphere, so every operation here
accepts and returns the single unsigned point at infinity ``INF`` alongside
ordinary Python complex numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# |det| threshold (after max-norm scaling) below which a matrix is rejected.
DEGENERACY_TOL = 1e-14


class _Infinity:
    """The single unsigned point at infinity of the Riemann sphere."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()


def is_inf(z) -> bool:
    return z is INF


def arg2pi(z) -> float:
    """Argument of ``z`` remapped to [0, 2*pi).

    The discontinuity sits on the positive real axis. Zero and ``INF`` have
    no argument and raise ``ValueError``.
    """
    if z is INF:
        raise ValueError("argument of the point at infinity is undefined")
    z = complex(z)
    if z == 0:
        raise ValueError("argument of zero is undefined")
    # math.atan2 instead of cmath.phase: the latter raises on subnormal results
    a = math.atan2(z.imag, z.real) % TWO_PI
    # float modulo can land exactly on 2*pi for tiny negative angles
    return 0.0 if a >= TWO_PI else a


@dataclass(frozen=True)
class Circle:
    """Euclidean circle with finite center and strictly positive radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not math.isfinite(self.center.real) or not math.isfinite(self.center.imag):
            raise ValueError("circle center must be finite")
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive and finite, got {self.radius!r}")


@dataclass(frozen=True)
class Line:
    """Straight line through ``base`` at ``angle`` radians, normalized to [0, pi)."""

    base: complex
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "base", complex(self.base))
        a = float(self.angle) % math.pi
        if a >= math.pi:  # same float-modulo edge as arg2pi
            a = 0.0
        object.__setattr__(self, "angle", a)
        if not math.isfinite(self.base.real) or not math.isfinite(self.base.imag):
            raise ValueError("line base point must be finite")

    @classmethod
    def vertical(cls, x: float) -> "Line":
        return cls(complex(x, 0.0), math.pi / 2.0)


GenCircle = Circle | Line


def invert_in_circle(circle: Circle, z):
    """Inversion z -> center + r^2 / conj(z - center).

    An anticonformal involution fixing ``circle`` pointwise and swapping its
    center with ``INF``.
    """
    if z is INF:
        return circle.center
    z = complex(z)
    d = z - circle.center
    if d == 0:
        return INF
    return circle.center + (circle.radius * circle.radius) / d.conjugate()


def reflect_in_line(line: Line, z):
    """Mirror reflection across ``line``; fixes the line pointwise and ``INF``."""
    if z is INF:
        return INF
    u = cmath.exp(2j * line.angle)
    return u * (complex(z) - line.base).conjugate() + line.base


def reflect(curve: GenCircle, z):
    """Reflection in an h-line representative: inversion for circles, mirror for lines."""
    if isinstance(curve, Circle):
        return invert_in_circle(curve, z)
    return reflect_in_line(curve, z)


def reflection_matrix(curve: GenCircle):
    """Coefficients (p, q, r, s) of the reflection written z -> (p conj(z) + q)/(r conj(z) + s)."""
    if isinstance(curve, Circle):
        c = curve.center
        return (c, curve.radius**2 - abs(c) ** 2, 1.0 + 0j, -c.conjugate())
    u = cmath.exp(2j * curve.angle)
    return (u, curve.base - u * curve.base.conjugate(), 0j, 1.0 + 0j)


def sample_points(curve: GenCircle, n: int) -> list[complex]:
    """n points spread along the curve (full turn for circles, a wide window for lines)."""
    if isinstance(curve, Circle):
        return [
            curve.center + curve.radius * cmath.exp(2j * math.pi * (k + 0.5) / n)
            for k in range(n)
        ]
    u = cmath.exp(1j * curve.angle)
    # tan-spacing covers the line out to large |t| without bunching
    return [
        curve.base + math.tan(0.49 * math.pi * (2.0 * (k + 0.5) / n - 1.0)) * u
        for k in range(n)
    ]


def distance_to(curve: GenCircle, z: complex) -> float:
    """Euclidean distance from a finite point to the curve."""
    z = complex(z)
    if isinstance(curve, Circle):
        return abs(abs(z - curve.center) - curve.radius)
    u = cmath.exp(1j * curve.angle)
    return abs(((z - curve.base) * u.conjugate()).imag)


@dataclass(frozen=True)
class Mobius:
    """The map z -> (a z + b)/(c z + d) with ad - bc != 0.

    Construction rejects matrices whose determinant, after max-norm scaling of
    the entries, is at most ``DEGENERACY_TOL`` in modulus. Application returns
    ``INF`` exactly when c z + d == 0; there is no epsilon snapping near poles.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        if scale == 0.0 or not math.isfinite(scale):
            raise ValueError("mobius coefficients must be finite and not all zero")
        if abs(self.det) <= DEGENERACY_TOL * scale * scale:
            raise ValueError(f"degenerate mobius matrix ({self.a}, {self.b}, {self.c}, {self.d})")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def tr(self) -> complex:
        return self.a + self.d

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def scaling(cls, k) -> "Mobius":
        return cls(k, 0.0, 0.0, 1.0)

    @classmethod
    def translation(cls, t) -> "Mobius":
        return cls(1.0, t, 0.0, 1.0)

    def apply(self, z):
        if z is INF:
            return INF if self.c == 0 else self.a / self.c
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    __call__ = apply

    def compose(self, inner: "Mobius") -> "Mobius":
        """The map applying ``inner`` first, then ``self`` (matrix product self * inner)."""
        return Mobius(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        )

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "Mobius":
        """Rescaled so det == 1, up to the unavoidable overall sign."""
        s = cmath.sqrt(self.det)
        return Mobius(self.a / s, self.b / s, self.c / s, self.d / s)

    def is_identity(self, tol: float = 1e-12) -> bool:
        n = self.normalized()
        err = min(
            max(abs(s * n.a - 1.0), abs(s * n.b), abs(s * n.c), abs(s * n.d - 1.0))
            for s in (1.0, -1.0)
        )
        return err <= tol

    def almost_equal(self, other: "Mobius", tol: float = 1e-12) -> bool:
        """Projective comparison: equal as maps, ignoring the matrix scale."""
        n, m = self.normalized(), other.normalized()
        err = min(
            max(abs(n.a - s * m.a), abs(n.b - s * m.b), abs(n.c - s * m.c), abs(n.d - s * m.d))
            for s in (1.0, -1.0)
        )
        return err <= tol
