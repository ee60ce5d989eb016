"""Maps between representations of hyperbolic space and their 3D embeddings.

The representations: upper half-plane, pseudosphere coordinates, Poincare
disc, Beltrami half-sphere, Klein disc, and the plane/Riemann-sphere pair.
Every map has an inverse here, and each pair round-trips to machine
precision on its domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cplx import INF, Circle, Mobius, invert_in_circle

_DOMAIN_EPS = 1e-9


@dataclass(frozen=True)
class PseudoCoord:
    """Point on the (extended) pseudosphere.

    ``theta`` is the angle along the rim, unbounded once the surface is
    unrolled; ``sigma`` is arclength along the tractrix generator, measured
    from the rim (>= 0 on the physical surface, negative on the extension
    below the rim).
    """

    theta: float
    sigma: float

    @property
    def on_physical_surface(self) -> bool:
        return self.sigma >= 0.0

    @property
    def on_visible_roll(self) -> bool:
        return 0.0 <= self.theta < 2.0 * math.pi


@dataclass(frozen=True)
class SpherePoint:
    """Point (x, y, z) on the unit sphere."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        n = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(n - 1.0) > 1e-9:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not on the unit sphere")


@dataclass(frozen=True)
class Point3:
    """Euclidean embedding coordinates for meshes."""

    x: float
    y: float
    z: float


# The inversion circle K sending the upper half-plane onto the unit disc.
DISC_INVERSION_CIRCLE = Circle(-1j, math.sqrt(2.0))

# Closed form of the half-plane -> disc map, (i z + 1)/(z + i).
HALFPLANE_TO_DISC_MOBIUS = Mobius(1j, 1.0, 1.0, 1j)


def stereo_to_sphere(z) -> SpherePoint:
    """Stereographic projection of the plane onto the unit sphere; INF -> north pole."""
    if z is INF:
        return SpherePoint(0.0, 0.0, 1.0)
    z = complex(z)
    n = abs(z) ** 2
    den = 1.0 + n
    return SpherePoint(2.0 * z.real / den, 2.0 * z.imag / den, (n - 1.0) / den)


def sphere_to_plane(p: SpherePoint):
    """Inverse stereographic projection, (x + i y)/(1 - z); north pole -> INF."""
    if p.z == 1.0:
        return INF
    return complex(p.x, p.y) / (1.0 - p.z)


def pseudo_to_halfplane(p: PseudoCoord) -> complex:
    """(theta, sigma) -> theta + e^sigma i; the rim lands on the horizontal line Im == 1."""
    return complex(p.theta, math.exp(p.sigma))


def halfplane_to_pseudo(z) -> PseudoCoord:
    if z is INF:
        raise ValueError("the point at infinity has no pseudosphere coordinates")
    z = complex(z)
    if z.imag <= 0.0:
        raise ValueError(f"{z} is not in the upper half-plane")
    return PseudoCoord(z.real, math.log(z.imag))


def halfplane_to_disc(z, omit_conjugation: bool = False):
    """Upper half-plane -> unit disc: inversion in K followed by conjugation.

    With ``omit_conjugation`` the map is the plain (anticonformal) inversion.
    The default composite agrees with the holomorphic closed form
    (i z + 1)/(z + i) to machine precision.
    """
    w = invert_in_circle(DISC_INVERSION_CIRCLE, z)
    if omit_conjugation or w is INF:
        return w
    return w.conjugate()


def disc_to_halfplane(w, omit_conjugation: bool = False):
    """Inverse of ``halfplane_to_disc``: conjugate first, then invert in K."""
    if not omit_conjugation and w is not INF:
        w = complex(w).conjugate()
    return invert_in_circle(DISC_INVERSION_CIRCLE, w)


def disc_to_hemisphere(w) -> SpherePoint:
    """Lower stereographic projection of the closed unit disc onto the upper hemisphere."""
    w = complex(w)
    n = abs(w) ** 2
    if n > 1.0 + _DOMAIN_EPS:
        raise ValueError(f"{w} lies outside the closed unit disc")
    den = 1.0 + n
    return SpherePoint(2.0 * w.real / den, 2.0 * w.imag / den, max((1.0 - n) / den, 0.0))


def hemisphere_to_disc(p: SpherePoint) -> complex:
    if p.z < -_DOMAIN_EPS:
        raise ValueError("point lies on the lower hemisphere")
    return complex(p.x, p.y) / (1.0 + max(p.z, 0.0))


def hemisphere_to_klein(p: SpherePoint) -> complex:
    """Vertical projection of the upper hemisphere onto the disc: drop the height."""
    if p.z < -_DOMAIN_EPS:
        raise ValueError("point lies on the lower hemisphere")
    return complex(p.x, p.y)


def klein_to_hemisphere(k) -> SpherePoint:
    k = complex(k)
    n = abs(k) ** 2
    if n > 1.0 + _DOMAIN_EPS:
        raise ValueError(f"{k} lies outside the closed unit disc")
    return SpherePoint(k.real, k.imag, math.sqrt(max(1.0 - n, 0.0)))


def disc_to_klein(w) -> complex:
    """Composite disc -> hemisphere -> Klein disc, w -> 2w/(1 + |w|^2)."""
    return hemisphere_to_klein(disc_to_hemisphere(w))


def klein_to_disc(k) -> complex:
    return hemisphere_to_disc(klein_to_hemisphere(k))


def embed_pseudosphere(p: PseudoCoord) -> Point3:
    """Tractrix surface of revolution with unit rim radius at height 0.

    (theta, sigma) -> (sech s cos t, sech s sin t, s - tanh s); theta enters
    only through cos/sin, so the embedding has period 2*pi.
    """
    if p.sigma < 0.0:
        raise ValueError("the physical pseudosphere requires sigma >= 0")
    r = 1.0 / math.cosh(p.sigma)
    return Point3(r * math.cos(p.theta), r * math.sin(p.theta), p.sigma - math.tanh(p.sigma))


def embed_dini(p: PseudoCoord, twist: float) -> Point3:
    """Helically twisted pseudosphere; twist 0 recovers the unrolled pseudosphere."""
    r = 1.0 / math.cosh(p.sigma)
    return Point3(
        r * math.cos(p.theta),
        r * math.sin(p.theta),
        p.sigma - math.tanh(p.sigma) + twist * p.theta,
    )


def metric_scale(z) -> float:
    """Hyperbolic length density 1/Im(z) of the half-plane metric at z."""
    if z is INF:
        raise ValueError("metric density is undefined at infinity")
    z = complex(z)
    if z.imag <= 0.0:
        raise ValueError(f"{z} is not in the upper half-plane")
    return 1.0 / z.imag
