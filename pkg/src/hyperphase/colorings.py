"""Color assignments for phase portraits on the models of hyperbolic space.

Scalar functions define the contract: the plain complex phase coloring, the
pseudosphere rim coloring (constant along tractrix generators, black out of
view), the two disc colorings (constant along asymptotic respectively
ultraparallel geodesic families), and their hemisphere and Klein lifts. The
``*_field`` functions are numpy implementations of the same maps, used by the
rasterizer and mesh colorizer; tests pin them to the scalar path pixel by
pixel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

import numpy as np

from . import models
from .cplx import INF, TWO_PI, Circle, Mobius, arg2pi, invert_in_circle


class _Black:
    __slots__ = ()

    def __repr__(self) -> str:
        return "BLACK"


BLACK = _Black()


@dataclass(frozen=True)
class Hue:
    """A point on the color wheel, stored as an angle normalized to [0, 2*pi)."""

    angle: float

    def __post_init__(self):
        a = float(self.angle) % TWO_PI
        if a >= TWO_PI:
            a = 0.0
        object.__setattr__(self, "angle", a)


HueValue = Union[Hue, _Black]

Motion = Union[Mobius, Callable]


class Coloring(Enum):
    COMPLEX_PHASE = "complex"
    PSEUDO = "pseudo"
    DISC_ASYMPTOTIC = "disc1"
    DISC_ULTRAPARALLEL = "disc2"
    BELTRAMI_V1 = "beltrami1"
    BELTRAMI_V2 = "beltrami2"
    KLEIN_V1 = "klein1"
    KLEIN_V2 = "klein2"


@dataclass(frozen=True)
class ColorSpec:
    """A coloring together with the motion it visualizes.

    ``conjugation_omitted`` only affects the disc-derived colorings: it
    replaces the conformal disc maps by the plain anticonformal inversion in
    both directions of the construction.
    """

    coloring: Coloring
    motion: Motion = field(default_factory=Mobius.identity)
    conjugation_omitted: bool = False


@dataclass(frozen=True)
class CircleInversionMap:
    """Anticonformal circle inversion, usable in place of a motion when plotting."""

    circle: Circle

    def __call__(self, z):
        if isinstance(z, np.ndarray):
            c = self.circle.center
            r2 = self.circle.radius**2
            with np.errstate(divide="ignore", invalid="ignore"):
                return c + r2 / np.conj(z - c)
        return invert_in_circle(self.circle, z)


def _apply(f: Motion, z):
    return f.apply(z) if isinstance(f, Mobius) else f(z)


def color_complex(f: Motion, z) -> HueValue:
    """Hue of arg(f(z)); black where f(z) is zero or infinite."""
    w = _apply(f, z)
    if w is INF or w == 0:
        return BLACK
    return Hue(arg2pi(w))


def color_pseudosphere(f: Motion, p: models.PseudoCoord) -> HueValue:
    """Rim coloring: hue Re(f(z)) when it lands in [0, 2*pi], black otherwise.

    The closed upper endpoint collapses onto the wheel, Hue(2*pi) == Hue(0).
    """
    w = _apply(f, models.pseudo_to_halfplane(p))
    if w is INF:
        return BLACK
    x = complex(w).real
    if 0.0 <= x <= TWO_PI:
        return Hue(x)
    return BLACK


def _boundary_point(value, conj_omitted: bool):
    """Send a real boundary value (or INF) back into the disc through the outer map."""
    return models.halfplane_to_disc(value, omit_conjugation=conj_omitted)


def color_disc_asymptotic(f: Motion, w, conj_omitted: bool = False) -> Hue:
    """Unique hue along the preimage of each tractrix line (asymptotic family).

    The real part of the moved point is re-read as a boundary point of the
    half-plane and pushed through the disc map; a pole lands on the boundary
    point at infinity, which has a well-defined color.
    """
    z = models.disc_to_halfplane(w, omit_conjugation=conj_omitted)
    fz = _apply(f, z)
    boundary = INF if fz is INF else complex(complex(fz).real, 0.0)
    return Hue(arg2pi(_boundary_point(boundary, conj_omitted)))


def color_disc_ultraparallel(f: Motion, w, conj_omitted: bool = False) -> Hue:
    """Unique hue along the preimage of each semicircle centered at 0 (ultraparallel family).

    The modulus is re-read as a boundary point, pushed through the disc map,
    rotated by i, and the argument doubled to recover the full wheel.
    """
    z = models.disc_to_halfplane(w, omit_conjugation=conj_omitted)
    fz = _apply(f, z)
    boundary = INF if fz is INF else complex(abs(complex(fz)), 0.0)
    u = _boundary_point(boundary, conj_omitted)
    return Hue(2.0 * arg2pi(1j * u))


def color_beltrami(f: Motion, p: models.SpherePoint, variant: int, conj_omitted: bool = False) -> Hue:
    """Disc colorings lifted to the half-sphere through the lower stereographic projection."""
    w = models.hemisphere_to_disc(p)
    if variant == 1:
        return color_disc_asymptotic(f, w, conj_omitted)
    if variant == 2:
        return color_disc_ultraparallel(f, w, conj_omitted)
    raise ValueError(f"variant must be 1 or 2, got {variant!r}")


def color_klein(f: Motion, k, variant: int, conj_omitted: bool = False) -> Hue:
    """Half-sphere colorings pulled back through the vertical projection."""
    return color_beltrami(f, models.klein_to_hemisphere(k), variant, conj_omitted)


def height_disc(f: Motion, w, variant: int, conj_omitted: bool = False) -> float:
    """The chosen disc coloring's hue angle rescaled to [0, 1], used as a height map."""
    if variant == 1:
        h = color_disc_asymptotic(f, w, conj_omitted)
    elif variant == 2:
        h = color_disc_ultraparallel(f, w, conj_omitted)
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")
    return h.angle / TWO_PI


def modulus_height(f: Motion, z, ceiling: float = 6.0) -> float:
    """log(1 + |f(z)|), clamped to ``ceiling``; poles sit at the ceiling."""
    w = _apply(f, z)
    if w is INF:
        return ceiling
    return min(math.log1p(abs(complex(w))), ceiling)


def hue_to_rgb(h: HueValue) -> tuple[int, int, int]:
    """Fully saturated color wheel; hue fraction is angle/(2*pi), black is (0, 0, 0)."""
    if h is BLACK:
        return (0, 0, 0)
    x = h.angle * (6.0 / TWO_PI)
    k = min(int(math.floor(x)), 5)
    t = x - k
    c = int(math.floor(255.0 * t + 0.5))
    d = int(math.floor(255.0 * (1.0 - t) + 0.5))
    if k == 0:
        return (255, c, 0)
    if k == 1:
        return (d, 255, 0)
    if k == 2:
        return (0, 255, c)
    if k == 3:
        return (0, d, 255)
    if k == 4:
        return (c, 0, 255)
    return (255, 0, d)


# ---------------------------------------------------------------------------
# Vectorized field implementations (numpy), used by raster and mesh.
# ---------------------------------------------------------------------------


def _mod2pi(a: np.ndarray) -> np.ndarray:
    h = np.mod(a, TWO_PI)
    return np.where(h >= TWO_PI, 0.0, h)


def _motion_pq(f: Motion, P: np.ndarray, Q: np.ndarray):
    """Apply a motion projectively: z = P/Q -> (P', Q') with f(z) = P'/Q'.

    Mobius maps stay exact at poles; a generic callable is evaluated pointwise
    (callers guarantee Q != 0 on that path) and non-finite outputs are left
    for the black masks.
    """
    if isinstance(f, Mobius):
        return f.a * P + f.b * Q, f.c * P + f.d * Q
    with np.errstate(divide="ignore", invalid="ignore"):
        W = np.asarray(f(P / Q))
    return W, np.ones_like(W)


def phase_hue_field(f: Motion, P: np.ndarray, Q: np.ndarray):
    """Vector form of ``color_complex`` on points z = P/Q; returns (hue, black mask)."""
    P2, Q2 = _motion_pq(f, P, Q)
    black = (P2 == 0) | (Q2 == 0) | ~np.isfinite(P2) | ~np.isfinite(Q2)
    with np.errstate(invalid="ignore"):
        hue = _mod2pi(np.angle(P2 * np.conj(Q2)))
    return np.where(black, 0.0, hue), black


def pseudo_hue_field(f: Motion, Z: np.ndarray):
    """Vector form of ``color_pseudosphere`` on half-plane points; returns (hue, black mask)."""
    P2, Q2 = _motion_pq(f, Z, np.ones_like(Z))
    v = np.abs(Q2) ** 2
    u = np.real(P2 * np.conj(Q2))
    with np.errstate(divide="ignore", invalid="ignore"):
        x = u / v
    ok = np.isfinite(x) & (x >= 0.0) & (x <= TWO_PI)
    hue = _mod2pi(np.where(ok, x, 0.0))
    return hue, ~ok


def disc_hue_field(f: Motion, W: np.ndarray, variant: int = 1, conj_omitted: bool = False) -> np.ndarray:
    """Vector form of the two disc colorings; total on the closed disc, never black."""
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")
    if conj_omitted:
        Wc = np.conj(W)
        P, Q = 1.0 - 1j * Wc, Wc - 1j
    else:
        P, Q = 1j * W - 1.0, 1j - W
    P2, Q2 = _motion_pq(f, P, Q)
    if variant == 1:
        u = np.real(P2 * np.conj(Q2))
        v = np.abs(Q2) ** 2
        pole = v == 0  # boundary point at infinity: treat as u/v -> +inf
        u = np.where(pole, 1.0, u)
        v = np.where(pole, 0.0, v)
    else:
        u, v = np.abs(P2), np.abs(Q2)
    # the boundary value x = u/v pushed back into the disc: (i u + v)/(u + i v),
    # conjugated when the conjugation step is omitted
    num = 1j * u + v
    den = u + 1j * v
    if conj_omitted:
        num, den = np.conj(num), np.conj(den)
    if variant == 1:
        return _mod2pi(np.angle(num * np.conj(den)))
    return _mod2pi(2.0 * np.angle(1j * num * np.conj(den)))


def klein_hue_field(f: Motion, K: np.ndarray, variant: int = 1, conj_omitted: bool = False) -> np.ndarray:
    """Disc colorings pulled back to the Klein disc (hemisphere lift then projection)."""
    Zh = np.sqrt(np.clip(1.0 - np.abs(K) ** 2, 0.0, None))
    return disc_hue_field(f, K / (1.0 + Zh), variant, conj_omitted)


def hue_field_for(spec: ColorSpec, points: np.ndarray):
    """Dispatch a 2D coloring over complex sample points; returns (hue, black mask).

    ``points`` are disc coordinates for the disc and Klein colorings,
    half-plane coordinates for the pseudosphere coloring, and plain plane
    coordinates for the complex phase. Hemisphere colorings have no 2D
    domain and are rejected.
    """
    f = spec.motion
    if spec.coloring is Coloring.COMPLEX_PHASE:
        return phase_hue_field(f, points, np.ones_like(points))
    if spec.coloring is Coloring.PSEUDO:
        return pseudo_hue_field(f, points)
    if spec.coloring is Coloring.DISC_ASYMPTOTIC:
        return disc_hue_field(f, points, 1, spec.conjugation_omitted), None
    if spec.coloring is Coloring.DISC_ULTRAPARALLEL:
        return disc_hue_field(f, points, 2, spec.conjugation_omitted), None
    if spec.coloring is Coloring.KLEIN_V1:
        return klein_hue_field(f, points, 1, spec.conjugation_omitted), None
    if spec.coloring is Coloring.KLEIN_V2:
        return klein_hue_field(f, points, 2, spec.conjugation_omitted), None
    raise ValueError(f"{spec.coloring} has no 2D domain; render it on a mesh")


def hue_to_rgb_field(hue: np.ndarray, black: np.ndarray | None = None) -> np.ndarray:
    """Vector form of ``hue_to_rgb``: (..., 3) uint8 array."""
    x = hue * (6.0 / TWO_PI)
    k = np.minimum(np.floor(x).astype(np.int64), 5)
    t = x - k
    c = np.floor(255.0 * t + 0.5)
    d = np.floor(255.0 * (1.0 - t) + 0.5)
    full = np.full_like(c, 255.0)
    zero = np.zeros_like(c)
    sel = [k == 0, k == 1, k == 2, k == 3, k == 4, k == 5]
    r = np.select(sel, [full, d, zero, zero, c, full])
    g = np.select(sel, [c, full, full, d, zero, zero])
    b = np.select(sel, [zero, zero, c, full, full, d])
    rgb = np.stack([r, g, b], axis=-1).astype(np.uint8)
    if black is not None:
        rgb[black] = 0
    return rgb
