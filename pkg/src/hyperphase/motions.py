"""Hyperbolic direct motions built from reflection pairs, plus the figure presets.

A direct motion of the upper half-plane is the composition of two reflections
in h-line representatives (vertical lines or circles centered on the real
axis). Composing two anticonformal reflections yields a holomorphic Mobius
map, classified by the normalized squared trace into rotation, translation, or
limit rotation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .cplx import INF, Circle, GenCircle, Line, Mobius, reflection_matrix

_PI = math.pi

# |tr^2/det - 4| below this (det-normalized) means parabolic / identity.
LIMIT_ROTATION_TOL = 1e-9
_REALNESS_TOL = 1e-9


class MotionKind(Enum):
    ROTATION = "rotation"
    TRANSLATION = "translation"
    LIMIT_ROTATION = "limit-rotation"
    IDENTITY = "identity"


def motion_from_reflections(l1: GenCircle, l2: GenCircle) -> Mobius:
    """The Mobius map z -> R_{l2}(R_{l1}(z)), reflecting first in ``l1``.

    Swap the arguments for the opposite composition order. Raises
    ``ValueError`` when the two curves coincide as point sets (the
    composition would be the identity, which is not a motion).
    """
    p1, q1, r1, s1 = reflection_matrix(l1)
    p2, q2, r2, s2 = reflection_matrix(l2)
    # R(z) = M(conj(z)), so R2(R1(z)) is the Mobius with matrix M2 * conj(M1).
    m = Mobius(
        p2 * p1.conjugate() + q2 * r1.conjugate(),
        p2 * q1.conjugate() + q2 * s1.conjugate(),
        r2 * p1.conjugate() + s2 * r1.conjugate(),
        r2 * q1.conjugate() + s2 * s1.conjugate(),
    )
    if m.is_identity():
        raise ValueError("reflection curves coincide; the composition is the identity, not a motion")
    return m


def classify(m: Mobius) -> MotionKind:
    """Kind of direct motion, via the scale-invariant ratio tr^2/det.

    Ratio < 4 is a rotation, > 4 a translation, and == 4 (within
    ``LIMIT_ROTATION_TOL``) a limit rotation, or the identity when the matrix
    itself is the identity. A ratio with a significant imaginary part means
    the map does not preserve the upper half-plane and raises ``ValueError``.
    """
    chi = m.tr * m.tr / m.det
    if abs(chi.imag) > _REALNESS_TOL * max(1.0, abs(chi.real)):
        raise ValueError(f"tr^2/det = {chi} is not real: not an h-motion")
    x = chi.real
    if abs(x - 4.0) < LIMIT_ROTATION_TOL:
        return MotionKind.IDENTITY if m.is_identity() else MotionKind.LIMIT_ROTATION
    return MotionKind.ROTATION if x < 4.0 else MotionKind.TRANSLATION


def fixed_points(m: Mobius) -> list:
    """The one or two fixed points of a non-identity map, ``INF`` included when c == 0.

    Finite points come from the roots of c z^2 + (d - a) z - b = 0; the list
    is sorted deterministically (finite points by (re, im), ``INF`` last).
    """
    if m.is_identity():
        raise ValueError("the identity fixes every point")
    a, b, c, d = m.a, m.b, m.c, m.d
    if c == 0:
        if a == d:
            return [INF]
        return [b / (d - a), INF]
    disc = cmath.sqrt((d - a) * (d - a) + 4.0 * b * c)
    z1 = ((a - d) + disc) / (2.0 * c)
    z2 = ((a - d) - disc) / (2.0 * c)
    if abs(z1 - z2) <= 1e-12 * (1.0 + abs(z1) + abs(z2)):
        return [z1]
    return sorted((z1, z2), key=lambda w: (w.real, w.imag))


@dataclass(frozen=True)
class Preset:
    """A named reflection pair together with the Mobius map it reproduces.

    ``expected`` is the transformation the corresponding figure was drawn
    with. When a figure's printed formula disagrees with the composition of
    its stated circles, ``discrepancy`` is set and ``note`` records the
    printed form; ``expected`` always holds the map that actually reproduces
    the figure.
    """

    name: str
    l1: GenCircle
    l2: GenCircle
    expected: Mobius
    kind: MotionKind
    figure: str
    discrepancy: bool = False
    note: str = ""

    def motion(self) -> Mobius:
        return motion_from_reflections(self.l1, self.l2)


def figure_presets() -> list[Preset]:
    """The catalog of figure motions, from fig8 through fig17."""
    pi2 = _PI * _PI
    return [
        Preset(
            "fig8-rotation",
            Circle(0.0, 2 * _PI),
            Circle(2 * _PI, 2 * _PI),
            Mobius(0.0, 4 * pi2, -1.0, 2 * _PI),
            MotionKind.ROTATION,
            "h-rotation 4*pi^2/(2*pi - z) on the pseudosphere",
        ),
        Preset(
            "fig10-limit-rotation",
            Line.vertical(1.0),
            Line.vertical(0.0),
            Mobius.translation(-2.0),
            MotionKind.LIMIT_ROTATION,
            "limit rotation z - 2 on the disc and pseudosphere",
            note=(
                "the construction quotes the lines as x=0 then x=1, which composes to "
                "z + 2; this preset stores the order that yields the figure's map z - 2"
            ),
        ),
        Preset(
            "fig11-translation",
            Circle(0.0, math.sqrt(3.0)),
            Circle(0.0, 1.0),
            Mobius.scaling(1.0 / 3.0),
            MotionKind.TRANSLATION,
            "translation z/3, asymptotic coloring",
        ),
        Preset(
            "fig12-translation",
            Circle(0.0, 1.0),
            Circle(0.0, 2.0),
            Mobius.scaling(4.0),
            MotionKind.TRANSLATION,
            "translation 4z, asymptotic coloring",
        ),
        Preset(
            "fig13-landscape",
            Circle(0.0, math.sqrt(3.0)),
            Circle(0.0, 1.0),
            Mobius.scaling(1.0 / 3.0),
            MotionKind.TRANSLATION,
            "landscape of z/3: ultraparallel coloring over asymptotic height",
        ),
        Preset(
            "fig14-landscape",
            Circle(0.0, 1.0),
            Circle(0.0, 2.0),
            Mobius.scaling(4.0),
            MotionKind.TRANSLATION,
            "landscape of 4z: asymptotic coloring over ultraparallel height",
        ),
        Preset(
            "fig15-rotation",
            Circle(2.0, 13.0 / 8.0),
            Circle(-1.0, 21.0 / 8.0),
            Mobius(249.0, -667.0, 192.0, -215.0),
            MotionKind.ROTATION,
            "contoured rotation from circles at 2 and -1, radii 13/8 and 21/8",
            discrepancy=True,
            note=(
                "printed as (-249z - 667)/(192z + 215), which is the z -> -z mirror of "
                "the composition (249z - 667)/(192z - 215) stored here"
            ),
        ),
        Preset(
            "fig16-dini-rotation",
            Circle(4 * _PI + _PI / 8.0, 4 * _PI),
            Circle(_PI / 8.0, 4 * _PI),
            Mobius(-264 * _PI, 1057 * pi2, -64.0, 8 * _PI),
            MotionKind.ROTATION,
            "rotation on Dini's surface, pruned to theta in [0, 7*pi]",
            discrepancy=True,
            note=(
                "printed numerator coefficient is -261*pi; composing the stated circles "
                "yields -264*pi, suspected typo in the printed form"
            ),
        ),
        Preset(
            "fig16-dini-rotation-mirror",
            Circle(-17 * _PI / 8.0, 4 * _PI),
            Circle(15 * _PI / 8.0, 4 * _PI),
            Mobius(-136 * _PI, -769 * pi2, 64.0, -120 * _PI),
            MotionKind.ROTATION,
            "mirrored rotation on Dini's surface, pruned to theta in [-5*pi, 2*pi]",
        ),
        Preset(
            "fig17-dini-translation",
            Circle(0.0, 3.0),
            Circle(0.0, 1.0),
            Mobius.scaling(1.0 / 9.0),
            MotionKind.TRANSLATION,
            "translation z/9 on Dini's surface, pruned to theta in [0, 15*pi]",
        ),
    ]


PRESETS: dict[str, Preset] = {p.name: p for p in figure_presets()}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValueError(f"unknown preset {name!r}; known presets: {known}") from None
