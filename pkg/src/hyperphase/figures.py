"""Canonical figure scenes: stable names, fixed framing, reproducible output.

Each scene renders one panel per name. Where a source figure contains several
panels, the catalog picks a canonical one and the others remain reachable
through ``render`` flags; framing windows and mesh ranges are fixed here so
that outputs are bit-stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import mesh as meshmod
from . import raster
from .cplx import Mobius
from .colorings import CircleInversionMap, ColorSpec, Coloring
from .models import DISC_INVERSION_CIRCLE
from .motions import get_preset

_PI = math.pi


@dataclass(frozen=True)
class FigureScene:
    name: str
    kind: str  # "image" or "mesh"
    description: str
    build: Callable

    def __call__(self, res: int | None = None, supersample: int | None = None):
        return self.build(res, supersample)


def _image(spec, domain_factory, default_res=512, default_ss=2, contours=None):
    def build(res, ss):
        domain = domain_factory(res or default_res)
        ss = ss or default_ss
        if contours is None:
            return raster.render(spec, domain, ss)
        height_variant, bands = contours
        return raster.render_contours(spec, height_variant, bands, domain, ss)

    return build


def _mesh(surface, spec, u_range, v_range, default_nu, default_nv):
    def build(res, _ss):
        nu = res or default_nu
        nv = max(2, round(nu * default_nv / default_nu))
        grid = meshmod.tessellate(surface, u_range, v_range, nu, nv)
        return meshmod.colorize(grid, spec, surface)

    return build


def _disc(res):
    return raster.DiscDomain(res)


def _scenes() -> list[FigureScene]:
    ident = Mobius.identity()
    inv_k = CircleInversionMap(DISC_INVERSION_CIRCLE)
    rot8 = get_preset("fig8-rotation").expected
    limit10 = get_preset("fig10-limit-rotation").expected
    down3 = get_preset("fig11-translation").expected
    up4 = get_preset("fig12-translation").expected
    rot15 = get_preset("fig15-rotation").expected
    dini16 = get_preset("fig16-dini-rotation").expected
    dini16m = get_preset("fig16-dini-rotation-mirror").expected
    dini17 = get_preset("fig17-dini-translation").expected

    pseudo_surface = meshmod.Pseudosphere()
    full_turn = (0.0, 2 * _PI)
    sigma = (0.0, 3.0)

    return [
        FigureScene(
            "fig1",
            "image",
            "complex phase portrait of the identity on [-2, 2]^2",
            _image(ColorSpec(Coloring.COMPLEX_PHASE, ident), lambda r: raster.RectDomain(-2, 2, -2, 2, r)),
        ),
        FigureScene(
            "fig2",
            "mesh",
            "analytic landscape of the disc inversion: phase color, clamped log-modulus height",
            _mesh(
                meshmod.PlaneLandscape(inv_k),
                ColorSpec(Coloring.COMPLEX_PHASE, inv_k),
                (-3.0, 3.0),
                (-3.0, 3.0),
                192,
                192,
            ),
        ),
        FigureScene(
            "fig3",
            "mesh",
            "phase portrait of the identity on the unit sphere",
            _mesh(
                meshmod.Sphere(),
                ColorSpec(Coloring.COMPLEX_PHASE, ident),
                full_turn,
                (0.0, _PI),
                384,
                192,
            ),
        ),
        FigureScene(
            "fig4",
            "image",
            "rim coloring of the identity seen in the half-plane strip",
            _image(
                ColorSpec(Coloring.PSEUDO, ident),
                lambda r: raster.HalfPlaneDomain(-_PI, 3 * _PI, 0.02, 4.0, r),
            ),
        ),
        FigureScene(
            "fig5",
            "mesh",
            "naive phase coloring of the identity on the pseudosphere",
            _mesh(pseudo_surface, ColorSpec(Coloring.COMPLEX_PHASE, ident), full_turn, sigma, 384, 96),
        ),
        FigureScene(
            "fig6",
            "mesh",
            "rim coloring of the identity on the pseudosphere",
            _mesh(pseudo_surface, ColorSpec(Coloring.PSEUDO, ident), full_turn, sigma, 384, 96),
        ),
        FigureScene(
            "fig7",
            "image",
            "rim coloring of the rotation 4*pi^2/(2*pi - z) in the half-plane",
            _image(
                ColorSpec(Coloring.PSEUDO, rot8),
                lambda r: raster.HalfPlaneDomain(-2 * _PI, 4 * _PI, 0.02, 4 * _PI, r),
            ),
        ),
        FigureScene(
            "fig8",
            "mesh",
            "rim coloring of the rotation 4*pi^2/(2*pi - z) on the pseudosphere",
            _mesh(pseudo_surface, ColorSpec(Coloring.PSEUDO, rot8), full_turn, sigma, 384, 96),
        ),
        FigureScene(
            "fig9",
            "image",
            "asymptotic disc coloring of the identity (a true phase portrait)",
            _image(ColorSpec(Coloring.DISC_ASYMPTOTIC, ident), _disc),
        ),
        FigureScene(
            "fig10",
            "image",
            "asymptotic disc coloring of the limit rotation z - 2",
            _image(ColorSpec(Coloring.DISC_ASYMPTOTIC, limit10), _disc),
        ),
        FigureScene(
            "fig11",
            "image",
            "asymptotic disc coloring of the translation z/3",
            _image(ColorSpec(Coloring.DISC_ASYMPTOTIC, down3), _disc),
        ),
        FigureScene(
            "fig12",
            "image",
            "asymptotic disc coloring of the translation 4z",
            _image(ColorSpec(Coloring.DISC_ASYMPTOTIC, up4), _disc),
        ),
        FigureScene(
            "fig13",
            "mesh",
            "landscape of z/3: ultraparallel coloring over asymptotic height",
            _mesh(
                meshmod.DiscLandscape(down3, height_variant=1),
                ColorSpec(Coloring.DISC_ULTRAPARALLEL, down3),
                full_turn,
                (0.0, 1.0),
                256,
                96,
            ),
        ),
        FigureScene(
            "fig14",
            "mesh",
            "landscape of 4z: asymptotic coloring over ultraparallel height",
            _mesh(
                meshmod.DiscLandscape(up4, height_variant=2),
                ColorSpec(Coloring.DISC_ASYMPTOTIC, up4),
                full_turn,
                (0.0, 1.0),
                256,
                96,
            ),
        ),
        FigureScene(
            "fig15",
            "image",
            "contour composite of the rotation (249z - 667)/(192z - 215): asymptotic color, ultraparallel bands",
            _image(ColorSpec(Coloring.DISC_ASYMPTOTIC, rot15), _disc, contours=(2, 12)),
        ),
        FigureScene(
            "fig15-identity",
            "image",
            "contour composite of the identity: ultraparallel color, asymptotic bands",
            _image(ColorSpec(Coloring.DISC_ULTRAPARALLEL, ident), _disc, contours=(1, 12)),
        ),
        FigureScene(
            "fig16",
            "mesh",
            "rotation on Dini's surface, theta pruned to [0, 7*pi]",
            _mesh(
                meshmod.Dini(twist=0.15),
                ColorSpec(Coloring.PSEUDO, dini16),
                (0.0, 7 * _PI),
                sigma,
                896,
                128,
            ),
        ),
        FigureScene(
            "fig16-mirror",
            "mesh",
            "mirrored rotation on Dini's surface twisted the other way, theta in [-5*pi, 2*pi]",
            _mesh(
                meshmod.Dini(twist=-0.15),
                ColorSpec(Coloring.PSEUDO, dini16m),
                (-5 * _PI, 2 * _PI),
                sigma,
                896,
                128,
            ),
        ),
        FigureScene(
            "fig17",
            "mesh",
            "translation z/9 on Dini's surface, theta pruned to [0, 15*pi]",
            _mesh(
                meshmod.Dini(twist=0.15),
                ColorSpec(Coloring.PSEUDO, dini17),
                (0.0, 15 * _PI),
                sigma,
                1024,
                96,
            ),
        ),
    ]


FIGURES: dict[str, FigureScene] = {s.name: s for s in _scenes()}


def build_figure(name: str, res: int | None = None, supersample: int | None = None):
    """Build a catalog scene; returns (kind, Image-or-Mesh)."""
    try:
        scene = FIGURES[name]
    except KeyError:
        known = ", ".join(sorted(FIGURES))
        raise ValueError(f"unknown figure {name!r}; known figures: {known}") from None
    return scene.kind, scene(res, supersample)
