"""Triangulated surfaces with per-vertex colors, and ASCII PLY files.

Tessellation lays a (nu x nv) parameter grid over a surface, splits each quad
along the (u, v) -> (u+1, v+1) diagonal, drops zero-area triangles, and welds
the seam of rotational surfaces when the u-range spans a full turn. Vertex
colors come from the coloring evaluated at the stored (u, v) parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Union

import numpy as np

from .cplx import TWO_PI, Mobius
from .colorings import (
    ColorSpec,
    Coloring,
    Motion,
    disc_hue_field,
    hue_to_rgb_field,
    phase_hue_field,
    pseudo_hue_field,
    _motion_pq,
)

_DEGENERATE_AREA = 1e-14
_FULL_TURN_TOL = 1e-12

DEFAULT_COLOR = (200, 200, 200)


@dataclass(frozen=True)
class Pseudosphere:
    """Tractrix surface of revolution; u = rim angle, v = tractrix arclength >= 0."""


@dataclass(frozen=True)
class Dini:
    """Helically twisted pseudosphere; u = unrolled rim angle, v = arclength >= 0."""

    twist: float = 0.15


@dataclass(frozen=True)
class Hemisphere:
    """Upper unit half-sphere; u = azimuth, v = polar angle from the apex in [0, pi/2]."""


@dataclass(frozen=True)
class Sphere:
    """Unit sphere; u = azimuth, v = polar angle from the north pole in [0, pi]."""


@dataclass(frozen=True)
class DiscLandscape:
    """Disc with one disc coloring's hue fraction as height; u = azimuth, v = radius."""

    motion: Motion = field(default_factory=Mobius.identity)
    height_variant: int = 2
    exaggeration: float = 0.35
    conjugation_omitted: bool = False


@dataclass(frozen=True)
class PlaneLandscape:
    """Plane window with clamped log-modulus of the plotted map as height; u, v = re, im."""

    motion: Motion = field(default_factory=Mobius.identity)
    ceiling: float = 6.0
    scale: float = 0.25


Surface = Union[Pseudosphere, Dini, Hemisphere, Sphere, DiscLandscape, PlaneLandscape]


@dataclass
class Mesh:
    """Vertices, parallel per-vertex colors, triangle faces, and (u, v) parameters."""

    vertices: list
    faces: list
    colors: list
    uv: list


def _landscape_height(surface: PlaneLandscape, Z: np.ndarray) -> np.ndarray:
    P, Q = _motion_pq(surface.motion, Z, np.ones_like(Z))
    with np.errstate(divide="ignore", invalid="ignore"):
        mod = np.abs(P) / np.abs(Q)
    h = np.where(np.isfinite(mod), np.log1p(np.where(np.isfinite(mod), mod, 0.0)), surface.ceiling)
    return np.minimum(h, surface.ceiling) * surface.scale


def _positions(surface: Surface, U: np.ndarray, V: np.ndarray):
    """Embed a parameter grid; returns (x, y, z) float arrays of U's shape."""
    if isinstance(surface, (Pseudosphere, Dini)):
        r = 1.0 / np.cosh(V)
        z = V - np.tanh(V)
        if isinstance(surface, Dini):
            z = z + surface.twist * U
        return r * np.cos(U), r * np.sin(U), z
    if isinstance(surface, (Hemisphere, Sphere)):
        s = np.sin(V)
        return s * np.cos(U), s * np.sin(U), np.cos(V)
    if isinstance(surface, DiscLandscape):
        W = V * np.exp(1j * U)
        hue = disc_hue_field(surface.motion, W, surface.height_variant, surface.conjugation_omitted)
        return V * np.cos(U), V * np.sin(U), (hue / TWO_PI) * surface.exaggeration
    if isinstance(surface, PlaneLandscape):
        return U, V, _landscape_height(surface, U + 1j * V)
    raise TypeError(f"unknown surface {surface!r}")


def _validate_ranges(surface: Surface, u_range, v_range):
    u0, u1 = map(float, u_range)
    v0, v1 = map(float, v_range)
    if not (u0 < u1 and v0 < v1):
        raise ValueError("parameter ranges must be increasing")
    if isinstance(surface, (Pseudosphere, Dini)) and v0 < 0.0:
        raise ValueError("the physical surface requires sigma >= 0")
    if isinstance(surface, Hemisphere) and not (0.0 <= v0 and v1 <= math.pi / 2 + 1e-12):
        raise ValueError("hemisphere polar angle runs from 0 to pi/2")
    if isinstance(surface, Sphere) and not (0.0 <= v0 and v1 <= math.pi + 1e-12):
        raise ValueError("sphere polar angle runs from 0 to pi")
    if isinstance(surface, DiscLandscape) and not (0.0 <= v0 and v1 <= 1.0 + 1e-12):
        raise ValueError("disc radius runs from 0 to 1")
    return (u0, u1), (v0, v1)


def _welds(surface: Surface, u0: float, u1: float) -> bool:
    if isinstance(surface, (Dini, PlaneLandscape)):
        return False
    return abs((u1 - u0) - TWO_PI) < _FULL_TURN_TOL


def tessellate(surface: Surface, u_range, v_range, nu: int, nv: int) -> Mesh:
    """Grid mesh of nu x nv vertices and 2(nu-1)(nv-1) triangles (minus degenerates).

    When the u-range spans a full turn on a rotational surface, the last
    column is welded onto the first, leaving (nu-1) x nv unique vertices with
    the same triangle count.
    """
    if nu < 2 or nv < 2:
        raise ValueError("nu and nv must be at least 2")
    (u0, u1), (v0, v1) = _validate_ranges(surface, u_range, v_range)
    weld = _welds(surface, u0, u1)
    ncols = nu - 1 if weld else nu
    us = np.linspace(u0, u1, nu)[:ncols]
    vs = np.linspace(v0, v1, nv)
    V, U = np.meshgrid(vs, us, indexing="ij")  # rows are v, columns are u

    x, y, z = _positions(surface, U, V)
    flat = lambda a: a.ravel().tolist()
    vertices = list(zip(flat(x), flat(y), flat(z)))
    uv = list(zip(flat(U), flat(V)))

    nq = ncols if weld else ncols - 1
    jj, ii = np.meshgrid(np.arange(nv - 1), np.arange(nq), indexing="ij")
    i2 = (ii + 1) % ncols if weld else ii + 1
    v00 = jj * ncols + ii
    v01 = jj * ncols + i2
    v11 = (jj + 1) * ncols + i2
    v10 = (jj + 1) * ncols + ii
    tris = np.stack(
        [np.stack([v00, v01, v11], axis=-1), np.stack([v00, v11, v10], axis=-1)],
        axis=-2,
    ).reshape(-1, 3)

    pos = np.column_stack([x.ravel(), y.ravel(), z.ravel()])
    e1 = pos[tris[:, 1]] - pos[tris[:, 0]]
    e2 = pos[tris[:, 2]] - pos[tris[:, 0]]
    areas = 0.5 * np.linalg.norm(np.cross(e1, e2), axis=1)
    tris = tris[areas > _DEGENERATE_AREA]

    faces = list(zip(tris[:, 0].tolist(), tris[:, 1].tolist(), tris[:, 2].tolist()))
    return Mesh(vertices, faces, [DEFAULT_COLOR] * len(vertices), uv)


def colorize(mesh: Mesh, spec: ColorSpec, surface: Surface) -> Mesh:
    """New mesh with vertex colors from the coloring evaluated at each (u, v)."""
    U = np.array([p[0] for p in mesh.uv])
    V = np.array([p[1] for p in mesh.uv])
    f = spec.motion
    c = spec.coloring
    black = None

    if isinstance(surface, (Pseudosphere, Dini)):
        Z = U + 1j * np.exp(V)
        if c is Coloring.PSEUDO:
            hue, black = pseudo_hue_field(f, Z)
        elif c is Coloring.COMPLEX_PHASE:
            hue, black = phase_hue_field(f, Z, np.ones_like(Z))
        else:
            raise ValueError(f"{c} does not apply to the pseudosphere family")
    elif isinstance(surface, Sphere):
        if c is not Coloring.COMPLEX_PHASE:
            raise ValueError(f"{c} does not apply to the sphere")
        # point at infinity sits at the north pole: P/Q with both zero means infinity
        P = np.sin(V) * np.exp(1j * U)
        Q = (1.0 - np.cos(V)).astype(complex)
        pole = (P == 0) & (Q == 0)
        P, Q = np.where(pole, 1.0, P), np.where(pole, 0.0, Q)
        hue, black = phase_hue_field(f, P, Q)
    elif isinstance(surface, Hemisphere):
        if c is Coloring.BELTRAMI_V1:
            variant = 1
        elif c is Coloring.BELTRAMI_V2:
            variant = 2
        else:
            raise ValueError(f"{c} does not apply to the half-sphere")
        W = np.sin(V) * np.exp(1j * U) / (1.0 + np.cos(V))
        hue = disc_hue_field(f, W, variant, spec.conjugation_omitted)
    elif isinstance(surface, DiscLandscape):
        if c is Coloring.DISC_ASYMPTOTIC:
            variant = 1
        elif c is Coloring.DISC_ULTRAPARALLEL:
            variant = 2
        else:
            raise ValueError(f"{c} does not apply to the disc landscape")
        W = V * np.exp(1j * U)
        hue = disc_hue_field(f, W, variant, spec.conjugation_omitted)
    elif isinstance(surface, PlaneLandscape):
        if c is not Coloring.COMPLEX_PHASE:
            raise ValueError(f"{c} does not apply to the plane landscape")
        Z = U + 1j * V
        hue, black = phase_hue_field(f, Z, np.ones_like(Z))
    else:
        raise TypeError(f"unknown surface {surface!r}")

    rgb = hue_to_rgb_field(hue, black)
    colors = list(zip(rgb[:, 0].tolist(), rgb[:, 1].tolist(), rgb[:, 2].tolist()))
    return replace(mesh, colors=colors)


def write_ply(mesh: Mesh, path) -> None:
    """ASCII PLY 1.0 with float xyz positions and uchar RGB vertex colors."""
    lines = [
        "ply",
        "format ascii 1.0",
        f"element vertex {len(mesh.vertices)}",
        "property float x",
        "property float y",
        "property float z",
        "property uchar red",
        "property uchar green",
        "property uchar blue",
        f"element face {len(mesh.faces)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    lines.extend(
        f"{x:.9g} {y:.9g} {z:.9g} {r} {g} {b}"
        for (x, y, z), (r, g, b) in zip(mesh.vertices, mesh.colors)
    )
    lines.extend(f"3 {a} {b} {c}" for a, b, c in mesh.faces)
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write("\n".join(lines))
            fh.write("\n")
    except OSError as e:
        raise OSError(f"failed to write PLY to {path}: {e}") from e


def read_ply(path) -> Mesh:
    """Parse an ASCII PLY written by ``write_ply`` (positions, colors, faces)."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise OSError(f"failed to read PLY from {path}: {e}") from e
    if not lines or lines[0] != "ply":
        raise ValueError(f"{path} is not a PLY file")
    nv = nf = 0
    k = 0
    for k, line in enumerate(lines):
        parts = line.split()
        if parts[:2] == ["element", "vertex"]:
            nv = int(parts[2])
        elif parts[:2] == ["element", "face"]:
            nf = int(parts[2])
        elif parts == ["end_header"]:
            break
    body = lines[k + 1 :]
    vertices, colors, faces = [], [], []
    for line in body[:nv]:
        x, y, z, r, g, b = line.split()
        vertices.append((float(x), float(y), float(z)))
        colors.append((int(r), int(g), int(b)))
    for line in body[nv : nv + nf]:
        parts = line.split()
        if parts[0] != "3":
            raise ValueError("only triangle faces are supported")
        faces.append((int(parts[1]), int(parts[2]), int(parts[3])))
    return Mesh(vertices, faces, colors, [])
