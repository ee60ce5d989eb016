import math

import numpy as np
import pytest

from hyperphase.colorings import BLACK, ColorSpec, Coloring, color_pseudosphere, height_disc
from hyperphase.cplx import TWO_PI, Mobius
from hyperphase.mesh import (
    Dini,
    DiscLandscape,
    Hemisphere,
    Mesh,
    PlaneLandscape,
    Pseudosphere,
    Sphere,
    colorize,
    read_ply,
    tessellate,
    write_ply,
)
from hyperphase.models import PseudoCoord
from hyperphase.motions import get_preset

from fitutil import circ_dist, rgb_to_hue

PI = math.pi
IDENT = Mobius.identity()
SIGMA = (0.0, 3.0)
FULL = (0.0, TWO_PI)


def test_welded_pseudosphere_counts():
    m = tessellate(Pseudosphere(), FULL, (0.0, 1.0), nu=4, nv=3)
    assert len(m.vertices) == 9
    assert len(m.faces) == 12
    assert len(m.colors) == len(m.vertices)


def test_unwelded_counts_and_euler_characteristic():
    nu, nv = 7, 5
    m = tessellate(Pseudosphere(), (0.0, 3.0), (0.0, 2.0), nu, nv)
    assert len(m.vertices) == nu * nv
    assert len(m.faces) == 2 * (nu - 1) * (nv - 1)
    edges = set()
    for a, b, c in m.faces:
        edges |= {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))}
    assert len(m.vertices) - len(edges) + len(m.faces) == 1  # disc with boundary


def test_weld_leaves_no_duplicate_positions():
    m = tessellate(Pseudosphere(), FULL, (0.0, 2.0), nu=24, nv=6)
    seen = {tuple(round(c, 12) for c in v) for v in m.vertices}
    assert len(seen) == len(m.vertices)


def test_face_indices_in_range_and_nondegenerate():
    m = tessellate(Dini(0.15), (0.0, 7 * PI), SIGMA, 40, 12)
    n = len(m.vertices)
    pos = np.array(m.vertices)
    for a, b, c in m.faces:
        assert 0 <= a < n and 0 <= b < n and 0 <= c < n
        area = 0.5 * np.linalg.norm(np.cross(pos[b] - pos[a], pos[c] - pos[a]))
        assert area > 1e-14


def test_dini_zero_twist_matches_pseudosphere():
    a = tessellate(Dini(0.0), (0.0, 5.0), (0.0, 2.5), 20, 9)
    b = tessellate(Pseudosphere(), (0.0, 5.0), (0.0, 2.5), 20, 9)
    assert np.max(np.abs(np.array(a.vertices) - np.array(b.vertices))) < 1e-12


def test_dini_helical_symmetry():
    twist = 0.15
    m = tessellate(Dini(twist), (0.0, 4 * PI), (0.0, 2.0), nu=9, nv=4)
    pos = np.array(m.vertices)
    ncols = 9
    for j in range(4):
        lo = pos[j * ncols + 0]  # theta = 0
        hi = pos[j * ncols + 4]  # theta = 2*pi
        assert abs(hi[0] - lo[0]) < 1e-12 and abs(hi[1] - lo[1]) < 1e-12
        assert abs((hi[2] - lo[2]) - twist * TWO_PI) < 1e-12


def test_sphere_grid_drops_polar_degenerates():
    nu, nv = 17, 9
    m = tessellate(Sphere(), FULL, (0.0, PI), nu, nv)
    # each pole row loses one of its two triangles per quad
    assert len(m.faces) == 2 * (nu - 1) * (nv - 1) - 2 * (nu - 1)


def test_tessellate_validation():
    with pytest.raises(ValueError):
        tessellate(Pseudosphere(), FULL, (-1.0, 2.0), 8, 4)
    with pytest.raises(ValueError):
        tessellate(Pseudosphere(), (1.0, 0.0), (0.0, 1.0), 8, 4)
    with pytest.raises(ValueError):
        tessellate(Pseudosphere(), FULL, (0.0, 1.0), 1, 4)
    with pytest.raises(ValueError):
        tessellate(Hemisphere(), FULL, (0.0, PI), 8, 4)
    with pytest.raises(ValueError):
        tessellate(DiscLandscape(IDENT), FULL, (0.0, 2.0), 8, 4)


def test_rim_coloring_depends_only_on_theta():
    m = tessellate(Pseudosphere(), FULL, SIGMA, 24, 8)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, IDENT), Pseudosphere())
    ncols = 23
    for i in range(ncols):
        column = [colored.colors[j * ncols + i] for j in range(8)]
        assert len(set(column)) == 1


def test_rim_ring_black_fraction_for_shift():
    shift = get_preset("fig10-limit-rotation").expected  # z - 2
    m = tessellate(Pseudosphere(), FULL, SIGMA, 512, 4)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, shift), Pseudosphere())
    ncols = 511
    rim = colored.colors[:ncols]  # sigma = 0 row
    black = sum(1 for c in rim if c == (0, 0, 0))
    assert abs(black / ncols - 1.0 / PI) < 0.02


def test_fig17_dini_preset_has_no_black_vertices():
    preset = get_preset("fig17-dini-translation")
    m = tessellate(Dini(0.15), (0.0, 15 * PI), SIGMA, 64, 16)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, preset.expected), Dini(0.15))
    assert all(c != (0, 0, 0) for c in colored.colors)


def test_colorize_matches_scalar_rim_coloring():
    shift = get_preset("fig10-limit-rotation").expected
    m = tessellate(Pseudosphere(), FULL, SIGMA, 40, 6)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, shift), Pseudosphere())
    from hyperphase.colorings import hue_to_rgb

    for (theta, sigma), rgb in zip(m.uv, colored.colors):
        want = hue_to_rgb(color_pseudosphere(shift, PseudoCoord(theta, sigma)))
        assert max(abs(a - b) for a, b in zip(rgb, want)) <= 1


def test_color_continuity_on_smooth_portraits():
    m = tessellate(Pseudosphere(), FULL, SIGMA, 256, 24)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, IDENT), Pseudosphere())
    hues = [rgb_to_hue(c) for c in colored.colors]
    for a, b, c in colored.faces:
        for i, j in ((a, b), (b, c), (a, c)):
            assert circ_dist(hues[i], hues[j]) < 0.2


def test_disc_landscape_heights():
    surface = DiscLandscape(IDENT, height_variant=2, exaggeration=0.35)
    m = tessellate(surface, FULL, (0.0, 1.0), 32, 9)
    for (phi, rho), (x, y, z) in zip(m.uv, m.vertices):
        w = rho * complex(math.cos(phi), math.sin(phi))
        assert abs(complex(x, y) - w) < 1e-12
        assert abs(z - 0.35 * height_disc(IDENT, w, 2)) < 1e-9
    # along the real diameter the ultraparallel height is constant: it is the
    # image of the half-plane circle |z| = 1
    ridge = [v[2] for (phi, rho), v in zip(m.uv, m.vertices) if abs(math.sin(phi)) < 1e-12 and rho > 0]
    assert max(ridge) - min(ridge) < 1e-12


def test_plane_landscape_heights_clamp():
    inv = Mobius(0.0, 1.0, 1.0, 0.0)  # 1/z has a pole at the window center
    surface = PlaneLandscape(inv, ceiling=6.0, scale=0.25)
    m = tessellate(surface, (-1.0, 1.0), (-1.0, 1.0), 9, 9)
    zs = [v[2] for v in m.vertices]
    assert max(zs) <= 6.0 * 0.25 + 1e-12
    center = [v[2] for (u, vv), v in zip(m.uv, m.vertices) if abs(u) < 1e-12 and abs(vv) < 1e-12]
    assert center == [6.0 * 0.25]


def test_hemisphere_colorize_matches_disc_lift():
    from hyperphase.colorings import color_beltrami, hue_to_rgb
    from hyperphase.models import SpherePoint

    m = tessellate(Hemisphere(), FULL, (0.0, PI / 2), 16, 6)
    colored = colorize(m, ColorSpec(Coloring.BELTRAMI_V1, IDENT), Hemisphere())
    for (phi, t), rgb in zip(m.uv, colored.colors):
        p = SpherePoint(math.sin(t) * math.cos(phi), math.sin(t) * math.sin(phi), math.cos(t))
        want = hue_to_rgb(color_beltrami(IDENT, p, 1))
        assert max(abs(a - b) for a, b in zip(rgb, want)) <= 1


def test_colorize_rejects_mismatched_combinations():
    m = tessellate(Pseudosphere(), FULL, SIGMA, 8, 4)
    with pytest.raises(ValueError):
        colorize(m, ColorSpec(Coloring.DISC_ASYMPTOTIC, IDENT), Pseudosphere())
    s = tessellate(Sphere(), FULL, (0.0, PI), 8, 4)
    with pytest.raises(ValueError):
        colorize(s, ColorSpec(Coloring.PSEUDO, IDENT), Sphere())


def test_ply_format_and_round_trip(tmp_path):
    mesh = Mesh(
        vertices=[(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.5)],
        faces=[(0, 1, 2)],
        colors=[(255, 0, 0), (0, 255, 0), (0, 0, 255)],
        uv=[],
    )
    path = tmp_path / "tri.ply"
    write_ply(mesh, path)
    text = path.read_text().splitlines()
    assert text[0] == "ply"
    assert "element vertex 3" in text
    assert "element face 1" in text
    assert text[-1] == "3 0 1 2"
    back = read_ply(path)
    assert len(back.vertices) == 3 and len(back.faces) == 1
    assert back.colors == mesh.colors
    assert back.faces == mesh.faces


def test_ply_round_trip_of_rendered_figure(tmp_path):
    preset = get_preset("fig8-rotation")
    m = tessellate(Pseudosphere(), FULL, SIGMA, 48, 12)
    colored = colorize(m, ColorSpec(Coloring.PSEUDO, preset.expected), Pseudosphere())
    path = tmp_path / "fig8.ply"
    write_ply(colored, path)
    back = read_ply(path)
    assert len(back.vertices) == len(colored.vertices)
    assert back.colors == colored.colors
    assert back.faces == colored.faces
