import math
import random

import pytest

from hyperphase.cplx import INF, Circle, Line, Mobius, distance_to
from hyperphase.motions import (
    MotionKind,
    classify,
    fixed_points,
    get_preset,
    motion_from_reflections,
    figure_presets,
)

PI = math.pi


def _pointwise_close(m1, m2, tol=1e-10, seed=0, n=100):
    rng = random.Random(seed)
    k = 0
    while k < n:
        z = complex(rng.uniform(-8, 8), rng.uniform(0.05, 8))
        if abs(m1.c * z + m1.d) < 1e-2 * max(abs(m1.c), abs(m1.d)):
            continue
        if abs(m2.c * z + m2.d) < 1e-2 * max(abs(m2.c), abs(m2.d)):
            continue
        if abs(m1(z) - m2(z)) > tol * max(1.0, abs(m2(z))):
            return False
        k += 1
    return True


def test_concentric_circles_give_scalings():
    m = motion_from_reflections(Circle(0.0, math.sqrt(3)), Circle(0.0, 1.0))
    assert _pointwise_close(m, Mobius.scaling(1 / 3))
    m = motion_from_reflections(Circle(0.0, 1.0), Circle(0.0, 2.0))
    assert _pointwise_close(m, Mobius.scaling(4.0))
    m = motion_from_reflections(Circle(0.0, 3.0), Circle(0.0, 1.0))
    assert _pointwise_close(m, Mobius.scaling(1 / 9))


def test_radius_2pi_circles_give_the_rotation():
    m = motion_from_reflections(Circle(0.0, 2 * PI), Circle(2 * PI, 2 * PI))
    # independent cross-check: composing the two inversions by hand gives
    # z -> 8 pi^3 / (-2 pi z + 4 pi^2) = 4 pi^2 / (2 pi - z)
    assert _pointwise_close(m, Mobius(0.0, 4 * PI * PI, -1.0, 2 * PI))


def test_concentric_property_off_center():
    rng = random.Random(11)
    for _ in range(50):
        q = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        r1, r2 = rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0)
        m = motion_from_reflections(Circle(q, r1), Circle(q, r2))
        k = (r2 / r1) ** 2
        expected = Mobius(k, q - k * q, 0.0, 1.0)  # z -> q + k (z - q)
        assert _pointwise_close(m, expected, tol=1e-10, seed=12)


def test_parallel_vertical_lines_translate():
    rng = random.Random(13)
    for _ in range(50):
        a1, a2 = rng.uniform(-5, 5), rng.uniform(-5, 5)
        if abs(a1 - a2) < 1e-6:
            continue
        m = motion_from_reflections(Line.vertical(a1), Line.vertical(a2))
        expected = Mobius.translation(2 * (a2 - a1))
        assert _pointwise_close(m, expected, tol=1e-12, seed=14)


def test_line_order_open_question():
    assert motion_from_reflections(Line.vertical(0.0), Line.vertical(1.0)).almost_equal(
        Mobius.translation(2.0)
    )
    assert motion_from_reflections(Line.vertical(1.0), Line.vertical(0.0)).almost_equal(
        Mobius.translation(-2.0)
    )


def test_identical_curves_rejected():
    with pytest.raises(ValueError):
        motion_from_reflections(Circle(1.0, 2.0), Circle(1.0, 2.0))
    with pytest.raises(ValueError):
        motion_from_reflections(Line.vertical(3.0), Line.vertical(3.0))


def test_classify_examples():
    assert classify(Mobius.scaling(1 / 3)) is MotionKind.TRANSLATION  # tr^2/det = 16/3
    assert classify(Mobius.translation(-2.0)) is MotionKind.LIMIT_ROTATION
    assert classify(Mobius(0.0, 4 * PI * PI, -1.0, 2 * PI)) is MotionKind.ROTATION  # tr^2/det = 1
    assert classify(Mobius.identity()) is MotionKind.IDENTITY


def test_classify_rejects_non_h_motion():
    with pytest.raises(ValueError):
        classify(Mobius(1 + 2j, 0.0, 0.0, 1.0))


def test_fixed_points_examples():
    assert fixed_points(Mobius.translation(-2.0)) == [INF]
    pts = fixed_points(Mobius.scaling(4.0))
    assert pts[0] == 0.0 and pts[1] is INF
    with pytest.raises(ValueError):
        fixed_points(Mobius.identity())


def test_fixed_points_of_fig15_pair():
    m = motion_from_reflections(Circle(2.0, 13 / 8), Circle(-1.0, 21 / 8))
    pts = sorted((complex(p) for p in fixed_points(m)), key=lambda w: w.imag)
    x, y = 29.0 / 24.0, math.sqrt(145.0 / 72.0)
    assert abs(pts[0] - complex(x, -y)) < 1e-9
    assert abs(pts[1] - complex(x, y)) < 1e-9


def test_fixed_points_lie_on_defining_curves():
    rng = random.Random(17)
    checked = 0
    while checked < 50:
        c1 = Circle(rng.uniform(-4, 4), rng.uniform(0.5, 3.0))
        c2 = Circle(rng.uniform(-4, 4), rng.uniform(0.5, 3.0))
        d = abs(c1.center - c2.center)
        if not (abs(c1.radius - c2.radius) + 1e-2 < d < c1.radius + c2.radius - 1e-2):
            continue  # want transversally intersecting pairs
        m = motion_from_reflections(c1, c2)
        for p in fixed_points(m):
            assert distance_to(c1, p) < 1e-9
            assert distance_to(c2, p) < 1e-9
        checked += 1


def _geometric_kind(l1, l2):
    """Independent geometric oracle for the motion kind of an h-line pair."""
    if isinstance(l1, Line) and isinstance(l2, Line):
        return MotionKind.LIMIT_ROTATION
    if isinstance(l1, Line) or isinstance(l2, Line):
        line, circ = (l1, l2) if isinstance(l1, Line) else (l2, l1)
        gap = abs(line.base.real - circ.center.real)
        if abs(gap - circ.radius) < 1e-9:
            return MotionKind.LIMIT_ROTATION
        return MotionKind.ROTATION if gap < circ.radius else MotionKind.TRANSLATION
    d = abs(l1.center - l2.center)
    lo, hi = abs(l1.radius - l2.radius), l1.radius + l2.radius
    if abs(d - lo) < 1e-9 or abs(d - hi) < 1e-9:
        return MotionKind.LIMIT_ROTATION
    return MotionKind.ROTATION if lo < d < hi else MotionKind.TRANSLATION


def test_classification_matches_geometry_on_random_pairs():
    rng = random.Random(19)
    n = 0
    while n < 200:
        kind = rng.random()
        if kind < 0.1:
            l1, l2 = Line.vertical(rng.uniform(-4, 4)), Line.vertical(rng.uniform(-4, 4))
            if abs(l1.base.real - l2.base.real) < 1e-3:
                continue
        elif kind < 0.3:
            l1 = Line.vertical(rng.uniform(-4, 4))
            l2 = Circle(rng.uniform(-4, 4), rng.uniform(0.3, 3.0))
            if abs(abs(l1.base.real - l2.center.real) - l2.radius) < 1e-3:
                continue
        else:
            l1 = Circle(rng.uniform(-4, 4), rng.uniform(0.3, 3.0))
            l2 = Circle(rng.uniform(-4, 4), rng.uniform(0.3, 3.0))
            d = abs(l1.center - l2.center)
            if d < 1e-3 and abs(l1.radius - l2.radius) < 1e-3:
                continue
            if abs(d - (l1.radius + l2.radius)) < 1e-3:
                continue
            if abs(d - abs(l1.radius - l2.radius)) < 1e-3:
                continue
        assert classify(motion_from_reflections(l1, l2)) is _geometric_kind(l1, l2)
        n += 1


def test_tangent_circles_give_limit_rotation():
    m = motion_from_reflections(Circle(0.0, 1.0), Circle(3.0, 2.0))
    assert classify(m) is MotionKind.LIMIT_ROTATION


def test_composed_motions_preserve_upper_half_plane():
    rng = random.Random(23)
    pairs = []
    while len(pairs) < 10:
        l1 = Circle(rng.uniform(-4, 4), rng.uniform(0.3, 3.0))
        l2 = Circle(rng.uniform(-4, 4), rng.uniform(0.3, 3.0))
        if abs(l1.center - l2.center) < 1e-3 and abs(l1.radius - l2.radius) < 1e-3:
            continue
        pairs.append(motion_from_reflections(l1, l2))
    for m in pairs:
        for _ in range(100):
            z = complex(rng.uniform(-10, 10), rng.uniform(1e-3, 10))
            w = m(z)
            assert w is not INF and w.imag > 0.0


def test_figure_presets_catalog():
    presets = figure_presets()
    assert len(presets) >= 8
    names = {p.name for p in presets}
    assert {
        "fig8-rotation",
        "fig10-limit-rotation",
        "fig11-translation",
        "fig12-translation",
        "fig15-rotation",
        "fig16-dini-rotation",
        "fig16-dini-rotation-mirror",
        "fig17-dini-translation",
    } <= names
    for p in presets:
        assert p.motion().almost_equal(p.expected, 1e-10)
        assert classify(p.expected) is p.kind


def test_preset_expected_formulas():
    assert get_preset("fig8-rotation").expected.almost_equal(Mobius(0.0, 4 * PI * PI, -1.0, 2 * PI))
    assert get_preset("fig17-dini-translation").expected.almost_equal(Mobius.scaling(1 / 9))
    assert get_preset("fig10-limit-rotation").expected.almost_equal(Mobius.translation(-2.0))


def test_fig15_and_fig16_discrepancies_flagged():
    fig15 = get_preset("fig15-rotation")
    assert fig15.discrepancy and "mirror" in fig15.note
    assert fig15.expected.almost_equal(Mobius(249.0, -667.0, 192.0, -215.0))
    fig16 = get_preset("fig16-dini-rotation")
    assert fig16.discrepancy and "264" in fig16.note
    assert fig16.expected.almost_equal(Mobius(-264 * PI, 1057 * PI * PI, -64.0, 8 * PI))
    mirror = get_preset("fig16-dini-rotation-mirror")
    assert not mirror.discrepancy
    assert mirror.expected.almost_equal(Mobius(-136 * PI, -769 * PI * PI, 64.0, -120 * PI))


def test_unknown_preset_raises():
    with pytest.raises(ValueError):
        get_preset("fig99")
