import cmath
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperphase.cplx import (
    INF,
    TWO_PI,
    Circle,
    Line,
    Mobius,
    arg2pi,
    distance_to,
    invert_in_circle,
    reflect,
    reflect_in_line,
    sample_points,
)

from fitutil import fit_gencircle

PI = math.pi

finite = st.complex_numbers(max_magnitude=50.0, allow_nan=False, allow_infinity=False)


def test_arg2pi_axis_examples():
    assert arg2pi(1.0) == 0.0
    assert arg2pi(-1j) == pytest.approx(3 * PI / 2, abs=1e-15)
    assert arg2pi(1 + 1j) == pytest.approx(PI / 4, abs=1e-15)


def test_arg2pi_rejects_zero_and_infinity():
    with pytest.raises(ValueError):
        arg2pi(0.0)
    with pytest.raises(ValueError):
        arg2pi(INF)


@given(finite.filter(lambda z: abs(z.imag) > 1e-9))
def test_arg2pi_conjugate_pair_sums_to_full_turn(z):
    assert arg2pi(z) + arg2pi(z.conjugate()) == pytest.approx(TWO_PI, abs=1e-12)


@given(finite.filter(lambda z: abs(z) > 1e-12))
def test_arg2pi_range(z):
    a = arg2pi(z)
    assert 0.0 <= a < TWO_PI


def test_inversion_examples():
    assert invert_in_circle(Circle(0.0, 1.0), 2.0) == pytest.approx(0.5)
    # substituting z = 0 into c + r^2/conj(z - c) with c = -i, r = sqrt(2)
    assert invert_in_circle(Circle(-1j, math.sqrt(2)), 0.0) == pytest.approx(1j, abs=1e-15)
    assert invert_in_circle(Circle(0.0, 2 * PI), 2 * PI) == pytest.approx(2 * PI, abs=1e-12)


def test_inversion_swaps_center_and_infinity():
    c = Circle(3 - 2j, 1.5)
    assert invert_in_circle(c, c.center) is INF
    assert invert_in_circle(c, INF) == c.center


def test_inversion_is_involution_on_1000_points():
    rng = random.Random(1)
    for _ in range(1000):
        c = Circle(complex(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform(0.1, 4.0))
        z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        if abs(z - c.center) < 1e-6:
            continue
        back = invert_in_circle(c, invert_in_circle(c, z))
        assert abs(back - z) < 1e-12 * max(1.0, abs(z))


def test_inversion_fixes_circle_pointwise():
    c = Circle(1 + 1j, 2.5)
    for z in sample_points(c, 40):
        assert abs(invert_in_circle(c, z) - z) < 1e-12


def test_reflection_examples():
    assert reflect_in_line(Line.vertical(0.0), 1 + 1j) == pytest.approx(-1 + 1j)
    assert reflect_in_line(Line.vertical(1.0), 1j) == pytest.approx(2 + 1j)  # z -> 2a - conj(z)
    assert reflect_in_line(Line(0.0, 0.0), 1j) == pytest.approx(-1j)
    assert reflect_in_line(Line.vertical(2.0), INF) is INF


def test_reflection_involution_and_isometry():
    rng = random.Random(2)
    for _ in range(1000):
        line = Line(complex(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform(0, PI))
        z1 = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        z2 = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        w1, w2 = reflect_in_line(line, z1), reflect_in_line(line, z2)
        assert abs(reflect_in_line(line, w1) - z1) < 1e-12 * max(1.0, abs(z1))
        assert abs(abs(w1 - w2) - abs(z1 - z2)) < 1e-12 * max(1.0, abs(z1 - z2))


def test_reflection_fixes_line_pointwise():
    line = Line(2 - 1j, 1.1)
    for z in sample_points(line, 20):
        assert abs(reflect_in_line(line, z) - z) < 1e-9 * max(1.0, abs(z))


def test_line_angle_normalization():
    assert Line(0.0, PI).angle == 0.0
    assert Line(0.0, 3 * PI / 2).angle == pytest.approx(PI / 2)
    assert Line(0.0, -PI / 4).angle == pytest.approx(3 * PI / 4)


def test_gencircle_validation():
    with pytest.raises(ValueError):
        Circle(0.0, 0.0)
    with pytest.raises(ValueError):
        Circle(0.0, -1.0)
    with pytest.raises(ValueError):
        Circle(complex(math.inf, 0), 1.0)


def test_mobius_apply_examples():
    assert Mobius.identity()(7 - 2j) == 7 - 2j
    rot = Mobius(0.0, 4 * PI * PI, -1.0, 2 * PI)  # 4*pi^2/(2*pi - z)
    assert rot(0.0) == pytest.approx(2 * PI)
    assert Mobius.scaling(1 / 3)(3j) == pytest.approx(1j)


def test_mobius_poles_and_infinity():
    inv = Mobius(0.0, 1.0, 1.0, 0.0)  # 1/z
    assert inv(0.0) is INF
    assert inv(INF) == 0.0
    assert Mobius.translation(5.0)(INF) is INF
    m = Mobius(1.0, 0.0, 1.0, -2.0)
    assert m(2.0) is INF
    assert m(INF) == 1.0


def test_mobius_degenerate_rejected():
    with pytest.raises(ValueError):
        Mobius(1.0, 2.0, 2.0, 4.0)
    with pytest.raises(ValueError):
        Mobius(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        Mobius(1e8, 1e8, 1.0, 1.0 + 1e-10)  # tiny det after max-norm scaling


def test_compose_examples():
    m = Mobius(2.0, 1j, 0.0, 1.0)
    assert Mobius.identity().compose(m).almost_equal(m)
    assert Mobius.scaling(4.0).compose(Mobius.scaling(1 / 3)).almost_equal(Mobius.scaling(4 / 3))


def test_compose_pointwise_oracle():
    shift = Mobius.translation(1.0)
    inv = Mobius(0.0, 1.0, 1.0, 0.0)
    comp = shift.compose(inv)
    rng = random.Random(3)
    for _ in range(100):
        z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        if abs(z) < 1e-3:
            continue
        assert abs(comp(z) - (1.0 / z + 1.0)) < 1e-12 * max(1.0, abs(1.0 / z + 1.0))


def test_compose_matches_sequential_application():
    rng = random.Random(4)
    for _ in range(200):
        m1 = Mobius(*(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(4)))
        m2 = Mobius(*(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(4)))
        comp = m1.compose(m2)
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        mid = m2(z)
        if mid is INF or abs(m1.c * mid + m1.d) < 1e-3 or abs(comp.c * z + comp.d) < 1e-3:
            continue
        want = m1(mid)
        assert abs(comp(z) - want) <= 1e-10 * max(1.0, abs(want))


def test_inverse_round_trip():
    m = Mobius(2.0, 1 - 1j, 3j, 1.0)
    assert m.compose(m.inverse()).is_identity(1e-12)
    assert m.inverse().compose(m).is_identity(1e-12)


def test_normalized_has_unit_determinant():
    m = Mobius(2.0, 1 - 1j, 3j, 1.0).normalized()
    assert abs(m.det - 1.0) < 1e-12


def test_mobius_sends_gencircles_to_gencircles():
    rng = random.Random(5)
    for _ in range(40):
        m = Mobius(*(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)))
        if rng.random() < 0.5:
            curve = Circle(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(0.2, 3.0))
        else:
            curve = Line(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(0, PI))
        image = [m(z) for z in sample_points(curve, 50)]
        if any(w is INF or abs(w) > 1e6 for w in image):
            continue  # the image passes through infinity; it is a line minus a point
        _, resid = fit_gencircle(image)
        assert resid < 1e-8


def test_distance_to_curves():
    assert distance_to(Circle(0.0, 2.0), 3.0) == pytest.approx(1.0)
    assert distance_to(Line.vertical(1.0), 4 + 5j) == pytest.approx(3.0)
