"""Phase portraits of hyperbolic direct motions on six models of hyperbolic space."""

from .cplx import INF, Circle, GenCircle, Line, Mobius, arg2pi, invert_in_circle, reflect, reflect_in_line
from .colorings import (
    BLACK,
    ColorSpec,
    Coloring,
    Hue,
    color_beltrami,
    color_complex,
    color_disc_asymptotic,
    color_disc_ultraparallel,
    color_klein,
    color_pseudosphere,
    height_disc,
    hue_to_rgb,
    modulus_height,
)
from .models import Point3, PseudoCoord, SpherePoint
from .motions import MotionKind, Preset, classify, fixed_points, get_preset, motion_from_reflections, figure_presets

__version__ = "0.1.0"
