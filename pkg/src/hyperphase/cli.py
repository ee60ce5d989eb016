"""Command-line interface: scene rendering, figure catalog, and self-verification.

Exit codes: 0 on success, 1 on usage or scene errors, 2 when ``verify`` finds
a failing oracle check.
"""

from __future__ import annotations

import argparse
import ast
import math
import random
import re
import sys

from . import mesh as meshmod
from . import models, raster
from .colorings import (
    ColorSpec,
    Coloring,
    color_disc_asymptotic,
    color_disc_ultraparallel,
)
from .cplx import TWO_PI, Circle, GenCircle, Line, Mobius
from .figures import FIGURES, build_figure
from .motions import MotionKind, classify, fixed_points, motion_from_reflections, get_preset, figure_presets

_PI = math.pi


# ---------------------------------------------------------------------------
# Numeric literals and the motion grammar
# ---------------------------------------------------------------------------

_NUM_NAMES = {"pi": _PI, "sqrt2": math.sqrt(2.0), "sqrt3": math.sqrt(3.0), "e": math.e, "i": 1j, "j": 1j}
_NUM_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b, ast.Mult: lambda a, b: a * b,
               ast.Div: lambda a, b: a / b, ast.Pow: lambda a, b: a**b}


def _eval_node(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.Name) and node.id in _NUM_NAMES:
        return _NUM_NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        v = _eval_node(node.operand)
        return v if isinstance(node.op, ast.UAdd) else -v
    if isinstance(node, ast.BinOp) and type(node.op) in _NUM_BINOPS:
        return _NUM_BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    raise ValueError(f"unsupported syntax at column {getattr(node, 'col_offset', '?')}")


def parse_number(text: str) -> complex:
    """Arithmetic literal with tokens pi, sqrt2, sqrt3, i: e.g. '2pi', '-1+2i', 'pi/8'."""
    s = text.strip().replace("^", "**")
    # implicit multiplication: 2pi -> 2*pi, 1.5i -> 1.5*i
    s = re.sub(r"(?<=[\d.)])(pi|sqrt2|sqrt3|i|j|e)\b", r"*\1", s)
    if not s:
        raise ValueError("empty numeric literal")
    try:
        value = _eval_node(ast.parse(s, mode="eval").body)
    except (SyntaxError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"could not parse numeric literal {text!r}: {exc}") from None
    return complex(value)


def parse_real(text: str) -> float:
    v = parse_number(text)
    if v.imag != 0.0:
        raise ValueError(f"{text!r} must be a real number")
    return v.real


def parse_range(text: str) -> tuple[float, float]:
    """'a:b' with numeric-literal endpoints, e.g. '0:15pi'."""
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"range must look like 'lo:hi', got {text!r}")
    return parse_real(parts[0]), parse_real(parts[1])


def _split_args(body: str) -> list[str]:
    """Split on commas that are not nested inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_curve(text: str) -> GenCircle:
    """'circle(center,radius)' or 'line(x)' (vertical) or 'line(base,angle)'."""
    s = text.strip()
    m = re.fullmatch(r"circle\((.*)\)", s)
    if m:
        parts = _split_args(m.group(1))
        if len(parts) != 2:
            raise ValueError(f"circle takes (center, radius), got {text!r}")
        return Circle(parse_number(parts[0]), parse_real(parts[1]))
    m = re.fullmatch(r"line\((.*)\)", s)
    if m:
        parts = _split_args(m.group(1))
        if len(parts) == 1:
            return Line.vertical(parse_real(parts[0]))
        if len(parts) == 2:
            return Line(parse_number(parts[0]), parse_real(parts[1]))
        raise ValueError(f"line takes (x) or (base, angle), got {text!r}")
    raise ValueError(f"could not parse curve {text!r}: expected circle(...) or line(...)")


def parse_motion(text: str) -> Mobius:
    """Motion grammar: 'mobius:a,b,c,d' | 'reflect:<curve>;<curve>' | 'preset:<name>'."""
    head, sep, body = text.partition(":")
    head = head.strip()
    if not sep:
        raise ValueError(f"motion {text!r} must start with 'mobius:', 'reflect:', or 'preset:'")
    if head == "mobius":
        parts = _split_args(body)
        if len(parts) != 4:
            raise ValueError(f"mobius takes four coefficients a,b,c,d, got {len(parts)}")
        return Mobius(*(parse_number(p) for p in parts))
    if head == "reflect":
        curves = body.split(";")
        if len(curves) != 2:
            raise ValueError("reflect takes two curves separated by ';'")
        return motion_from_reflections(parse_curve(curves[0]), parse_curve(curves[1]))
    if head == "preset":
        return get_preset(body.strip()).expected
    raise ValueError(f"unknown motion source {head!r}")


def format_mobius(m: Mobius) -> str:
    def fc(z: complex) -> str:
        if z.imag == 0.0:
            return f"{z.real:.6g}"
        if z.real == 0.0:
            return f"{z.imag:.6g}i"
        sign = "+" if z.imag >= 0 else "-"
        return f"({z.real:.6g}{sign}{abs(z.imag):.6g}i)"

    def linear(a: complex, b: complex) -> str:
        if a == 0:
            return fc(b)
        az = "z" if a == 1 else ("-z" if a == -1 else f"{fc(a)}z")
        if b == 0:
            return az
        br = fc(b)
        return f"{az} - {br[1:]}" if br.startswith("-") else f"{az} + {br}"

    den = linear(m.c, m.d)
    return linear(m.a, m.b) if den == "1" else f"({linear(m.a, m.b)})/({den})"


# ---------------------------------------------------------------------------
# The oracle verification suite
# ---------------------------------------------------------------------------


def _circ_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _pointwise_err(m1: Mobius, m2: Mobius, rng: random.Random, n: int = 100) -> float:
    scale1 = max(abs(m1.c), abs(m1.d))
    scale2 = max(abs(m2.c), abs(m2.d))
    worst, k = 0.0, 0
    while k < n:
        z = complex(rng.uniform(-8.0, 8.0), rng.uniform(0.05, 8.0))
        if abs(m1.c * z + m1.d) < 1e-2 * scale1 or abs(m2.c * z + m2.d) < 1e-2 * scale2:
            continue  # stay away from poles
        w1, w2 = m1(z), m2(z)
        worst = max(worst, abs(w1 - w2) / max(1.0, abs(w2)))
        k += 1
    return worst


def _check_presets(checks: list) -> None:
    rng = random.Random(20260810)
    for p in figure_presets():
        err = _pointwise_err(p.motion(), p.expected, rng)
        checks.append((f"preset {p.name}: composition reproduces the recorded map", err < 1e-10, f"max rel err {err:.2e}"))


def _check_line_pair(checks: list) -> None:
    rng = random.Random(7)
    plus = motion_from_reflections(Line.vertical(0.0), Line.vertical(1.0))
    minus = motion_from_reflections(Line.vertical(1.0), Line.vertical(0.0))
    e1 = _pointwise_err(plus, Mobius.translation(2.0), rng)
    e2 = _pointwise_err(minus, Mobius.translation(-2.0), rng)
    checks.append(("vertical lines x=0,1 compose to z+2 and z-2 by order", max(e1, e2) < 1e-12, f"max rel err {max(e1, e2):.2e}"))


def _check_fig15(checks: list) -> None:
    p = get_preset("fig15-rotation")
    m = p.motion()
    pts = fixed_points(m)
    x = 29.0 / 24.0
    y = math.sqrt(145.0 / 72.0)
    want = sorted([complex(x, y), complex(x, -y)], key=lambda w: (w.real, w.imag))
    got = sorted([complex(z) for z in pts], key=lambda w: (w.real, w.imag))
    err = max(abs(a - b) for a, b in zip(got, want)) if len(got) == 2 else float("inf")
    checks.append(("fig15 fixed points sit at the circle intersections", err < 1e-9, f"max err {err:.2e}"))
    kind = classify(m)
    checks.append(("fig15 composition classifies as a rotation", kind is MotionKind.ROTATION, f"got {kind.value}"))


def _check_round_trips(checks: list) -> None:
    rng = random.Random(4242)

    def sphere_pt():
        while True:
            v = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
            n = math.sqrt(sum(c * c for c in v))
            if n > 1e-6:
                return models.SpherePoint(v[0] / n, v[1] / n, v[2] / n)

    def run_pair(name, forward_back_pairs):
        worst = 0.0
        for err in forward_back_pairs:
            worst = max(worst, err)
        checks.append((f"{name} maps round-trip", worst < 1e-12, f"max err {worst:.2e}"))

    errs = []
    for _ in range(1000):
        z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        errs.append(abs(models.sphere_to_plane(models.stereo_to_sphere(z)) - z))
        p = sphere_pt()
        q = models.stereo_to_sphere(models.sphere_to_plane(p))
        errs.append(max(abs(q.x - p.x), abs(q.y - p.y), abs(q.z - p.z)))
    run_pair("sphere", errs)

    errs = []
    for _ in range(1000):
        c = models.PseudoCoord(rng.uniform(-10, 10), rng.uniform(-2, 2))
        c2 = models.halfplane_to_pseudo(models.pseudo_to_halfplane(c))
        errs.append(max(abs(c2.theta - c.theta), abs(c2.sigma - c.sigma)))
    run_pair("pseudosphere", errs)

    errs = []
    for _ in range(1000):
        z = complex(rng.uniform(-5, 5), rng.uniform(0.05, 5.0))
        errs.append(abs(models.disc_to_halfplane(models.halfplane_to_disc(z)) - z))
    run_pair("disc", errs)

    errs = []
    for _ in range(1000):
        w = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(w) > 0.999:
            w *= 0.5
        errs.append(abs(models.hemisphere_to_disc(models.disc_to_hemisphere(w)) - w))
        errs.append(abs(models.klein_to_disc(models.disc_to_klein(w)) - w))
    run_pair("hemisphere and klein", errs)

    rngc = random.Random(99)
    worst = 0.0
    for _ in range(1000):
        z = complex(rngc.uniform(-5, 5), rngc.uniform(0.05, 5.0))
        worst = max(worst, abs(models.halfplane_to_disc(z) - models.HALFPLANE_TO_DISC_MOBIUS(z)))
    checks.append(("disc map composite agrees with the closed form", worst < 1e-12, f"max err {worst:.2e}"))


def _check_coloring_families(checks: list) -> None:
    ident = Mobius.identity()

    def family(kind, curves, sampler, colorer):
        spread = 0.0
        hues = []
        for c in curves:
            angles = [colorer(sampler(c, t)).angle for t in range(50)]
            hues.append(angles[0])
            spread = max(spread, max(_circ_dist(a, angles[0]) for a in angles))
        sep = min(
            _circ_dist(hues[i], hues[j]) for i in range(len(hues)) for j in range(i + 1, len(hues))
        )
        checks.append((f"{kind} coloring constant along 20 geodesics", spread < 1e-9, f"max spread {spread:.2e}"))
        checks.append((f"{kind} coloring separates the 20 geodesics", sep > 1e-3, f"min separation {sep:.2e}"))

    cs = [math.tan(-1.4 + 2.8 * k / 19.0) for k in range(20)]
    family(
        "asymptotic",
        cs,
        lambda c, t: models.halfplane_to_disc(complex(c, math.exp(-3.0 + 6.0 * t / 49.0))),
        lambda w: color_disc_asymptotic(ident, w),
    )
    rs = [math.exp(-3.0 + 6.0 * k / 19.0) for k in range(20)]
    family(
        "ultraparallel",
        rs,
        lambda r, t: models.halfplane_to_disc(r * complex(math.cos(0.1 + (math.pi - 0.2) * t / 49.0), math.sin(0.1 + (math.pi - 0.2) * t / 49.0))),
        lambda w: color_disc_ultraparallel(ident, w),
    )

    bins = set()
    for k in range(1000):
        c = math.tan(math.pi * (k + 0.5) / 1000.0 - math.pi / 2.0)
        h = color_disc_asymptotic(ident, models.halfplane_to_disc(complex(c, 1.0))).angle
        bins.add(min(int(h / TWO_PI * 64), 63))
    checks.append(("asymptotic hues cover all 64 bins", len(bins) == 64, f"{len(bins)}/64 bins"))

    bins = set()
    for k in range(1000):
        r = math.tan(math.pi * (k + 0.5) / 2000.0)
        h = color_disc_ultraparallel(ident, models.halfplane_to_disc(complex(0.0, r))).angle
        bins.add(min(int(h / TWO_PI * 64), 63))
    checks.append(("ultraparallel hues cover all 64 bins", len(bins) == 64, f"{len(bins)}/64 bins"))

    rng = random.Random(5150)
    worst = 0.0
    for _ in range(200):
        w = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(w) > 0.995:
            w *= 0.5
        worst = max(
            worst,
            _circ_dist(
                color_disc_ultraparallel(ident, w, conj_omitted=False).angle,
                color_disc_ultraparallel(ident, w, conj_omitted=True).angle,
            ),
        )
    checks.append(("conjugation-omitted ultraparallel equals default at the identity", worst < 1e-9, f"max diff {worst:.2e}"))


def _geometric_kind(l1: GenCircle, l2: GenCircle):
    """Kind predicted from the configuration of two h-line representatives."""
    if isinstance(l1, Line) and isinstance(l2, Line):
        return MotionKind.LIMIT_ROTATION  # distinct verticals meet at infinity
    if isinstance(l1, Line) or isinstance(l2, Line):
        line, circ = (l1, l2) if isinstance(l1, Line) else (l2, l1)
        gap = abs(line.base.real - circ.center.real)
        if abs(gap - circ.radius) < 1e-9:
            return MotionKind.LIMIT_ROTATION
        return MotionKind.ROTATION if gap < circ.radius else MotionKind.TRANSLATION
    d = abs(l1.center - l2.center)
    lo, hi = abs(l1.radius - l2.radius), l1.radius + l2.radius
    if abs(d - hi) < 1e-9 or abs(d - lo) < 1e-9:
        return MotionKind.LIMIT_ROTATION
    return MotionKind.ROTATION if lo < d < hi else MotionKind.TRANSLATION


def _check_classification(checks: list) -> None:
    rng = random.Random(31415)
    bad = 0
    n = 0
    while n < 200:
        if rng.random() < 0.15:
            a1, a2 = rng.uniform(-4, 4), rng.uniform(-4, 4)
            if abs(a1 - a2) < 1e-3:
                continue
            l1, l2 = Line.vertical(a1), Line.vertical(a2)
        elif rng.random() < 0.3:
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
            if abs(d - (l1.radius + l2.radius)) < 1e-3 or abs(d - abs(l1.radius - l2.radius)) < 1e-3:
                continue
        if classify(motion_from_reflections(l1, l2)) is not _geometric_kind(l1, l2):
            bad += 1
        n += 1
    checks.append(("algebraic classification matches geometry on 200 pairs", bad == 0, f"{bad} mismatches"))


def run_verification(out=None) -> int:
    """Run every oracle check and print one line per check; 0 when all pass, 2 otherwise."""
    out = out if out is not None else sys.stdout
    checks: list[tuple[str, bool, str]] = []
    _check_presets(checks)
    _check_line_pair(checks)
    _check_fig15(checks)
    _check_round_trips(checks)
    _check_coloring_families(checks)
    _check_classification(checks)

    width = max(len(name) for name, _, _ in checks)
    failures = 0
    for name, ok, detail in checks:
        status = "ok  " if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"{status}  {name:<{width}}  {detail}", file=out)
    total = len(checks)
    print(f"{total - failures}/{total} checks passed", file=out)
    return 0 if failures == 0 else 2


# ---------------------------------------------------------------------------
# Argument parsing and subcommands
# ---------------------------------------------------------------------------


class _UsageError(Exception):
    def __init__(self, message: str, parser: argparse.ArgumentParser):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad usage instead of argparse's 2
        raise _UsageError(message, self)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hyperphase", description="Phase portraits of hyperbolic direct motions.")
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="render a catalog scene by name (fig1 ... fig17)")
    fig.add_argument("name")
    fig.add_argument("--out", default=None)
    fig.add_argument("--res", type=int, default=None)
    fig.add_argument("--supersample", type=int, default=None)
    fig.add_argument("--format", choices=("ppm", "png", "ply"), default=None)

    ren = sub.add_parser("render", help="render one scene from flags or a config file")
    ren.add_argument("--config", default=None, help="flat key=value file; flags override it")
    ren.add_argument("--out", default=None)
    ren.add_argument("--format", choices=("ppm", "png", "ply"), default=None)
    ren.add_argument("--coloring", choices=[c.value for c in Coloring], default=None)
    ren.add_argument("--conj-omitted", action="store_true", default=None, dest="conj_omitted")
    ren.add_argument("--mobius", default=None, help="a,b,c,d coefficients")
    ren.add_argument("--reflect", default=None, help="two curves separated by ';'")
    ren.add_argument("--preset", default=None, help="a motion preset name")
    ren.add_argument("--domain", choices=("disc", "halfplane", "rect"), default=None)
    ren.add_argument("--window", default=None, help="re_min:re_max:im_min:im_max")
    ren.add_argument("--res", type=int, default=None)
    ren.add_argument("--supersample", type=int, default=None)
    ren.add_argument("--contours", action="store_true", default=None)
    ren.add_argument("--height-variant", type=int, choices=(1, 2), default=None, dest="height_variant")
    ren.add_argument("--bands", type=int, default=None)
    ren.add_argument(
        "--surface",
        choices=("pseudosphere", "dini", "hemisphere", "sphere", "disc-landscape", "plane-landscape"),
        default=None,
    )
    ren.add_argument("--twist", default=None)
    ren.add_argument("--theta", default=None, help="u range lo:hi")
    ren.add_argument("--sigma", default=None, help="v range lo:hi")
    ren.add_argument("--nu", type=int, default=None)
    ren.add_argument("--nv", type=int, default=None)
    ren.add_argument("--exaggeration", default=None)
    ren.add_argument("--ceiling", default=None)

    sub.add_parser("verify", help="run the numeric oracle suite")
    sub.add_parser("list-presets", help="list figure scenes and motion presets")
    return parser


_CONFIG_INT = {"res", "supersample", "height_variant", "bands", "nu", "nv"}
_CONFIG_BOOL = {"conj_omitted", "contours"}


def _load_config(path: str) -> dict:
    conf = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
                key, value = line.split("=", 1)
                conf[key.strip().replace("-", "_")] = value.strip()
    except OSError as e:
        raise ValueError(f"could not read config {path}: {e}") from e
    return conf


def _merge_config(args: argparse.Namespace, conf: dict) -> None:
    for key, value in conf.items():
        if not hasattr(args, key):
            raise ValueError(f"unknown config key {key!r}")
        if getattr(args, key) is not None:
            continue  # explicit flags win
        if key in _CONFIG_INT:
            setattr(args, key, int(value))
        elif key in _CONFIG_BOOL:
            setattr(args, key, value.lower() in ("1", "true", "yes", "on"))
        else:
            setattr(args, key, value)


def _infer_format(out: str, explicit: str | None, kind: str) -> str:
    fmt = explicit
    if fmt is None and "." in out:
        fmt = out.rsplit(".", 1)[1].lower()
    if fmt is None:
        fmt = "ply" if kind == "mesh" else "ppm"
    if kind == "mesh" and fmt != "ply":
        raise ValueError(f"mesh scenes write PLY, not {fmt}")
    if kind == "image" and fmt not in ("ppm", "png"):
        raise ValueError(f"2D scenes write PPM or PNG, not {fmt}")
    return fmt


def _write_output(kind: str, obj, out: str, fmt: str) -> None:
    if kind == "mesh":
        meshmod.write_ply(obj, out)
    elif fmt == "ppm":
        raster.write_ppm(obj, out)
    else:
        raster.write_png(obj, out)


def _cmd_figure(args) -> int:
    kind, obj = build_figure(args.name, args.res, args.supersample)
    out = args.out or f"{args.name}.{'ply' if kind == 'mesh' else 'ppm'}"
    fmt = _infer_format(out, args.format, kind)
    _write_output(kind, obj, out, fmt)
    print(f"wrote {out}")
    return 0


_DEFAULT_THETA = {
    "pseudosphere": (0.0, TWO_PI),
    "dini": (0.0, 7 * _PI),
    "hemisphere": (0.0, TWO_PI),
    "sphere": (0.0, TWO_PI),
    "disc-landscape": (0.0, TWO_PI),
    "plane-landscape": (-2.0, 2.0),
}
_DEFAULT_SIGMA = {
    "pseudosphere": (0.0, 3.0),
    "dini": (0.0, 3.0),
    "hemisphere": (0.0, _PI / 2),
    "sphere": (0.0, _PI),
    "disc-landscape": (0.0, 1.0),
    "plane-landscape": (-2.0, 2.0),
}


def _render_mesh(args, spec: ColorSpec, motion) -> tuple[str, object]:
    name = args.surface
    u_range = parse_range(args.theta) if args.theta else _DEFAULT_THETA[name]
    v_range = parse_range(args.sigma) if args.sigma else _DEFAULT_SIGMA[name]
    if name == "pseudosphere":
        surface = meshmod.Pseudosphere()
    elif name == "dini":
        twist = parse_real(args.twist) if args.twist is not None else 0.15
        surface = meshmod.Dini(twist=twist)
    elif name == "hemisphere":
        surface = meshmod.Hemisphere()
    elif name == "sphere":
        surface = meshmod.Sphere()
    elif name == "disc-landscape":
        color_variant = 1 if spec.coloring is Coloring.DISC_ASYMPTOTIC else 2
        hv = args.height_variant if args.height_variant is not None else (2 if color_variant == 1 else 1)
        ex = parse_real(args.exaggeration) if args.exaggeration is not None else 0.35
        surface = meshmod.DiscLandscape(motion, hv, ex, spec.conjugation_omitted)
    else:
        ceiling = parse_real(args.ceiling) if args.ceiling is not None else 6.0
        surface = meshmod.PlaneLandscape(motion, ceiling)
    nu = args.nu or 256
    nv = args.nv or 64
    grid = meshmod.tessellate(surface, u_range, v_range, nu, nv)
    return "mesh", meshmod.colorize(grid, spec, surface)


def _default_domain(coloring: Coloring, res: int, window) -> raster.SceneDomain:
    if coloring in (Coloring.DISC_ASYMPTOTIC, Coloring.DISC_ULTRAPARALLEL, Coloring.KLEIN_V1, Coloring.KLEIN_V2):
        return raster.DiscDomain(res)
    if coloring is Coloring.PSEUDO:
        x0, x1, y0, y1 = window or (-_PI, 3 * _PI, 0.05, 4.0)
        return raster.HalfPlaneDomain(x0, x1, y0, y1, res)
    x0, x1, y0, y1 = window or (-2.0, 2.0, -2.0, 2.0)
    return raster.RectDomain(x0, x1, y0, y1, res)


def _render_image(args, spec: ColorSpec) -> tuple[str, object]:
    res = args.res or 512
    window = None
    if args.window:
        parts = args.window.split(":")
        if len(parts) != 4:
            raise ValueError("window must be re_min:re_max:im_min:im_max")
        window = tuple(parse_real(p) for p in parts)
    if args.domain == "disc":
        domain = raster.DiscDomain(res)
    elif args.domain == "halfplane":
        x0, x1, y0, y1 = window or (-_PI, 3 * _PI, 0.05, 4.0)
        domain = raster.HalfPlaneDomain(x0, x1, y0, y1, res)
    elif args.domain == "rect":
        x0, x1, y0, y1 = window or (-2.0, 2.0, -2.0, 2.0)
        domain = raster.RectDomain(x0, x1, y0, y1, res)
    else:
        domain = _default_domain(spec.coloring, res, window)
    ss = args.supersample or 1
    if args.contours:
        color_variant = 1 if spec.coloring is Coloring.DISC_ASYMPTOTIC else 2
        hv = args.height_variant if args.height_variant is not None else (2 if color_variant == 1 else 1)
        bands = args.bands or 12
        return "image", raster.render_contours(spec, hv, bands, domain, ss)
    return "image", raster.render(spec, domain, ss)


def _cmd_render(args) -> int:
    if args.config:
        _merge_config(args, _load_config(args.config))
    if args.out is None:
        raise ValueError("render needs --out (or out= in the config file)")

    sources = [s for s in ("mobius", "reflect", "preset") if getattr(args, s) is not None]
    if len(sources) > 1:
        raise ValueError(f"exactly one motion source allowed, got {' and '.join(sources)}")
    if not sources:
        motion = Mobius.identity()
    elif sources[0] == "mobius":
        motion = parse_motion(f"mobius:{args.mobius}")
    elif sources[0] == "reflect":
        motion = parse_motion(f"reflect:{args.reflect}")
    else:
        motion = parse_motion(f"preset:{args.preset}")

    coloring = Coloring(args.coloring) if args.coloring else Coloring.COMPLEX_PHASE
    spec = ColorSpec(coloring, motion, bool(args.conj_omitted))

    if args.surface:
        kind, obj = _render_mesh(args, spec, motion)
    else:
        kind, obj = _render_image(args, spec)
    fmt = _infer_format(args.out, args.format, kind)
    _write_output(kind, obj, args.out, fmt)
    print(f"wrote {args.out}")
    return 0


def _cmd_list() -> int:
    print("figure scenes:")
    for name in sorted(FIGURES, key=lambda n: (len(n), n)):
        scene = FIGURES[name]
        print(f"  {name:<16} {scene.kind:<5} {scene.description}")
    print()
    print("motion presets:")
    for p in figure_presets():
        flag = "  [printed formula differs]" if p.discrepancy else ""
        print(f"  {p.name:<28} {p.kind.value:<14} {format_mobius(p.expected)}{flag}")
    return 0


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        e.parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)

    try:
        if args.command == "figure":
            return _cmd_figure(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "verify":
            return run_verification()
        if args.command == "list-presets":
            return _cmd_list()
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
