"""Deterministic rasterization of colorings into RGB images, plus PPM/PNG output.

Rendering is a pure function of (color spec, domain, supersample): repeated
runs produce byte-identical images. Supersampling uses fixed stratified
sub-pixel offsets, never a random jitter. Pixels whose center falls outside a
disc domain are white.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .colorings import ColorSpec, Coloring, disc_hue_field, hue_field_for, hue_to_rgb_field

WHITE = 255
CONTOUR_DARKEN = 0.45


@dataclass(frozen=True)
class DiscDomain:
    """The square [-1, 1]^2 around the unit disc, resolution x resolution pixels."""

    resolution: int

    def __post_init__(self):
        if self.resolution < 1:
            raise ValueError("resolution must be positive")


@dataclass(frozen=True)
class HalfPlaneDomain:
    """An axis-aligned window in the upper half-plane (im_min must be positive)."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    resolution: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("window bounds must be ordered")
        if self.im_min <= 0.0:
            raise ValueError("half-plane window requires im_min > 0")
        if self.resolution < 1:
            raise ValueError("resolution must be positive")


@dataclass(frozen=True)
class RectDomain:
    """An axis-aligned window anywhere in the plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    resolution: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("window bounds must be ordered")
        if self.resolution < 1:
            raise ValueError("resolution must be positive")


SceneDomain = DiscDomain | HalfPlaneDomain | RectDomain


@dataclass(frozen=True)
class Image:
    """Row-major RGB pixel buffer; row 0 is the top of the domain."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError("pixel buffer length does not match width x height")

    def pixel(self, i: int, j: int) -> tuple[int, int, int]:
        k = 3 * (j * self.width + i)
        return tuple(self.pixels[k : k + 3])

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self.pixels, dtype=np.uint8).reshape(self.height, self.width, 3)


def _window(domain: SceneDomain):
    if isinstance(domain, DiscDomain):
        return -1.0, 1.0, -1.0, 1.0
    return domain.re_min, domain.re_max, domain.im_min, domain.im_max


def image_size(domain: SceneDomain) -> tuple[int, int]:
    """Pixel dimensions: square for discs, aspect-true otherwise (resolution = width)."""
    if isinstance(domain, DiscDomain):
        return domain.resolution, domain.resolution
    x0, x1, y0, y1 = _window(domain)
    w = domain.resolution
    h = max(1, round(w * (y1 - y0) / (x1 - x0)))
    return w, h


def _check_domain(spec: ColorSpec, domain: SceneDomain):
    c = spec.coloring
    if c in (Coloring.DISC_ASYMPTOTIC, Coloring.DISC_ULTRAPARALLEL, Coloring.KLEIN_V1, Coloring.KLEIN_V2):
        if not isinstance(domain, DiscDomain):
            raise ValueError(f"{c} renders on a disc domain")
    elif c is Coloring.PSEUDO:
        if not isinstance(domain, HalfPlaneDomain):
            raise ValueError("the pseudosphere coloring renders on a half-plane domain")
    elif c in (Coloring.BELTRAMI_V1, Coloring.BELTRAMI_V2):
        raise ValueError(f"{c} lives on the half-sphere; render it on a mesh")


def _sample_grid(domain: SceneDomain, width: int, height: int, rows: slice, fx: float, fy: float) -> np.ndarray:
    """Complex sample points at fractional pixel offset (fx, fy) for a block of rows."""
    x0, x1, y0, y1 = _window(domain)
    dx = (x1 - x0) / width
    dy = (y1 - y0) / height
    i = np.arange(width, dtype=np.float64)
    j = np.arange(rows.start, rows.stop, dtype=np.float64)
    # row 0 is the top of the window: the y axis points up
    x = x0 + (i + fx) * dx
    y = y1 - (j + fy) * dy
    return x[None, :] + 1j * y[:, None]


def _render_rows(spec: ColorSpec, domain: SceneDomain, supersample: int, width: int, height: int, rows: slice) -> np.ndarray:
    ss = supersample
    acc = np.zeros((rows.stop - rows.start, width, 3), dtype=np.float64)
    disc = isinstance(domain, DiscDomain)
    for sj in range(ss):
        for si in range(ss):
            pts = _sample_grid(domain, width, height, rows, (si + 0.5) / ss, (sj + 0.5) / ss)
            hue, black = hue_field_for(spec, pts)
            rgb = hue_to_rgb_field(hue, black).astype(np.float64)
            if disc:
                rgb[np.abs(pts) > 1.0] = WHITE  # out-of-disc subsamples contribute white
            acc += rgb
    out = np.floor(acc / (ss * ss) + 0.5).astype(np.uint8)
    if disc:
        centers = _sample_grid(domain, width, height, rows, 0.5, 0.5)
        out[np.abs(centers) > 1.0] = WHITE  # the white mask is decided by pixel centers
    return out


def _worker_count() -> int:
    raw = os.environ.get("HYPERPHASE_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    if n == 0:
        return os.cpu_count() or 1
    return max(1, n)


def render(spec: ColorSpec, domain: SceneDomain, supersample: int = 1) -> Image:
    """Sample the coloring over the domain; each pixel averages supersample^2 points."""
    if supersample < 1:
        raise ValueError("supersample must be a positive integer")
    _check_domain(spec, domain)
    width, height = image_size(domain)
    workers = _worker_count()
    if workers <= 1 or height < 2 * workers:
        out = _render_rows(spec, domain, supersample, width, height, slice(0, height))
    else:
        bounds = np.linspace(0, height, workers + 1).astype(int)
        chunks = [slice(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _render_rows(spec, domain, supersample, width, height, s), chunks))
        out = np.vstack(parts)
    return Image(width, height, out.tobytes())


def _height_bands(spec: ColorSpec, height_variant: int, bands: int, domain: DiscDomain, width: int, height: int):
    centers = _sample_grid(domain, width, height, slice(0, height), 0.5, 0.5)
    inside = np.abs(centers) <= 1.0
    hue = disc_hue_field(spec.motion, np.where(inside, centers, 0.0), height_variant, spec.conjugation_omitted)
    frac = hue / (2.0 * math.pi)
    idx = np.minimum(np.floor(frac * bands).astype(np.int64), bands - 1)
    return idx, inside


def render_contours(color_spec: ColorSpec, height_variant: int, bands: int, domain: DiscDomain, supersample: int = 1) -> Image:
    """Base coloring darkened along the level-set boundaries of the other disc map.

    The height is the other variant's hue fraction quantized into ``bands``
    equal bands; pixels where the band index changes toward the right or
    downward neighbor are darkened by ``CONTOUR_DARKEN``.
    """
    if color_spec.coloring is Coloring.DISC_ASYMPTOTIC:
        color_variant = 1
    elif color_spec.coloring is Coloring.DISC_ULTRAPARALLEL:
        color_variant = 2
    else:
        raise ValueError("contour composites require one of the two disc colorings")
    if height_variant not in (1, 2):
        raise ValueError(f"height variant must be 1 or 2, got {height_variant!r}")
    if height_variant == color_variant:
        raise ValueError("color and height must use different disc colorings")
    if bands < 1:
        raise ValueError("bands must be a positive integer")
    if not isinstance(domain, DiscDomain):
        raise ValueError("contour composites render on a disc domain")

    base = render(color_spec, domain, supersample)
    arr = base.as_array().copy()
    idx, inside = _height_bands(color_spec, height_variant, bands, domain, base.width, base.height)

    edge = np.zeros_like(inside)
    step_right = (idx[:, :-1] != idx[:, 1:]) & inside[:, :-1] & inside[:, 1:]
    step_down = (idx[:-1, :] != idx[1:, :]) & inside[:-1, :] & inside[1:, :]
    edge[:, :-1] |= step_right
    edge[:-1, :] |= step_down

    arr[edge] = np.floor(arr[edge] * CONTOUR_DARKEN + 0.5).astype(np.uint8)
    return Image(base.width, base.height, arr.tobytes())


def write_ppm(img: Image, path) -> None:
    """Binary PPM (P6, maxval 255) with a single whitespace-separated header line."""
    header = f"P6 {img.width} {img.height} 255\n".encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(img.pixels)
    except OSError as e:
        raise OSError(f"failed to write PPM to {path}: {e}") from e


def read_ppm(path) -> Image:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise OSError(f"failed to read PPM from {path}: {e}") from e
    fields = data.split(maxsplit=4)
    if len(fields) < 5 or fields[0] != b"P6" or fields[3] != b"255":
        raise ValueError(f"{path} is not a maxval-255 binary PPM")
    w, h = int(fields[1]), int(fields[2])
    return Image(w, h, fields[4][: 3 * w * h])


def write_png(img: Image, path) -> None:
    """PNG export of the same pixel buffer (pixel-identical, not golden byte-wise)."""
    from PIL import Image as PILImage

    try:
        PILImage.frombytes("RGB", (img.width, img.height), img.pixels).save(path, format="PNG")
    except OSError as e:
        raise OSError(f"failed to write PNG to {path}: {e}") from e
