"""Synthetic scenes with known ground-truth temperatures.

Inverting the calibration gives an end-to-end oracle: render a temperature
field into the red channel, run the estimation pipeline, and the recovered
temperatures must agree with the ground truth to within half an 8-bit
quantization step, (t_high - t_low) / 510.

Fields are generated with numpy's seeded PCG64 generator, so fixtures are
reproducible across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCalibrationError
from .estimation import CalibrationRange, temperature_map
from .imaging import GrayImage, RgbImage, intensity_extent, red_channel


@dataclass(frozen=True, eq=False)
class SyntheticScene:
    """Ground-truth Celsius field plus the calibration used to render it."""

    field: np.ndarray  # (h, w) float64 degC
    cal: CalibrationRange
    seed: int

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.field, dtype=np.float64))
        if arr.ndim != 2 or arr.size < 2:
            raise ValueError(f"field must be 2-D with at least 2 pixels, got shape {arr.shape}")
        if arr.min() < self.cal.t_low or arr.max() > self.cal.t_high:
            raise ValueError("field values must lie within the calibration range")
        arr.setflags(write=False)
        object.__setattr__(self, "field", arr)

    @property
    def width(self) -> int:
        return self.field.shape[1]

    @property
    def height(self) -> int:
        return self.field.shape[0]


def generate_scene(width: int, height: int, cal: CalibrationRange, seed: int) -> SyntheticScene:
    """Random uniform field over the calibration range.

    The first pixel is pinned to t_low and the last to t_high, so every
    rendered image has the full {0, 255} intensity extent and the pipeline's
    extent inference is never what is under test.
    """
    if width * height < 2:
        raise ValueError("scene needs at least 2 pixels to pin both calibration endpoints")
    rng = np.random.default_rng(seed)
    field = rng.uniform(cal.t_low, cal.t_high, size=(height, width))
    field[0, 0] = cal.t_low
    field[-1, -1] = cal.t_high
    return SyntheticScene(field, cal, seed)


def render(scene: SyntheticScene) -> RgbImage:
    """Exact inverse of the calibration: temperatures into the red channel.

    Green and blue are zero, isolating the red-channel pathway the estimation
    chain reads.  Rounding is half-up, matching the pseudocolor quantizer.
    """
    cal = scene.cal
    if cal.span == 0.0:
        raise DegenerateCalibrationError("t_low == t_high: cannot render a scene")
    u = (scene.field - cal.t_low) / cal.span
    red = np.clip(np.floor(u * 255.0 + 0.5), 0, 255).astype(np.uint8)
    pixels = np.zeros((scene.height, scene.width, 3), dtype=np.uint8)
    pixels[:, :, 0] = red
    return RgbImage(pixels)


def quantization_bound(cal: CalibrationRange) -> float:
    """Half a temperature quantum, the worst-case round-trip error."""
    return cal.span / 510.0


def round_trip_error(scene: SyntheticScene) -> float:
    """Max |estimated - truth| over the render -> estimate round trip."""
    img = render(scene)
    gray = red_channel(img)
    extent = intensity_extent(gray)
    tmap = temperature_map(gray, scene.cal, extent)
    return float(np.abs(tmap.values - scene.field).max())


# --- fixture serialization ---------------------------------------------------
#
# Plain text: one header line "width height t_low t_high seed", then one
# row of the field per line, values in %.17g so round-trips are exact.

def save_scene(scene: SyntheticScene) -> str:
    lines = [
        f"{scene.width} {scene.height} {scene.cal.t_low!r} {scene.cal.t_high!r} {scene.seed}"
    ]
    for row in scene.field:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def load_scene(text: str) -> SyntheticScene:
    lines = text.strip().splitlines()
    w_s, h_s, lo_s, hi_s, seed_s = lines[0].split()
    width, height, seed = int(w_s), int(h_s), int(seed_s)
    cal = CalibrationRange(float(lo_s), float(hi_s))
    field = np.array(
        [[float(v) for v in line.split()] for line in lines[1:]],
        dtype=np.float64,
    )
    if field.shape != (height, width):
        raise ValueError(f"field shape {field.shape} does not match header {height}x{width}")
    return SyntheticScene(field, cal, seed)
