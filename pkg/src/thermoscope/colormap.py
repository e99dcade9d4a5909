"""Jet pseudocolor rendering of an intensity field.

The anchor table below is the classic jet rainbow, fixed explicitly so every
rendered color is exactly reproducible: dark blue -> blue -> cyan -> yellow ->
red -> dark red, linearly interpolated per channel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .imaging import GrayImage, RgbImage


@dataclass(frozen=True)
class ColorStop:
    position: float  # normalized intensity in [0, 1]
    color: tuple[float, float, float]  # each channel in [0, 1]


JET_STOPS = (
    ColorStop(0.0, (0.0, 0.0, 0.5)),
    ColorStop(0.125, (0.0, 0.0, 1.0)),
    ColorStop(0.375, (0.0, 1.0, 1.0)),
    ColorStop(0.625, (1.0, 1.0, 0.0)),
    ColorStop(0.875, (1.0, 0.0, 0.0)),
    ColorStop(1.0, (0.5, 0.0, 0.0)),
)


def jet(u: float) -> tuple[float, float, float]:
    """Map a normalized intensity to an (r, g, b) triple, each in [0, 1].

    Out-of-range inputs clamp to [0, 1]; float noise at the endpoints must
    not crash rendering.
    """
    u = min(max(u, 0.0), 1.0)
    for lo, hi in zip(JET_STOPS, JET_STOPS[1:]):
        if u <= hi.position:
            f = (u - lo.position) / (hi.position - lo.position)
            return tuple(a + (b - a) * f for a, b in zip(lo.color, hi.color))
    return JET_STOPS[-1].color


def quantize8(v: float) -> int:
    """Round-half-up quantization of [0, 1] to 0..255."""
    return min(255, max(0, math.floor(v * 255.0 + 0.5)))


def _build_lut() -> np.ndarray:
    lut = np.empty((256, 3), dtype=np.uint8)
    for i in range(256):
        r, g, b = jet(i / 255.0)
        lut[i] = (quantize8(r), quantize8(g), quantize8(b))
    return lut


_JET_LUT = _build_lut()


def pseudocolor(img: GrayImage) -> RgbImage:
    """Render the intensity field through the jet map, one color per level."""
    return RgbImage(_JET_LUT[img.intensities])
