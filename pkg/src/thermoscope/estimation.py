"""Linear intensity-to-temperature calibration, ROI aggregation, validation.

A grayscale intensity I maps to Celsius by the normalized affine rule

    T(I) = t_low + (t_high - t_low) * (I - i_min) / (i_max - i_min)

where (i_min, i_max) is the intensity extent the calibration is anchored to.
Endpoints are returned bit-exactly, not through the formula, so t_low/t_high
are reproduced without float round-off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateExtentError,
    IntensityRangeError,
    MetricUndefinedError,
)
from .imaging import GrayImage, IntensityExtent, Roi

ABSOLUTE_ZERO_C = -273.15

# Spans human skin temperatures and is always echoed into reports; callers
# override it whenever the true scene range is known.
DEFAULT_CALIBRATION = (30.0, 40.0)


@dataclass(frozen=True)
class CalibrationRange:
    """The (t_low, t_high) Celsius span mapped onto the intensity extent."""

    t_low: float
    t_high: float

    def __post_init__(self):
        if not (math.isfinite(self.t_low) and math.isfinite(self.t_high)):
            raise ValueError("calibration temperatures must be finite")
        if self.t_low <= ABSOLUTE_ZERO_C or self.t_high <= ABSOLUTE_ZERO_C:
            raise ValueError(f"calibration temperatures must exceed {ABSOLUTE_ZERO_C} degC")
        if not self.t_low < self.t_high:
            raise ValueError(f"need t_low < t_high, got ({self.t_low}, {self.t_high})")

    @property
    def span(self) -> float:
        return self.t_high - self.t_low


@dataclass(frozen=True, eq=False)
class TemperatureMap:
    """Row-major per-pixel Celsius values, shape (height, width)."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.values, dtype=np.float64))
        if arr.ndim != 2:
            raise ValueError(f"expected (h, w) value array, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]


def pixel_temperature(i: int, extent: IntensityExtent, cal: CalibrationRange) -> float:
    """Celsius temperature of a single intensity under the calibration."""
    if extent.i_min == extent.i_max:
        raise DegenerateExtentError(
            f"uniform-intensity extent ({extent.i_min}); calibration undefined"
        )
    if not extent.i_min <= i <= extent.i_max:
        raise IntensityRangeError(
            f"intensity {i} outside extent [{extent.i_min}, {extent.i_max}]"
        )
    if i == extent.i_min:
        return cal.t_low
    if i == extent.i_max:
        return cal.t_high
    return cal.t_low + cal.span * (i - extent.i_min) / (extent.i_max - extent.i_min)


def temperature_map(
    img: GrayImage, cal: CalibrationRange, extent: IntensityExtent
) -> TemperatureMap:
    """Apply the calibration per pixel; bit-identical to the scalar rule."""
    if extent.i_min == extent.i_max:
        raise DegenerateExtentError(
            f"uniform-intensity extent ({extent.i_min}); calibration undefined"
        )
    arr = img.intensities
    bad = (arr < extent.i_min) | (arr > extent.i_max)
    if bad.any():
        y, x = np.argwhere(bad)[0]
        raise IntensityRangeError(
            f"pixel ({x}, {y}) intensity {arr[y, x]} outside extent"
            f" [{extent.i_min}, {extent.i_max}]"
        )
    gap = extent.i_max - extent.i_min
    values = cal.t_low + cal.span * (arr.astype(np.float64) - extent.i_min) / gap
    values[arr == extent.i_min] = cal.t_low
    values[arr == extent.i_max] = cal.t_high
    return TemperatureMap(values)


AGGREGATORS = ("mean", "median", "max")


def roi_temperature(tmap: TemperatureMap, roi: Roi, aggregator: str = "mean") -> float:
    """Aggregate the map over the ROI (mean by default)."""
    roi.check_fits(tmap.width, tmap.height)
    window = tmap.values[roi.y : roi.y + roi.h, roi.x : roi.x + roi.w]
    if aggregator == "mean":
        return float(window.mean())
    if aggregator == "median":
        return float(np.median(window))
    if aggregator == "max":
        return float(window.max())
    raise ValueError(f"unknown aggregator {aggregator!r} (expected one of {AGGREGATORS})")


@dataclass(frozen=True)
class ValidationReport:
    """Estimated temperature against reference readings, in Celsius."""

    estimated: float
    references: tuple[float, ...]
    mean_reference: float = field(init=False)
    abs_error: float = field(init=False)
    accuracy_pct: float = field(init=False)

    def __post_init__(self):
        mean_ref = sum(self.references) / len(self.references)
        object.__setattr__(self, "mean_reference", mean_ref)
        object.__setattr__(self, "abs_error", abs(self.estimated - mean_ref))
        object.__setattr__(self, "accuracy_pct", (1.0 - self.abs_error / mean_ref) * 100.0)

    @property
    def accuracy_display(self) -> str:
        """Nearest-integer percent, round half up."""
        return f"{math.floor(self.accuracy_pct + 0.5)}%"


def accuracy(estimated: float, references: list[float]) -> ValidationReport:
    """Relative-accuracy report of an estimate against reference readings.

    The metric is (1 - |error| / mean_reference) * 100 with everything in
    Celsius, and is undefined for non-positive mean references.
    """
    if not references:
        raise ValueError("at least one reference temperature is required")
    mean_ref = sum(references) / len(references)
    if mean_ref <= 0.0:
        raise MetricUndefinedError(
            f"accuracy metric undefined for mean reference {mean_ref} degC <= 0"
        )
    return ValidationReport(estimated, tuple(references))
