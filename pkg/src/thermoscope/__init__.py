"""Red-channel pseudocolor thermography toolkit.

Estimates per-pixel and region-of-interest temperatures from ordinary RGB
images: the red channel is read as a thermal intensity field and mapped to
Celsius by a linear calibration anchored to the image's intensity extent.
Includes a Planck blackbody radiance module and a synthetic-scene oracle so
every pipeline stage is independently checkable.
"""

__version__ = "0.1.0"

from .colormap import jet, pseudocolor
from .estimation import (
    CalibrationRange,
    TemperatureMap,
    ValidationReport,
    accuracy,
    pixel_temperature,
    roi_temperature,
    temperature_map,
)
from .imaging import (
    GrayImage,
    IntensityExtent,
    RgbImage,
    Roi,
    crop,
    decode,
    encode,
    intensity_extent,
    red_channel,
)
from .radiometry import (
    BLUE_BAND,
    RED_BAND,
    AbsoluteTemperature,
    SpectralBand,
    band_dominance_ratio,
    celsius_to_kelvin,
    kelvin_to_celsius,
    spectral_radiance,
)
from .synthesis import (
    SyntheticScene,
    generate_scene,
    load_scene,
    quantization_bound,
    render,
    round_trip_error,
    save_scene,
)

__all__ = [
    "AbsoluteTemperature",
    "BLUE_BAND",
    "CalibrationRange",
    "GrayImage",
    "IntensityExtent",
    "RED_BAND",
    "RgbImage",
    "Roi",
    "SpectralBand",
    "SyntheticScene",
    "TemperatureMap",
    "ValidationReport",
    "accuracy",
    "band_dominance_ratio",
    "celsius_to_kelvin",
    "crop",
    "decode",
    "encode",
    "generate_scene",
    "intensity_extent",
    "jet",
    "kelvin_to_celsius",
    "load_scene",
    "pixel_temperature",
    "pseudocolor",
    "quantization_bound",
    "red_channel",
    "render",
    "roi_temperature",
    "round_trip_error",
    "save_scene",
    "spectral_radiance",
    "temperature_map",
]
