"""Planck blackbody spectral radiance and temperature-unit helpers.

Radiance is evaluated in the frequency form

    B_v(T) = (2 h v^3 / c^2) * exp(-h v / k T) / (1 - exp(-h v / k T))

which is algebraically identical to the textbook 1/(e^x - 1) form but never
overflows: for visible light at body temperature the exponent is ~66, and for
deep-UV / low-T corners it can exceed 700, where e^x is not representable in
double precision.  The negative-exponent form degrades gracefully to 0.0 via
underflow instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

# SI-2019 exact defined values.
PLANCK_H = 6.62607015e-34  # J*s
BOLTZMANN_K = 1.380649e-23  # J/K
SPEED_OF_LIGHT = 2.99792458e8  # m/s

CELSIUS_OFFSET = 273.15

# Below roughly this temperature the red channel tracks thermal intensity well
# enough for the linear calibration to make sense.  Documented, not enforced.
RED_CHANNEL_VALIDITY_LIMIT_K = 800.0


@dataclass(frozen=True)
class SpectralBand:
    """A single wavelength band; frequency is derived from the wavelength."""

    name: str
    wavelength: float  # meters

    def __post_init__(self):
        if not (math.isfinite(self.wavelength) and self.wavelength > 0):
            raise DomainError(f"band wavelength must be finite and > 0, got {self.wavelength}")

    @property
    def frequency(self) -> float:
        """Band frequency in Hz (c / wavelength)."""
        return SPEED_OF_LIGHT / self.wavelength


RED_BAND = SpectralBand("red", 700e-9)
BLUE_BAND = SpectralBand("blue", 490e-9)


@dataclass(frozen=True)
class AbsoluteTemperature:
    """Temperature in kelvin, strictly positive.

    When built from Celsius the original value is kept alongside, so the
    Celsius round trip is bit-exact; (x + 273.15) - 273.15 is not, for
    most doubles.
    """

    kelvin: float
    _celsius: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.kelvin) and self.kelvin > 0):
            raise DomainError(f"absolute temperature must be finite and > 0 K, got {self.kelvin}")

    @classmethod
    def from_celsius(cls, t_cel: float) -> "AbsoluteTemperature":
        if not (math.isfinite(t_cel) and t_cel > -CELSIUS_OFFSET):
            raise DomainError(f"temperature must be > {-CELSIUS_OFFSET} degC, got {t_cel}")
        return cls(t_cel + CELSIUS_OFFSET, t_cel)

    def to_celsius(self) -> float:
        if self._celsius is not None:
            return self._celsius
        return self.kelvin - CELSIUS_OFFSET


def celsius_to_kelvin(t_cel: float) -> AbsoluteTemperature:
    return AbsoluteTemperature.from_celsius(t_cel)


def kelvin_to_celsius(t: AbsoluteTemperature) -> float:
    return t.to_celsius()


def spectral_radiance(band: SpectralBand, t: AbsoluteTemperature) -> float:
    """Blackbody spectral radiance for the band at temperature ``t``.

    Returns W * sr^-1 * m^-2 * Hz^-1.  Strictly increasing in ``t`` for a
    fixed band.  May underflow to 0.0 when h*v/k*T is huge (cold limit).
    """
    v = band.frequency
    x = PLANCK_H * v / (BOLTZMANN_K * t.kelvin)
    prefactor = 2.0 * PLANCK_H * v * v * v / (SPEED_OF_LIGHT * SPEED_OF_LIGHT)
    # exp(-x) / (1 - exp(-x)); -expm1(-x) keeps small-x accuracy.
    return prefactor * math.exp(-x) / (-math.expm1(-x))


def band_dominance_ratio(t: AbsoluteTemperature) -> float:
    """Blue-to-red radiance ratio; strictly increasing in temperature.

    Quantifies the shift of blackbody emission toward shorter wavelengths as
    the body heats up.
    """
    red = spectral_radiance(RED_BAND, t)
    blue = spectral_radiance(BLUE_BAND, t)
    if red == 0.0:
        raise DomainError(f"red-band radiance underflowed at T = {t.kelvin} K; ratio undefined")
    return blue / red
