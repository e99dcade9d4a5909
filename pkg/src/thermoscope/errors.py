"""Exception hierarchy shared across the pipeline."""


class ThermoscopeError(Exception):
    """Base class for all library errors."""


class DomainError(ThermoscopeError):
    """A physical quantity was non-finite or outside its valid domain."""


class DecodeError(ThermoscopeError):
    """Malformed or truncated image data.

    ``offset`` is the byte position at which parsing failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedFormatError(ThermoscopeError):
    """Well-formed input in a variant we deliberately do not handle."""


class BoundsError(ThermoscopeError):
    """An ROI does not fit inside the image it is applied to."""


class EmptyImageError(ThermoscopeError):
    """An operation that needs pixels was given a zero-pixel image."""


class DegenerateExtentError(ThermoscopeError):
    """i_min == i_max: the linear calibration is undefined."""


class IntensityRangeError(ThermoscopeError):
    """An intensity fell outside the extent the calibration was built on."""


class DegenerateCalibrationError(ThermoscopeError):
    """t_low == t_high: rendering cannot place temperatures on the intensity axis."""


class MetricUndefinedError(ThermoscopeError):
    """The relative-accuracy metric is undefined for the given reference."""
