"""Image data model, PPM/PNG codecs, and the red-channel preprocessing chain.

Images are immutable numpy-backed values.  PPM (binary P6, maxval 255) is the
bit-exact golden format; PNG round-trips by value, not by byte.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image as PILImage
from PIL import UnidentifiedImageError

from .errors import (
    BoundsError,
    DecodeError,
    EmptyImageError,
    UnsupportedFormatError,
)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RgbImage:
    """Row-major 8-bit RGB raster, shape (height, width, 3)."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) pixel array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be >= 1, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if np.any(arr < 0) or np.any(arr > 255):
                raise ValueError("channel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        object.__setattr__(self, "pixels", _freeze(arr))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other):
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Row-major 8-bit intensity raster, shape (height, width)."""

    intensities: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.intensities)
        if arr.ndim != 2:
            raise ValueError(f"expected (h, w) intensity array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be >= 1, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if np.any(arr < 0) or np.any(arr > 255):
                raise ValueError("intensities must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        object.__setattr__(self, "intensities", _freeze(arr))

    @property
    def width(self) -> int:
        return self.intensities.shape[1]

    @property
    def height(self) -> int:
        return self.intensities.shape[0]

    def __eq__(self, other):
        return isinstance(other, GrayImage) and np.array_equal(self.intensities, other.intensities)


@dataclass(frozen=True)
class Roi:
    """Rectangular region: left column, top row, width, height in pixels."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError(f"roi origin must be non-negative, got ({self.x}, {self.y})")
        if self.w < 1 or self.h < 1:
            raise ValueError(f"roi dimensions must be >= 1, got {self.w}x{self.h}")

    def check_fits(self, width: int, height: int) -> None:
        if self.x + self.w > width:
            raise BoundsError(
                f"roi right edge {self.x + self.w} exceeds image width {width}"
            )
        if self.y + self.h > height:
            raise BoundsError(
                f"roi bottom edge {self.y + self.h} exceeds image height {height}"
            )


@dataclass(frozen=True)
class IntensityExtent:
    """Lowest and highest intensities present in an image."""

    i_min: int
    i_max: int

    def __post_init__(self):
        if not (0 <= self.i_min <= self.i_max <= 255):
            raise ValueError(f"need 0 <= i_min <= i_max <= 255, got ({self.i_min}, {self.i_max})")


# --- codecs ------------------------------------------------------------------

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _parse_ppm_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # Skip whitespace and '#' comment lines, then read one token.
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c.isspace():
            pos += 1
        elif c == b"#":
            while pos < n and data[pos : pos + 1] != b"\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise DecodeError("unexpected end of PPM header", offset=pos)
    start = pos
    while pos < n and not data[pos : pos + 1].isspace():
        pos += 1
    return data[start:pos], pos


def decode_ppm(data: bytes) -> RgbImage:
    if data[:2] != b"P6":
        raise DecodeError(f"not a binary PPM (expected 'P6', got {data[:2]!r})", offset=0)
    pos = 2
    fields = []
    for _ in range(3):
        token, pos = _parse_ppm_token(data, pos)
        try:
            fields.append(int(token))
        except ValueError:
            raise DecodeError(f"non-numeric PPM header field {token!r}", offset=pos) from None
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise DecodeError(f"invalid PPM dimensions {width}x{height}", offset=pos)
    if maxval != 255:
        raise UnsupportedFormatError(f"only maxval 255 PPM supported, got {maxval}")
    pos += 1  # exactly one whitespace byte after maxval
    expected = width * height * 3
    raster = data[pos : pos + expected]
    if len(raster) < expected:
        raise DecodeError(
            f"truncated PPM raster: expected {expected} bytes, got {len(raster)}",
            offset=pos + len(raster),
        )
    arr = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    return RgbImage(arr)


def encode_ppm(img: RgbImage) -> bytes:
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def decode_png(data: bytes) -> RgbImage:
    try:
        pil = PILImage.open(io.BytesIO(data))
        pil.load()
    except UnidentifiedImageError:
        raise DecodeError("not a valid PNG stream", offset=0) from None
    except OSError as exc:
        raise DecodeError(f"corrupt PNG payload: {exc}") from None
    if pil.format != "PNG":
        raise UnsupportedFormatError(f"expected PNG, got {pil.format}")
    if pil.mode == "P":
        raise UnsupportedFormatError("paletted PNG is not supported")
    if pil.mode in ("I", "I;16", "I;16B", "I;16L", "I;16N"):
        raise UnsupportedFormatError("16-bit PNG is not supported")
    if pil.mode not in ("RGB", "RGBA"):
        raise UnsupportedFormatError(f"unsupported PNG mode {pil.mode!r} (need RGB or RGBA)")
    if pil.mode == "RGBA":
        pil = pil.convert("RGB")  # alpha discarded by design
    arr = np.asarray(pil, dtype=np.uint8)
    return RgbImage(arr)


def encode_png(img: RgbImage) -> bytes:
    buf = io.BytesIO()
    PILImage.fromarray(np.asarray(img.pixels), mode="RGB").save(buf, format="PNG")
    return buf.getvalue()


def decode(data: bytes, fmt: str | None = None) -> RgbImage:
    """Decode PNG or binary PPM bytes; sniffs the magic when ``fmt`` is None."""
    if fmt is None:
        if data[:len(PNG_MAGIC)] == PNG_MAGIC:
            fmt = "png"
        elif data[:2] == b"P6":
            fmt = "ppm"
        else:
            raise DecodeError("unrecognized image magic", offset=0)
    if fmt == "png":
        return decode_png(data)
    if fmt == "ppm":
        return decode_ppm(data)
    raise UnsupportedFormatError(f"unknown format {fmt!r} (expected 'png' or 'ppm')")


def encode(img: RgbImage, fmt: str) -> bytes:
    if fmt == "png":
        return encode_png(img)
    if fmt == "ppm":
        return encode_ppm(img)
    raise UnsupportedFormatError(f"unknown format {fmt!r} (expected 'png' or 'ppm')")


# --- preprocessing chain -----------------------------------------------------

def red_channel(img: RgbImage) -> GrayImage:
    """Project out the red component of every pixel."""
    return GrayImage(img.pixels[:, :, 0])


def crop(img, roi: Roi):
    """Crop an RgbImage or GrayImage to the ROI; returns the same kind."""
    roi.check_fits(img.width, img.height)
    if isinstance(img, RgbImage):
        return RgbImage(img.pixels[roi.y : roi.y + roi.h, roi.x : roi.x + roi.w, :])
    if isinstance(img, GrayImage):
        return GrayImage(img.intensities[roi.y : roi.y + roi.h, roi.x : roi.x + roi.w])
    raise TypeError(f"cannot crop {type(img).__name__}")


def intensity_extent(img: GrayImage) -> IntensityExtent:
    """Lowest and highest intensities actually present in the image."""
    arr = img.intensities
    if arr.size == 0:
        raise EmptyImageError("cannot take the extent of a zero-pixel image")
    return IntensityExtent(int(arr.min()), int(arr.max()))
