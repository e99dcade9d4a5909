"""Regenerate the checked-in image fixtures.

The PNG is written by OpenCV so the decode path under test (Pillow-backed)
is checked against an independent encoder; the PPM is built byte-by-byte
from the format definition.  Run from the repo root:

    python tests/fixtures/make_fixtures.py
"""

from pathlib import Path

import cv2
import numpy as np

HERE = Path(__file__).parent


def gradient_pixels():
    # 8x6 deterministic gradient with distinct channels.
    h, w = 6, 8
    arr = np.zeros((h, w, 3), dtype=np.uint8)
    for y in range(h):
        for x in range(w):
            arr[y, x] = ((x * 255) // (w - 1), (y * 255) // (h - 1), (x * y * 7) % 256)
    return arr


def main():
    rgb = gradient_pixels()
    ok, png = cv2.imencode(".png", rgb[:, :, ::-1])  # cv2 wants BGR
    assert ok
    (HERE / "gradient.png").write_bytes(png.tobytes())
    header = f"P6\n{rgb.shape[1]} {rgb.shape[0]}\n255\n".encode()
    (HERE / "gradient.ppm").write_bytes(header + rgb.tobytes())
    print("fixtures written")


if __name__ == "__main__":
    main()
