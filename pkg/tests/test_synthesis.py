"""Synthetic-scene oracle: rendering, round trips, fixture serialization."""

from pathlib import Path

import numpy as np
import pytest

from thermoscope.errors import DegenerateExtentError
from thermoscope.estimation import CalibrationRange
from thermoscope.imaging import encode
from thermoscope.synthesis import (
    SyntheticScene,
    generate_scene,
    load_scene,
    quantization_bound,
    render,
    round_trip_error,
    save_scene,
)

FIXTURES = Path(__file__).parent / "fixtures"
CAL = CalibrationRange(30.0, 40.0)

# seed-42 64x64 scene under cal 30..40; frozen after the first verified run
REGRESSION_MAX_ERROR = 0.019600886484788305


def scene_from(values, cal=CAL, seed=0):
    return SyntheticScene(np.array(values, dtype=np.float64), cal, seed)


class TestRender:
    def test_endpoints(self):
        scene = scene_from([[30.0, 40.0]])
        img = render(scene)
        assert img.pixels[0, 0, 0] == 0
        assert img.pixels[0, 1, 0] == 255

    def test_midpoint_rounds_half_up(self):
        scene = scene_from([[30.0, 35.0, 40.0]])
        assert render(scene).pixels[0, 1, 0] == 128  # 127.5 -> 128

    def test_green_blue_zero(self):
        scene = generate_scene(16, 16, CAL, 3)
        img = render(scene)
        assert np.all(img.pixels[:, :, 1:] == 0)

    def test_matches_scalar_arithmetic(self):
        scene = generate_scene(32, 32, CAL, 5)
        img = render(scene)
        import math

        for y in range(32):
            for x in range(32):
                u = (scene.field[y, x] - CAL.t_low) / CAL.span
                assert img.pixels[y, x, 0] == math.floor(u * 255.0 + 0.5)

    def test_full_extent_guaranteed(self):
        for seed in range(10):
            img = render(generate_scene(8, 8, CAL, seed))
            red = img.pixels[:, :, 0]
            assert red.min() == 0 and red.max() == 255

    def test_deterministic(self):
        a = render(generate_scene(16, 16, CAL, 42))
        b = render(generate_scene(16, 16, CAL, 42))
        assert a == b


class TestRoundTrip:
    def test_exact_levels_zero_error(self):
        # temperatures sitting exactly on the 256 quantization levels
        levels = CAL.t_low + CAL.span * np.array([0, 51, 102, 204, 255]) / 255.0
        scene = scene_from(levels.reshape(1, 5))
        assert round_trip_error(scene) == 0.0

    def test_half_quantum_bound(self):
        for seed in range(20):
            scene = generate_scene(32, 32, CAL, seed)
            assert round_trip_error(scene) <= quantization_bound(CAL) + 1e-9

    def test_bound_value(self):
        assert quantization_bound(CAL) == pytest.approx(10.0 / 510.0, rel=1e-15)

    def test_regression_constant(self):
        scene = generate_scene(64, 64, CAL, 42)
        assert round_trip_error(scene) == pytest.approx(REGRESSION_MAX_ERROR, rel=1e-12)

    def test_wide_calibrations(self):
        for seed, (lo, hi) in enumerate([(-20.0, 100.0), (0.0, 1.0), (36.0, 41.5)]):
            cal = CalibrationRange(lo, hi)
            scene = generate_scene(24, 24, cal, seed)
            assert round_trip_error(scene) <= quantization_bound(cal) + 1e-9

    def test_degenerate_source_errors(self):
        # a field that renders to a single intensity has no usable extent;
        # generate_scene pins both endpoints so this needs a hand-built scene
        scene = scene_from([[35.0, 35.0]])
        with pytest.raises(DegenerateExtentError):
            round_trip_error(scene)


class TestGolden:
    def test_scene_image_stable(self):
        scene = generate_scene(64, 64, CAL, 42)
        golden = (FIXTURES / "scene_s42_64.ppm").read_bytes()
        assert encode(render(scene), "ppm") == golden


class TestSerialization:
    def test_round_trip(self):
        scene = generate_scene(7, 5, CalibrationRange(-3.25, 91.5), 17)
        loaded = load_scene(save_scene(scene))
        assert np.array_equal(loaded.field, scene.field)
        assert loaded.cal == scene.cal
        assert loaded.seed == scene.seed

    def test_header_mismatch_rejected(self):
        text = save_scene(generate_scene(4, 4, CAL, 1))
        broken = text.replace("4 4", "4 3", 1)
        with pytest.raises(ValueError):
            load_scene(broken)


class TestSceneValidation:
    def test_field_within_calibration(self):
        with pytest.raises(ValueError):
            scene_from([[25.0, 40.0]])  # below t_low

    def test_needs_two_pixels(self):
        with pytest.raises(ValueError):
            generate_scene(1, 1, CAL, 0)
