"""Command-line surface: pseudocolor rendering, ROI estimation, validation,
and synthetic-scene tooling.

Exit codes are a stable scripting contract:
  0 success, 2 decode failure, 3 write failure, 4 degenerate data, 5 usage.
Reports are JSON; a human-readable summary goes to stdout first, and the JSON
is written to --report when given, otherwise printed after the summary.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .colormap import pseudocolor
from .errors import (
    BoundsError,
    DecodeError,
    DegenerateCalibrationError,
    DegenerateExtentError,
    MetricUndefinedError,
    UnsupportedFormatError,
)
from .estimation import (
    AGGREGATORS,
    DEFAULT_CALIBRATION,
    CalibrationRange,
    accuracy,
    roi_temperature,
    temperature_map,
)
from .imaging import Roi, crop, decode, encode, intensity_extent, red_channel
from .synthesis import (
    generate_scene,
    load_scene,
    quantization_bound,
    render,
    round_trip_error,
    save_scene,
)

EXIT_OK = 0
EXIT_DECODE = 2
EXIT_WRITE = 3
EXIT_DEGENERATE = 4
EXIT_USAGE = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit 2; usage is 5 here
        raise UsageError(message)


def _parse_roi(text: str) -> Roi:
    try:
        x, y, w, h = (int(p) for p in text.split(","))
        return Roi(x, y, w, h)
    except ValueError as exc:
        raise UsageError(f"--roi must be x,y,w,h integers: {exc}") from None


def _parse_cal(text: str) -> CalibrationRange:
    try:
        lo, hi = (float(p) for p in text.split(","))
        return CalibrationRange(lo, hi)
    except ValueError as exc:
        raise UsageError(f"--cal must be t_low,t_high in degC: {exc}") from None


def _read_image(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise DecodeError(f"cannot read input {path!r}: {exc.strerror}") from None
    return decode(data)


def _write_bytes(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise _WriteFailure(f"cannot write {path!r}: {exc.strerror}") from None


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _WriteFailure(f"cannot write {path!r}: {exc.strerror}") from None


class _WriteFailure(Exception):
    pass


def _format_for(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    return "png" if path.lower().endswith(".png") else "ppm"


def _emit_report(report: dict, report_path: str | None, summary: list[str]) -> None:
    for line in summary:
        print(line)
    text = json.dumps(report, indent=2)
    if report_path:
        _write_text(report_path, text + "\n")
    else:
        print(text)


# --- commands ----------------------------------------------------------------

def cmd_pseudocolor(args) -> int:
    img = _read_image(args.input)
    out = encode(pseudocolor(red_channel(img)), _format_for(args.output, args.format))
    _write_bytes(args.output, out)
    print(f"wrote pseudocolor image to {args.output}")
    return EXIT_OK


def _estimate(args) -> tuple[dict, float]:
    if args.roi is None:
        raise UsageError("--roi x,y,w,h is required")
    roi = _parse_roi(args.roi)
    cal = _parse_cal(args.cal)
    img = _read_image(args.input)
    gray = red_channel(img)
    roi.check_fits(gray.width, gray.height)
    if args.extent_scope == "roi":
        # roi-local normalization: calibrate and aggregate over the crop only
        window = crop(gray, roi)
        extent = intensity_extent(window)
        tmap = temperature_map(window, cal, extent)
        agg_roi = Roi(0, 0, roi.w, roi.h)
    else:
        extent = intensity_extent(gray)
        tmap = temperature_map(gray, cal, extent)
        agg_roi = roi
    temps = {agg: roi_temperature(tmap, agg_roi, agg) for agg in AGGREGATORS}
    report = {
        "command": "estimate",
        "config": {
            "input": args.input,
            "roi": {"x": roi.x, "y": roi.y, "w": roi.w, "h": roi.h},
            "calibration_c": {"t_low": cal.t_low, "t_high": cal.t_high},
            "extent_scope": args.extent_scope,
            "aggregator": args.aggregator,
        },
        "extent": {"i_min": extent.i_min, "i_max": extent.i_max},
        "roi_temperature_c": temps[args.aggregator],
        "roi_temperatures_c": temps,
    }
    if args.pseudocolor_out:
        fmt = _format_for(args.pseudocolor_out, None)
        _write_bytes(args.pseudocolor_out, encode(pseudocolor(gray), fmt))
        report["pseudocolor_image"] = args.pseudocolor_out
    return report, temps[args.aggregator]


def cmd_estimate(args) -> int:
    report, temp = _estimate(args)
    summary = [
        f"roi temperature ({args.aggregator}): {temp:.4f} degC",
        f"extent: i_min={report['extent']['i_min']} i_max={report['extent']['i_max']}"
        f" (scope: {args.extent_scope})",
    ]
    _emit_report(report, args.report, summary)
    return EXIT_OK


def cmd_validate(args) -> int:
    if not args.reference:
        raise UsageError("at least one --reference temperature is required")
    if args.estimated is not None:
        estimated = args.estimated
        report = {"command": "validate", "config": {"estimated_override": True}}
    elif args.input:
        report, estimated = _estimate(args)
        report["command"] = "validate"
    else:
        raise UsageError("either --estimated or an input image with --roi is required")
    val = accuracy(estimated, args.reference)
    report["validation"] = {
        "estimated_c": val.estimated,
        "references_c": list(val.references),
        "mean_reference_c": val.mean_reference,
        "abs_error_c": val.abs_error,
        "accuracy_pct": val.accuracy_pct,
        "accuracy_display": val.accuracy_display,
    }
    summary = [
        f"estimated {val.estimated:.4f} degC vs mean reference {val.mean_reference:.4f} degC",
        f"accuracy: {val.accuracy_display} ({val.accuracy_pct:.4f}%)",
    ]
    _emit_report(report, args.report, summary)
    return EXIT_OK


def cmd_synth(args) -> int:
    cal = _parse_cal(args.cal)
    scene = generate_scene(args.width, args.height, cal, args.seed)
    _write_bytes(args.out, encode(render(scene), _format_for(args.out, args.format)))
    print(f"wrote synthetic scene image to {args.out}")
    if args.field:
        _write_text(args.field, save_scene(scene))
        print(f"wrote ground-truth field to {args.field}")
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    if args.scene:
        try:
            scene = load_scene(Path(args.scene).read_text())
        except OSError as exc:
            raise DecodeError(f"cannot read scene {args.scene!r}: {exc.strerror}") from None
    else:
        if args.width is None or args.height is None or args.seed is None:
            raise UsageError("either --scene or --width/--height/--seed is required")
        scene = generate_scene(args.width, args.height, _parse_cal(args.cal), args.seed)
    error = round_trip_error(scene)
    bound = quantization_bound(scene.cal)
    print(f"max_abs_error: {error:.6f} degC")
    print(f"bound: {bound:.6f} degC")
    if error <= bound + 1e-9:
        print("round trip within bound")
        return EXIT_OK
    print("round trip EXCEEDS bound")
    return 1


# --- argument wiring ---------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="thermoscope", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pseudocolor", help="render a jet pseudocolor image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--format", choices=("png", "ppm"))
    p.set_defaults(func=cmd_pseudocolor)

    def add_estimate_args(p):
        p.add_argument("--roi", help="x,y,w,h in pixels")
        p.add_argument("--cal", default=f"{DEFAULT_CALIBRATION[0]},{DEFAULT_CALIBRATION[1]}",
                       help="t_low,t_high in degC (default %(default)s)")
        p.add_argument("--extent-scope", choices=("frame", "roi"), default="frame")
        p.add_argument("--aggregator", choices=AGGREGATORS, default="mean")
        p.add_argument("--pseudocolor-out")
        p.add_argument("--report", help="write the JSON report here instead of stdout")

    p = sub.add_parser("estimate", help="estimate ROI temperature")
    p.add_argument("input")
    add_estimate_args(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("validate", help="compare an estimate with reference readings")
    p.add_argument("input", nargs="?")
    add_estimate_args(p)
    p.add_argument("--estimated", type=float, help="skip estimation, use this degC value")
    p.add_argument("--reference", type=float, action="append", default=[],
                   help="reference degC reading (repeatable)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("synth", help="generate a synthetic scene image")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cal", default=f"{DEFAULT_CALIBRATION[0]},{DEFAULT_CALIBRATION[1]}")
    p.add_argument("--out", required=True)
    p.add_argument("--field", help="also write the ground-truth field file here")
    p.add_argument("--format", choices=("png", "ppm"))
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("roundtrip", help="check the render/estimate round-trip bound")
    p.add_argument("--scene", help="ground-truth field file from synth --field")
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--cal", default=f"{DEFAULT_CALIBRATION[0]},{DEFAULT_CALIBRATION[1]}")
    p.set_defaults(func=cmd_roundtrip)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecodeError, UnsupportedFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except _WriteFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRITE
    except DegenerateExtentError as exc:
        print(f"error: uniform-intensity image, calibration undefined ({exc})", file=sys.stderr)
        return EXIT_DEGENERATE
    except (DegenerateCalibrationError, MetricUndefinedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
