"""Command-line entry point: ``satenhance <subcommand> ...``.

Exit status is 0 on success, 1 on a usage error and 2 when processing fails.
Diagnostics go to stderr; machine-readable output (JSON, histograms) to stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .filters import NoiseSpec, add_salt_pepper, median_filter
from .histogram import histogram256
from .image import ImageIOError, load_image, save_image
from .interpolate import bicubic_resize
from .linalg import ConvergenceError
from .metrics import compare
from .pipeline import (
    DegenerateInputError,
    EnhanceConfig,
    StageTrace,
    contrast_enhance,
    enhance_full,
    evaluate,
    resolution_enhance,
)
from .wavelet import WAVELETS, dwt2

IMAGE_SUFFIXES = (".png", ".pgm", ".pnm")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _rescale_for_view(band: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Affine map of ``band`` onto [0, 255]; returns (image, scale, offset)."""
    lo, hi = float(band.min()), float(band.max())
    scale = 255.0 / (hi - lo) if hi > lo else 0.0
    return (band - lo) * scale, scale, -lo * scale


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _write_trace(trace: StageTrace, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name in ("denoised", "resolution", "equalized", "final"):
        img = getattr(trace, name)
        if img is not None:
            save_image(img, directory / f"{name}.png")
    scales = {}
    for prefix in ("dwt_bands", "swt_bands", "corrected_bands"):
        bands = getattr(trace, prefix)
        if bands is None:
            continue
        for label, band in bands.bands().items():
            view, scale, offset = _rescale_for_view(band)
            key = f"{prefix.removesuffix('_bands')}_{label}"
            save_image(view, directory / f"{key}.png")
            scales[key] = {"scale": scale, "offset": offset}
    meta = {"xi": trace.xi, "contrast_skipped": trace.contrast_skipped, "band_views": scales}
    (directory / "trace.json").write_text(json.dumps(meta, indent=2) + "\n")


def _config(args) -> EnhanceConfig:
    return EnhanceConfig(
        wavelet=args.wavelet,
        median_kernel=args.median_kernel,
        denoise=not args.no_denoise,
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_enhance(args) -> int:
    img = load_image(args.input)
    trace = StageTrace() if args.trace_dir else None
    out = enhance_full(img, _config(args), trace)
    save_image(out, args.output)
    if trace is not None:
        _write_trace(trace, Path(args.trace_dir))
    return 0


def cmd_resolve(args) -> int:
    img = load_image(args.input)
    save_image(resolution_enhance(img, EnhanceConfig(wavelet=args.wavelet)), args.output)
    return 0


def cmd_contrast(args) -> int:
    img = load_image(args.input)
    if args.dump_histogram:
        print(",".join(str(int(c)) for c in histogram256(img)))
    save_image(contrast_enhance(img, args.wavelet), args.output)
    return 0


def cmd_denoise(args) -> int:
    save_image(median_filter(load_image(args.input), args.median_kernel), args.output)
    return 0


def cmd_addnoise(args) -> int:
    spec = NoiseSpec(density=args.density, seed=args.seed)
    save_image(add_salt_pepper(load_image(args.input), spec), args.output)
    return 0


def cmd_resize(args) -> int:
    save_image(bicubic_resize(load_image(args.input), args.factor), args.output)
    return 0


def cmd_dwt(args) -> int:
    img = load_image(args.input)
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for label, band in dwt2(img, args.wavelet).bands().items():
        view, scale, offset = _rescale_for_view(band)
        path = out_dir / f"{label}.png"
        save_image(view, path)
        print(_dumps({
            "band": label,
            "path": str(path),
            "min": float(band.min()),
            "max": float(band.max()),
            "scale": scale,
            "offset": offset,
        }))
    return 0


def cmd_metrics(args) -> int:
    report = compare(load_image(args.reference), load_image(args.test))
    print(_dumps(report.to_json_dict()))
    return 0


def cmd_evaluate(args) -> int:
    paths = [Path(p) for p in args.images]
    if args.corpus:
        corpus = Path(args.corpus)
        if not corpus.is_dir():
            raise ImageIOError(corpus, "corpus is not a directory")
        paths += [p for p in corpus.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES]
    if not paths:
        raise UsageError("evaluate: give --corpus DIR or at least one image")
    paths = sorted(set(paths), key=lambda p: p.name)

    cfg = _config(args)
    noise = NoiseSpec(density=args.density, seed=args.seed)
    wins = 0
    psnrs = {"proposed": [], "baseline": []}
    for path in paths:
        proposed, baseline = evaluate(load_image(path), cfg, noise)
        won = proposed.psnr_db > baseline.psnr_db
        wins += won
        psnrs["proposed"].append(proposed.psnr_db)
        psnrs["baseline"].append(baseline.psnr_db)
        print(_dumps({
            "image": path.name,
            "proposed": proposed.to_json_dict(),
            "baseline": baseline.to_json_dict(),
            "proposed_wins": bool(won),
        }), flush=True)

    def mean(vals):
        m = float(np.mean(vals))
        return "inf" if math.isinf(m) else m

    print(_dumps({
        "summary": True,
        "images": len(paths),
        "proposed_wins": int(wins),
        "mean_psnr_proposed": mean(psnrs["proposed"]),
        "mean_psnr_baseline": mean(psnrs["baseline"]),
    }))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_wavelet(p):
    p.add_argument("--wavelet", default="haar", choices=WAVELETS,
                   help="wavelet family (default: haar)")


def _add_pipeline_flags(p):
    _add_wavelet(p)
    p.add_argument("--median-kernel", type=int, default=3, metavar="K",
                   help="odd median window size (default: 3)")
    p.add_argument("--no-denoise", action="store_true", help="skip the median filter stage")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="satenhance",
        description="Wavelet/SVD resolution and contrast enhancement of 8-bit grayscale images.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    p = sub.add_parser("enhance", help="full chain: denoise, resolution x2, contrast")
    p.add_argument("input")
    p.add_argument("output")
    _add_pipeline_flags(p)
    p.add_argument("--trace-dir", metavar="DIR", help="write intermediate stages here")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; enhance draws no randomness")
    p.set_defaults(func=cmd_enhance)

    p = sub.add_parser("resolve", help="resolution enhancement only")
    p.add_argument("input")
    p.add_argument("output")
    _add_wavelet(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("contrast", help="contrast enhancement only")
    p.add_argument("input")
    p.add_argument("output")
    _add_wavelet(p)
    p.add_argument("--dump-histogram", action="store_true",
                   help="print the input's 256 bin counts to stdout")
    p.set_defaults(func=cmd_contrast)

    p = sub.add_parser("denoise", help="median filter")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--median-kernel", type=int, default=3, metavar="K")
    p.set_defaults(func=cmd_denoise)

    p = sub.add_parser("addnoise", help="salt and pepper noise")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--density", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_addnoise)

    p = sub.add_parser("resize", help="bicubic resize (baseline generation)")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--factor", type=float, default=2.0)
    p.set_defaults(func=cmd_resize)

    p = sub.add_parser("dwt", help="write the four level-1 DWT bands as viewable images")
    p.add_argument("input")
    p.add_argument("output_dir")
    _add_wavelet(p)
    p.set_defaults(func=cmd_dwt)

    p = sub.add_parser("metrics", help="MSE/RMSE/PSNR/entropy of TEST against REFERENCE")
    p.add_argument("reference")
    p.add_argument("test")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("evaluate", help="degrade, restore and score ground-truth images")
    p.add_argument("images", nargs="*", help="ground-truth images (even-sized)")
    p.add_argument("--corpus", metavar="DIR", help="directory of ground-truth images")
    _add_pipeline_flags(p)
    p.add_argument("--density", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_evaluate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            raise UsageError("satenhance: error: a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ImageIOError, DegenerateInputError, ConvergenceError, ValueError, OSError) as exc:
        print(f"satenhance: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
