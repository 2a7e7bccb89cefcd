"""Fidelity metrics (MSE, RMSE, PSNR) and adjacent-difference entropy."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .image import as_image, quantize

__all__ = ["MetricsReport", "mse", "rmse", "psnr", "entropy_diff", "compare"]

PEAK = 255.0


def _pair(a, b):
    a = as_image(a, "reference")
    b = as_image(b, "test")
    if a.shape != b.shape:
        raise ValueError(f"image sizes differ: {a.shape[::-1]} vs {b.shape[::-1]}")
    return a, b


def mse(a, b) -> float:
    a, b = _pair(a, b)
    return float(np.mean((a - b) ** 2))


def rmse(a, b) -> float:
    return math.sqrt(mse(a, b))


def psnr(a, b, r: float = PEAK) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    if not r > 0:
        raise ValueError(f"peak value must be positive, got {r}")
    err = mse(a, b)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(r * r / err)


def entropy_diff(img) -> float:
    """Shannon entropy (bits) of horizontal neighbour differences.

    Pixels are first quantized to integer gray levels; the differences
    ``p[r, c+1] - p[r, c]`` over all rows form the symbol distribution.
    """
    img = as_image(img)
    if img.shape[1] < 2:
        raise ValueError(f"entropy needs width >= 2, got {img.shape[1]}")
    levels = quantize(img).astype(np.int16)
    diffs = np.diff(levels, axis=1).ravel()
    _, counts = np.unique(diffs, return_counts=True)
    p = counts / diffs.size
    return float(max(0.0, -np.sum(p * np.log2(p))))


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    rmse: float
    psnr_db: float
    entropy_ref: float
    entropy_test: float

    def to_json_dict(self) -> dict:
        """Plain dict with the PSNR infinity written as the string ``"inf"``."""
        out = asdict(self)
        if math.isinf(self.psnr_db):
            out["psnr_db"] = "inf"
        return out


def compare(reference, test, r: float = PEAK) -> MetricsReport:
    err = mse(reference, test)
    return MetricsReport(
        mse=err,
        rmse=math.sqrt(err),
        psnr_db=math.inf if err == 0.0 else 10.0 * math.log10(r * r / err),
        entropy_ref=entropy_diff(reference),
        entropy_test=entropy_diff(test),
    )
