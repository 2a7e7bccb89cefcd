"""Global (general) histogram equalization on 256 gray levels."""

from __future__ import annotations

import numpy as np

from .image import as_image, quantize

__all__ = ["gray_levels", "histogram256", "ghe_lut", "equalize_ghe"]


def gray_levels(img) -> np.ndarray:
    """Integer bin index of every pixel: clamp to [0, 255], round half away from zero."""
    return quantize(img).astype(np.intp)


def histogram256(img) -> np.ndarray:
    return np.bincount(gray_levels(as_image(img)).ravel(), minlength=256)


def ghe_lut(counts: np.ndarray) -> np.ndarray | None:
    """Equalization lookup table for a 256-bin histogram.

    ``lut[v] = round((cdf[v] - cdf_min) / (N - cdf_min) * 255)`` with
    ``cdf_min`` the smallest non-zero cumulative count.  Returns ``None``
    when only one level is populated (the mapping is undefined).
    """
    cdf = np.cumsum(counts)
    total = int(cdf[-1])
    cdf_min = int(cdf[np.flatnonzero(cdf)[0]])
    if total == cdf_min:
        return None
    scaled = (cdf - cdf_min) / (total - cdf_min) * 255.0
    return np.floor(np.clip(scaled, 0.0, 255.0) + 0.5)


def equalize_ghe(img) -> np.ndarray:
    """Histogram-equalize ``img``; single-level images are returned unchanged."""
    img = as_image(img)
    levels = gray_levels(img)
    lut = ghe_lut(np.bincount(levels.ravel(), minlength=256))
    if lut is None:
        return img.copy()
    return lut[levels]
