"""Separable bicubic resampling (Keys cubic convolution, a = -0.5).

Output sample ``d`` along an axis reads the source at
``(d + 0.5) / factor - 0.5`` (pixel-center alignment); samples outside the
image replicate the nearest edge.  Downscaling applies no pre-blur.
"""

from __future__ import annotations

import math

import numpy as np

from .image import as_image

__all__ = ["keys_kernel", "bicubic_resize", "bicubic_downscale_half", "output_size"]

KEYS_A = -0.5


def keys_kernel(x, a: float = KEYS_A) -> np.ndarray:
    x = np.abs(np.asarray(x, dtype=np.float64))
    x2 = x * x
    x3 = x2 * x
    near = (a + 2.0) * x3 - (a + 3.0) * x2 + 1.0
    far = a * x3 - 5.0 * a * x2 + 8.0 * a * x - 4.0 * a
    return np.where(x <= 1.0, near, np.where(x < 2.0, far, 0.0))


def _round_half_up(v: float) -> int:
    return int(math.floor(v + 0.5))


def output_size(width: int, height: int, factor: float) -> tuple[int, int]:
    """Output ``(width, height)`` for resizing by ``factor``."""
    return _round_half_up(width * factor), _round_half_up(height * factor)


def _axis_taps(n_in: int, n_out: int, factor: float):
    src = (np.arange(n_out) + 0.5) / factor - 0.5
    base = np.floor(src)
    t = src - base
    offsets = np.arange(-1, 3)
    idx = np.clip(base[:, None].astype(np.int64) + offsets[None, :], 0, n_in - 1)
    weights = keys_kernel(t[:, None] - offsets[None, :])
    return idx, weights


def _resample_axis(x: np.ndarray, n_out: int, factor: float, axis: int) -> np.ndarray:
    idx, weights = _axis_taps(x.shape[axis], n_out, factor)
    taken = np.moveaxis(np.take(x, idx, axis=axis), (axis, axis + 1), (-2, -1))
    out = np.einsum("...ok,ok->...o", taken, weights)
    return np.moveaxis(out, -1, axis)


def bicubic_resize(img, factor: float, order: str = "rows-first") -> np.ndarray:
    """Resize by ``factor`` in both directions.

    ``order`` selects which axis is resampled first ("rows-first" filters
    along each row, i.e. horizontally, before the columns); both orders
    agree to rounding error.
    """
    img = as_image(img)
    if not factor > 0:
        raise ValueError(f"factor must be positive, got {factor}")
    h, w = img.shape
    out_w, out_h = output_size(w, h, factor)
    if out_w < 1 or out_h < 1:
        raise ValueError(f"factor {factor} shrinks {w}x{h} to an empty image")
    if order == "rows-first":
        tmp = _resample_axis(img, out_w, factor, axis=1)
        return _resample_axis(tmp, out_h, factor, axis=0)
    if order == "columns-first":
        tmp = _resample_axis(img, out_h, factor, axis=0)
        return _resample_axis(tmp, out_w, factor, axis=1)
    raise ValueError(f"unknown order {order!r}")


def bicubic_downscale_half(img) -> np.ndarray:
    """Halve both dimensions.

    Each output sample weights its four source neighbours per axis by
    ``[-1/16, 9/16, 9/16, -1/16]``; a 2x2 image collapses to its mean.
    """
    img = as_image(img)
    h, w = img.shape
    if h % 2 or w % 2:
        raise ValueError(f"bicubic_downscale_half needs even dimensions, got {w}x{h}")
    return bicubic_resize(img, 0.5)
