"""Impulse-noise injection and median-filter denoising.

Noise is drawn from SplitMix64 so the same seed produces identical noise
images on any platform and in any language.  The generator, one step::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    z = z ^ (z >> 31)

A uniform double in [0, 1) is ``(z >> 11) * 2**-53``.  The initial state is
the seed itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import as_image

__all__ = ["NoiseSpec", "SplitMix64", "add_salt_pepper", "median_filter"]

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Portable 64-bit generator (Steele, Lea & Flood 2014)."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniforms(self, count: int) -> np.ndarray:
        """Next ``count`` uniforms, vectorized; advances the state like ``count`` calls."""
        k = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + k * np.uint64(_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
        self.state = (self.state + count * _GAMMA) & _MASK64
        return (z >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class NoiseSpec:
    density: float
    seed: int = 0
    kind: str = "salt_pepper"

    def __post_init__(self):
        if self.kind != "salt_pepper":
            raise ValueError(f"unsupported noise kind {self.kind!r}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")


def add_salt_pepper(img, spec: NoiseSpec) -> np.ndarray:
    """Corrupt pixels to 0 or 255 with probability ``spec.density``.

    Pixels are visited row-major.  Each consumes one uniform draw ``u``; it
    is corrupted when ``u < density``, in which case a second draw ``v``
    picks pepper (0, ``v < 0.5``) or salt (255).
    """
    img = as_image(img)
    if spec.kind != "salt_pepper":
        raise ValueError(f"unsupported noise kind {spec.kind!r}")
    out = img.copy()
    flat = out.reshape(-1)
    n = flat.size
    draws = SplitMix64(spec.seed).uniforms(2 * n).tolist()
    density = spec.density
    pos = 0
    for i in range(n):
        u = draws[pos]
        pos += 1
        if u < density:
            flat[i] = 0.0 if draws[pos] < 0.5 else 255.0
            pos += 1
    return out


def median_filter(img, kernel: int = 3) -> np.ndarray:
    """Square-window median with replicate borders."""
    img = as_image(img)
    h, w = img.shape
    if kernel < 3 or kernel % 2 == 0:
        raise ValueError(f"kernel must be odd and >= 3, got {kernel}")
    if kernel > min(h, w):
        raise ValueError(f"kernel {kernel} exceeds image size {w}x{h}")
    r = kernel // 2
    padded = np.pad(img, r, mode="edge")
    windows = sliding_window_view(padded, (kernel, kernel))
    return np.median(windows.reshape(h, w, kernel * kernel), axis=-1)
