"""Level-1 separable wavelet filter banks: DWT, inverse DWT and SWT.

Conventions (fixed, tested):

* Analysis is correlation with periodic extension:
  ``lo[n] = sum_k h[k] x[(2n + k) mod N]`` (decimated) or
  ``x[(n + k) mod N]`` (stationary, phase 0).  Downsampling the stationary
  bands at even indices therefore reproduces the decimated bands.
* The high-pass filter is the alternating flip of the low-pass one,
  ``g[k] = (-1)**k h[L-1-k]``.  For Haar this gives ``[1, -1]/sqrt(2)``.
* Rows are filtered first, then columns.  ``lh`` is row low-pass / column
  high-pass, so horizontal stripes (intensity varying down the columns)
  land in ``lh``; ``hl`` is row high-pass / column low-pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import as_image

__all__ = [
    "WaveletSpec",
    "SubbandSet",
    "make_wavelet",
    "WAVELETS",
    "dwt2",
    "idwt2",
    "swt2",
]

_SQRT2 = np.sqrt(2.0)
_SQRT3 = np.sqrt(3.0)

# Daubechies scaling filters, correlation order (first tap multiplies x[2n]).
_LOWPASS = {
    "haar": np.array([1.0, 1.0]) / _SQRT2,
    "db2": np.array([1 + _SQRT3, 3 + _SQRT3, 3 - _SQRT3, 1 - _SQRT3]) / (4 * _SQRT2),
    "db4": np.array([
        0.23037781330889650086,
        0.71484657055291564709,
        0.63088076792985890788,
        -0.027983769416859854211,
        -0.18703481171909308408,
        0.030841381835560763627,
        0.032883011666885199735,
        -0.010597401785069032105,
    ]),
}
_ALIASES = {"db1": "haar"}

WAVELETS = tuple(_LOWPASS)


@dataclass(frozen=True, eq=False)
class WaveletSpec:
    """Two-channel filter bank.

    ``synthesis_*`` filters are stored in convolution order; for orthonormal
    families they are the time-reversed analysis filters.
    """

    name: str
    analysis_lo: np.ndarray
    analysis_hi: np.ndarray
    synthesis_lo: np.ndarray
    synthesis_hi: np.ndarray

    @property
    def dc_gain_1d(self) -> float:
        return float(np.sum(self.analysis_lo))

    @property
    def dc_gain_2d(self) -> float:
        return self.dc_gain_1d ** 2

    def __len__(self):
        return len(self.analysis_lo)


@dataclass(eq=False)
class SubbandSet:
    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray
    mode: str = "decimated"
    source_size: tuple[int, int] | None = None  # (width, height)

    def __post_init__(self):
        if self.mode not in ("decimated", "stationary"):
            raise ValueError(f"unknown subband mode {self.mode!r}")

    def bands(self) -> dict[str, np.ndarray]:
        return {"LL": self.ll, "LH": self.lh, "HL": self.hl, "HH": self.hh}


def make_wavelet(name: str) -> WaveletSpec:
    key = _ALIASES.get(name.lower(), name.lower())
    if key not in _LOWPASS:
        raise ValueError(f"unknown wavelet {name!r}; supported: {', '.join(WAVELETS)}")
    h = _LOWPASS[key].copy()
    signs = np.where(np.arange(len(h)) % 2 == 0, 1.0, -1.0)
    g = signs * h[::-1]
    for arr in (h, g):
        arr.flags.writeable = False
    return WaveletSpec(
        name=key,
        analysis_lo=h,
        analysis_hi=g,
        synthesis_lo=h[::-1],
        synthesis_hi=g[::-1],
    )


def _resolve(wavelet) -> WaveletSpec:
    return wavelet if isinstance(wavelet, WaveletSpec) else make_wavelet(wavelet)


def _analyze(x: np.ndarray, filt: np.ndarray, axis: int, step: int) -> np.ndarray:
    """Periodic correlation of ``x`` with ``filt`` along ``axis``, keeping every ``step``-th output."""
    n = x.shape[axis]
    idx = (np.arange(0, n, step)[:, None] + np.arange(len(filt))[None, :]) % n
    taken = np.take(x, idx, axis=axis)  # axis expands to (out, taps)
    taken = np.moveaxis(taken, (axis, axis + 1), (-2, -1))
    return np.moveaxis(taken @ filt, -1, axis)


def _synthesize(lo: np.ndarray, hi: np.ndarray, spec: WaveletSpec, axis: int) -> np.ndarray:
    """Inverse of one decimated analysis step along ``axis``."""
    lo = np.moveaxis(lo, axis, -1)
    hi = np.moveaxis(hi, axis, -1)
    half = lo.shape[-1]
    n = 2 * half
    out = np.zeros(lo.shape[:-1] + (n,))
    taps = len(spec.synthesis_lo)
    base = 2 * np.arange(half)
    for k in range(taps):
        # synthesis filters are in convolution order: tap L-1-k pairs with analysis tap k
        f_lo = spec.synthesis_lo[taps - 1 - k]
        f_hi = spec.synthesis_hi[taps - 1 - k]
        # (2n + k) mod N is a permutation over n for fixed k, so += is safe
        out[..., (base + k) % n] += f_lo * lo + f_hi * hi
    return np.moveaxis(out, -1, axis)


def _split2(img: np.ndarray, spec: WaveletSpec, step: int):
    row_lo = _analyze(img, spec.analysis_lo, axis=1, step=step)
    row_hi = _analyze(img, spec.analysis_hi, axis=1, step=step)
    ll = _analyze(row_lo, spec.analysis_lo, axis=0, step=step)
    lh = _analyze(row_lo, spec.analysis_hi, axis=0, step=step)
    hl = _analyze(row_hi, spec.analysis_lo, axis=0, step=step)
    hh = _analyze(row_hi, spec.analysis_hi, axis=0, step=step)
    return ll, lh, hl, hh


def _require_even(img: np.ndarray, op: str) -> None:
    h, w = img.shape
    if h % 2 or w % 2:
        raise ValueError(f"{op} needs even dimensions, got {w}x{h}; use pad_to_even first")


def dwt2(img, wavelet="haar") -> SubbandSet:
    """Single-level decimated 2-D DWT with periodic extension.

    >>> b = dwt2([[1.0, 2.0], [3.0, 4.0]])
    >>> [round(float(x[0, 0]), 12) for x in (b.ll, b.lh, b.hl, b.hh)]
    [5.0, -2.0, -1.0, 0.0]
    """
    img = as_image(img)
    _require_even(img, "dwt2")
    spec = _resolve(wavelet)
    ll, lh, hl, hh = _split2(img, spec, step=2)
    h, w = img.shape
    return SubbandSet(ll, lh, hl, hh, mode="decimated", source_size=(w, h))


def idwt2(bands: SubbandSet, wavelet="haar") -> np.ndarray:
    if bands.mode != "decimated":
        raise ValueError("idwt2 expects decimated sub-bands, got stationary ones")
    arrays = [as_image(b, name) for name, b in bands.bands().items()]
    shape = arrays[0].shape
    if any(a.shape != shape for a in arrays):
        raise ValueError(f"sub-band shapes differ: {[a.shape for a in arrays]}")
    spec = _resolve(wavelet)
    ll, lh, hl, hh = arrays
    row_lo = _synthesize(ll, lh, spec, axis=0)
    row_hi = _synthesize(hl, hh, spec, axis=0)
    return _synthesize(row_lo, row_hi, spec, axis=1)


def swt2(img, wavelet="haar") -> SubbandSet:
    """Single-level stationary (undecimated) 2-D wavelet transform.

    Every band has the size of ``img``; band ``[2i, 2j]`` samples equal the
    decimated ``dwt2`` band at ``[i, j]``.
    """
    img = as_image(img)
    _require_even(img, "swt2")
    spec = _resolve(wavelet)
    ll, lh, hl, hh = _split2(img, spec, step=1)
    h, w = img.shape
    return SubbandSet(ll, lh, hl, hh, mode="stationary", source_size=(w, h))
