"""Wavelet/SVD resolution and contrast enhancement for grayscale imagery."""

from .filters import NoiseSpec, SplitMix64, add_salt_pepper, median_filter
from .histogram import equalize_ghe, histogram256
from .image import ImageIOError, PixelRect, crop, load_image, pad_to_even, save_image
from .interpolate import bicubic_downscale_half, bicubic_resize
from .linalg import (
    ConvergenceError,
    SvdFactors,
    max_singular_value,
    reconstruct,
    scale_singular_values,
    svd,
)
from .metrics import MetricsReport, compare, entropy_diff, mse, psnr, rmse
from .pipeline import (
    DegenerateInputError,
    EnhanceConfig,
    StageTrace,
    baseline_enhance,
    contrast_enhance,
    enhance_full,
    evaluate,
    resolution_enhance,
)
from .wavelet import SubbandSet, WaveletSpec, dwt2, idwt2, make_wavelet, swt2

__version__ = "0.1.0"
