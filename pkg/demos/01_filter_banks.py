# %% [markdown]
# # Level-1 filter banks
#
# One decomposition level of the decimated DWT and of the stationary SWT on
# the camera image, with the properties the rest of the pipeline relies on.

# %%
from pathlib import Path

import numpy as np

from satenhance import dwt2, idwt2, load_image, make_wavelet, swt2

ROOT = Path(__file__).resolve().parents[1]
img = load_image(ROOT / "tests/data/corpus/camera.png")
print("image", img.shape, "range", img.min(), img.max())

# %% [markdown]
# Filters.  The high-pass filter is the alternating flip of the low-pass one.

# %%
for name in ("haar", "db2", "db4"):
    w = make_wavelet(name)
    print(f"{name:5s} lo={np.round(w.analysis_lo, 4)}  sum={w.dc_gain_1d:.6f}")

# %% [markdown]
# Decimated bands are half size.  LL holds most of the energy; LH responds
# to horizontal edges (intensity changing down the columns).

# %%
bands = dwt2(img, "haar")
total = float(np.sum(img ** 2))
for label, band in bands.bands().items():
    print(f"{label}: shape {band.shape}, energy share {np.sum(band ** 2) / total:.4%}")

rec = idwt2(bands, "haar")
print("perfect reconstruction error:", np.abs(rec - img).max())

# %% [markdown]
# The stationary transform keeps full size.  Its even-indexed samples are
# the decimated bands, and it commutes with circular shifts.

# %%
st = swt2(img, "haar")
print("SWT band shape", st.lh.shape)
print("even samples == DWT:", np.allclose(st.lh[::2, ::2], bands.lh))
shifted = swt2(np.roll(img, (3, 5), axis=(0, 1)), "haar")
print("shift invariant:", np.allclose(np.roll(st.hh, (3, 5), axis=(0, 1)), shifted.hh))
