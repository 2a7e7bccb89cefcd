# %% [markdown]
# # Salt and pepper noise and the 3x3 median
#
# The noise generator is SplitMix64, so the same seed gives the same noise
# image everywhere.

# %%
from pathlib import Path

from satenhance import NoiseSpec, add_salt_pepper, load_image, median_filter, psnr

ROOT = Path(__file__).resolve().parents[1]
clean = load_image(ROOT / "tests/data/corpus/astronaut.png")

# %%
for density in (0.01, 0.05, 0.10, 0.20):
    noisy = add_salt_pepper(clean, NoiseSpec(density=density, seed=42))
    print(f"density {density:.2f}: noisy {psnr(clean, noisy):5.2f} dB -> ", end="")
    print(", ".join(
        f"{k}x{k} median {psnr(clean, median_filter(noisy, k)):5.2f} dB" for k in (3, 5)
    ))
