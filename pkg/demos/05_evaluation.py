# %% [markdown]
# # Corpus evaluation
#
# Each ground-truth image is halved, corrupted with 5% salt and pepper
# noise (seed 42) and restored by the full chain and by the baseline
# (median, bicubic x2, global equalization).  The same numbers come out of
# ``satenhance evaluate --corpus tests/data/corpus``.

# %%
import time
from pathlib import Path

from satenhance import EnhanceConfig, NoiseSpec, evaluate, load_image

ROOT = Path(__file__).resolve().parents[1]
noise = NoiseSpec(density=0.05, seed=42)

# %%
for wavelet in ("haar", "db2"):
    cfg = EnhanceConfig(wavelet=wavelet)
    start = time.perf_counter()
    print(f"-- {wavelet}")
    print(f"{'image':10s} {'proposed':>9s} {'baseline':>9s} {'entropy':>8s}")
    for path in sorted((ROOT / "tests/data/corpus").glob("*.png")):
        proposed, baseline = evaluate(load_image(path), cfg, noise)
        print(f"{path.stem:10s} {proposed.psnr_db:9.2f} {baseline.psnr_db:9.2f} {proposed.entropy_test:8.3f}")
    print(f"({time.perf_counter() - start:.1f} s)")
