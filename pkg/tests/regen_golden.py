"""Regenerate the committed regression fixtures under tests/data/golden.

Only rerun after an intentional numerical change, and review the diff:

    python tests/regen_golden.py
"""

from pathlib import Path

from satenhance import (
    EnhanceConfig,
    NoiseSpec,
    PixelRect,
    add_salt_pepper,
    bicubic_downscale_half,
    crop,
    enhance_full,
    load_image,
    save_image,
)

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"

# 128x128 window of the camera image around the photographer
CAMERA_WINDOW = PixelRect(x0=160, y0=96, width=128, height=128)
FIXTURE_NOISE = NoiseSpec(density=0.05, seed=42)


def fixture_images():
    truth = crop(load_image(DATA / "corpus" / "camera.png"), CAMERA_WINDOW)
    small = bicubic_downscale_half(truth)
    noisy = add_salt_pepper(small, FIXTURE_NOISE)
    return truth, small, noisy


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    truth, small, noisy = fixture_images()
    save_image(small, GOLDEN / "fixture_64.png")
    save_image(noisy, GOLDEN / "fixture_64_noisy.png")
    # enhance the stored 8-bit file, exactly what the CLI would read
    stored = load_image(GOLDEN / "fixture_64_noisy.png")
    save_image(enhance_full(stored, EnhanceConfig()), GOLDEN / "enhance_64_haar.png")
    for path in sorted(GOLDEN.iterdir()):
        print(path)


if __name__ == "__main__":
    main()
