"""Write the four 512x512 8-bit grayscale evaluation images.

The images come from scikit-image's bundled test data (needs the optional
``scikit-image`` package).  RGB sources are reduced to Rec.601 luminance by
``load_image`` semantics, so the committed PNGs are already gray.

    python demos/00_build_corpus.py tests/data/corpus
"""

import sys
from pathlib import Path

import numpy as np
import skimage.data

from satenhance import save_image

REC601 = np.array([0.299, 0.587, 0.114])

SOURCES = {
    "astronaut": skimage.data.astronaut,  # portrait, stands in for Lena
    "camera": skimage.data.camera,
    "gravel": skimage.data.gravel,  # aerial-like texture
    "moon": skimage.data.moon,  # low-contrast remote-sensing scene
}


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, loader in SOURCES.items():
        img = loader().astype(np.float64)
        if img.ndim == 3:
            img = np.floor(img[..., :3] @ REC601 + 0.5)
        assert img.shape == (512, 512), (name, img.shape)
        save_image(img, out / f"{name}.png")
        print(f"{name}: {img.shape[1]}x{img.shape[0]} range [{img.min():.0f}, {img.max():.0f}]")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/corpus")
