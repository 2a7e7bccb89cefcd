"""Grayscale image container helpers and 8-bit file I/O.

Images are plain 2-D ``float64`` numpy arrays of shape ``(height, width)``.
Values are nominal 8-bit gray levels but intermediate results are allowed to
leave ``[0, 255]``; quantization only happens in :func:`save_image`.

Supported containers: PGM (ASCII ``P2`` and binary ``P5``, maxval <= 255) and
PNG (8-bit gray or RGB on read, 8-bit gray on write).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from PIL import Image as PILImage

__all__ = [
    "ImageIOError",
    "PixelRect",
    "as_image",
    "load_image",
    "save_image",
    "quantize",
    "pad_to_even",
    "crop",
]

_REC601 = np.array([0.299, 0.587, 0.114])
_PGM_SUFFIXES = (".pgm", ".pnm")


class ImageIOError(OSError):
    """Raised when an image file cannot be read or written."""

    def __init__(self, path, reason: str):
        self.path = os.fspath(path)
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")


@dataclass(frozen=True)
class PixelRect:
    x0: int
    y0: int
    width: int
    height: int

    def __post_init__(self):
        if self.x0 < 0 or self.y0 < 0:
            raise ValueError(f"rect origin must be non-negative, got ({self.x0}, {self.y0})")
        if self.width < 1 or self.height < 1:
            raise ValueError(f"rect size must be positive, got {self.width}x{self.height}")


def as_image(data, name: str = "image") -> np.ndarray:
    """Validate ``data`` and return it as a 2-D float64 array.

    Raises ``ValueError`` for non 2-D input, empty input or non-finite values.
    """
    img = np.asarray(data, dtype=np.float64)
    if img.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {img.shape}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"{name} must be at least 1x1, got shape {img.shape}")
    if not np.all(np.isfinite(img)):
        raise ValueError(f"{name} contains non-finite values")
    return img


def quantize(img: np.ndarray) -> np.ndarray:
    """Clamp to [0, 255] and round half away from zero to ``uint8``."""
    clipped = np.clip(np.asarray(img, dtype=np.float64), 0.0, 255.0)
    # values are non-negative after clipping, so floor(x + 0.5) rounds half away
    return np.floor(clipped + 0.5).astype(np.uint8)


# ---------------------------------------------------------------------------
# PGM
# ---------------------------------------------------------------------------

def _pgm_tokens(data: bytes, count: int, path) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace separated header tokens, skipping comments.

    Returns the tokens and the offset just past the last token.
    """
    tokens = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos < n and data[pos:pos + 1] == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        if pos >= n:
            raise ImageIOError(path, "malformed PGM header: truncated")
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _read_pgm(data: bytes, path) -> np.ndarray:
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise ImageIOError(path, f"malformed PGM header: bad magic {magic!r}")
    tokens, pos = _pgm_tokens(data[2:], 3, path)
    pos += 2
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise ImageIOError(path, f"malformed PGM header: {tokens!r}") from None
    if width < 1 or height < 1:
        raise ImageIOError(path, f"malformed PGM header: size {width}x{height}")
    if maxval < 1 or maxval > 65535:
        raise ImageIOError(path, f"malformed PGM header: maxval {maxval}")
    if maxval > 255:
        raise ImageIOError(path, f"unsupported bit depth: maxval {maxval} needs more than 8 bits")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates header from raster
        raster = data[pos + 1:pos + 1 + count]
        if len(raster) < count:
            raise ImageIOError(path, f"truncated raster: expected {count} bytes, got {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8)
    else:
        fields = data[pos:].split()
        if len(fields) < count:
            raise ImageIOError(path, f"truncated raster: expected {count} values, got {len(fields)}")
        try:
            pixels = np.array([int(f) for f in fields[:count]], dtype=np.int64)
        except ValueError:
            raise ImageIOError(path, "malformed P2 raster: non-integer sample") from None
    if pixels.max(initial=0) > maxval or pixels.min(initial=0) < 0:
        raise ImageIOError(path, f"sample outside [0, {maxval}]")
    return pixels.reshape(height, width).astype(np.float64)


def _write_pgm(q: np.ndarray, path) -> None:
    h, w = q.shape
    header = f"P5\n{w} {h}\n255\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(q.tobytes())


# ---------------------------------------------------------------------------
# PNG
# ---------------------------------------------------------------------------

def _read_png(path) -> np.ndarray:
    try:
        with PILImage.open(path) as pil:
            pil.load()
            mode = pil.mode
            if mode in ("I;16", "I;16B", "I;16L", "I", "F", "RGB;16"):
                raise ImageIOError(path, f"unsupported bit depth: PNG mode {mode}")
            if mode == "1":
                pil = pil.convert("L")
            elif mode == "P":
                pil = pil.convert("RGB")
            elif mode == "LA":
                pil = pil.getchannel("L")
            elif mode == "RGBA":
                pil = pil.convert("RGB")
            arr = np.asarray(pil)
    except ImageIOError:
        raise
    except OSError as exc:
        raise ImageIOError(path, f"cannot decode PNG: {exc}") from None

    if arr.dtype != np.uint8:
        raise ImageIOError(path, f"unsupported bit depth: dtype {arr.dtype}")
    if arr.ndim == 2:
        return arr.astype(np.float64)
    if arr.ndim == 3 and arr.shape[2] == 3:
        luma = arr.astype(np.float64) @ _REC601
        return np.floor(luma + 0.5)
    raise ImageIOError(path, f"unsupported PNG layout {arr.shape}")


def load_image(path) -> np.ndarray:
    """Load an 8-bit grayscale image from a PGM or PNG file.

    RGB PNGs are reduced to Rec.601 luminance rounded to the nearest integer.
    The container is detected from the file signature, not the extension.
    """
    try:
        with open(path, "rb") as fh:
            head = fh.read(8)
    except OSError as exc:
        raise ImageIOError(path, f"cannot read file: {exc.strerror or exc}") from None

    if head.startswith(b"\x89PNG"):
        return _read_png(path)
    if head[:1] == b"P":
        with open(path, "rb") as fh:
            return _read_pgm(fh.read(), path)
    raise ImageIOError(path, "unrecognized format (expected PGM or PNG)")


def save_image(img, path) -> None:
    """Write ``img`` as 8-bit grayscale; format chosen by extension (.pgm/.pnm/.png)."""
    q = quantize(as_image(img))
    ext = os.path.splitext(os.fspath(path))[1].lower()
    try:
        if ext in _PGM_SUFFIXES:
            _write_pgm(q, path)
        elif ext == ".png":
            PILImage.fromarray(q, mode="L").save(path, format="PNG")
        else:
            raise ImageIOError(path, f"unsupported output extension {ext!r}")
    except ImageIOError:
        raise
    except OSError as exc:
        raise ImageIOError(path, f"cannot write file: {exc.strerror or exc}") from None


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------

def pad_to_even(img) -> tuple[np.ndarray, tuple[int, int]]:
    """Replicate the last row/column once where a dimension is odd.

    Returns the padded image and the original ``(width, height)``.
    """
    img = as_image(img)
    h, w = img.shape
    padded = np.pad(img, ((0, h % 2), (0, w % 2)), mode="edge")
    return padded, (w, h)


def crop(img, rect: PixelRect) -> np.ndarray:
    img = as_image(img)
    h, w = img.shape
    if rect.x0 + rect.width > w or rect.y0 + rect.height > h:
        raise ValueError(
            f"rect {rect.width}x{rect.height}+{rect.x0}+{rect.y0} outside {w}x{h} image"
        )
    return img[rect.y0:rect.y0 + rect.height, rect.x0:rect.x0 + rect.width].copy()
