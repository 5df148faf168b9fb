"""8-bit grayscale PNG reading/writing (thin Pillow wrappers)."""

from __future__ import annotations

import io
import os

import numpy as np
from PIL import Image


def write_gray_png(path, image: np.ndarray) -> None:
    """Write a (H, W) uint8 array.  Output bytes depend only on the pixels."""
    arr = np.asarray(image)
    if arr.dtype != np.uint8 or arr.ndim != 2:
        raise ValueError("expected a 2-D uint8 array")
    Image.fromarray(arr, mode="L").save(os.fspath(path), format="PNG")


def encode_gray_png(image: np.ndarray) -> bytes:
    arr = np.asarray(image)
    if arr.dtype != np.uint8 or arr.ndim != 2:
        raise ValueError("expected a 2-D uint8 array")
    buf = io.BytesIO()
    Image.fromarray(arr, mode="L").save(buf, format="PNG")
    return buf.getvalue()


def read_gray_png(path) -> np.ndarray:
    with Image.open(os.fspath(path)) as im:
        return np.asarray(im.convert("L"), dtype=np.uint8)


def decode_gray(payload: bytes) -> np.ndarray:
    """Decode any Pillow-readable raster payload to 8-bit grayscale."""
    with Image.open(io.BytesIO(payload)) as im:
        if im.mode in ("RGBA", "LA", "PA"):
            # composite over white so transparent background reads as paper
            bg = Image.new("RGBA", im.size, (255, 255, 255, 255))
            bg.paste(im.convert("RGBA"), (0, 0), im.convert("RGBA"))
            im = bg
        return np.asarray(im.convert("L"), dtype=np.uint8)
