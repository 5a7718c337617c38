"""Portable Float Map (PFM) reading and writing for 3-channel raw images."""

from __future__ import annotations

import numpy as np


class PfmError(ValueError):
    pass


def _read_token(f) -> bytes:
    tok = b""
    while True:
        ch = f.read(1)
        if not ch:
            break
        if ch.isspace():
            if tok:
                break
            continue
        tok += ch
    return tok


def read_pfm(path) -> np.ndarray:
    """Read a colour PFM into an (H, W, 3) float32 array, top row first."""
    with open(path, "rb") as f:
        tag = _read_token(f)
        if tag == b"Pf":
            raise PfmError(f"{path}: grayscale PFM, 3-channel required")
        if tag != b"PF":
            raise PfmError(f"{path}: not a PFM file (header {tag!r})")
        try:
            width = int(_read_token(f))
            height = int(_read_token(f))
            scale = float(_read_token(f))
        except ValueError as exc:
            raise PfmError(f"{path}: malformed header") from exc
        if width <= 0 or height <= 0:
            raise PfmError(f"{path}: invalid dimensions {width}x{height}")
        if scale == 0:
            raise PfmError(f"{path}: scale must be nonzero")
        dtype = "<f4" if scale < 0 else ">f4"
        count = width * height * 3
        payload = f.read(count * 4)
    if len(payload) != count * 4:
        raise PfmError(f"{path}: truncated payload ({len(payload)} of {count * 4} bytes)")
    data = np.frombuffer(payload, dtype=dtype).reshape(height, width, 3)
    # PFM stores rows bottom to top
    return np.flipud(data).astype(np.float32)


def write_pfm(image, path) -> None:
    """Write an (H, W, 3) image as little-endian PFM."""
    img = np.asarray(image)
    if img.ndim != 3 or img.shape[2] != 3:
        raise PfmError(f"3-channel required, got image of shape {img.shape}")
    height, width = img.shape[:2]
    if width == 0 or height == 0:
        raise PfmError("cannot write an empty image")
    data = np.ascontiguousarray(np.flipud(img), dtype="<f4")
    with open(path, "wb") as f:
        f.write(f"PF\n{width} {height}\n-1.0\n".encode("ascii"))
        f.write(data.tobytes())

