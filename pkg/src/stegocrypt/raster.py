"""RGBA raster model and lossless PNG/BMP I/O."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DomainError, ImageDecodeError, UnsupportedFormatError

LOSSLESS_FORMATS = frozenset({"PNG", "BMP"})
_ACCEPTED_MODES = frozenset({"1", "L", "LA", "P", "PA", "RGB", "RGBA"})


@dataclass(frozen=True, eq=False)
class Raster:
    """Immutable width x height grid of 8-bit RGBA pixels.

    ``pixels`` is a read-only uint8 array of shape (height, width, 4), so a
    flat view walks pixels row-major with channels in R, G, B, A order.
    """

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self) -> None:
        if self.pixels.shape != (self.height, self.width, 4) or self.pixels.dtype != np.uint8:
            raise DomainError(
                f"pixels must be uint8 of shape ({self.height}, {self.width}, 4), "
                f"got {self.pixels.dtype} {self.pixels.shape}"
            )
        self.pixels.flags.writeable = False

    @classmethod
    def from_array(cls, array: np.ndarray) -> Raster:
        """Wrap a copy of an (h, w, 4) array; values must already fit in 0..255."""
        arr = np.asarray(array)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise DomainError(f"expected an (h, w, 4) array, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise DomainError("channel values must lie in 0..255")
            arr = arr.astype(np.uint8)
        return cls(arr.shape[1], arr.shape[0], arr.copy())

    @classmethod
    def from_pixels(cls, width: int, height: int, pixels) -> Raster:
        """Build from a row-major sequence of (r, g, b, a) tuples."""
        flat = list(pixels)
        if len(flat) != width * height:
            raise DomainError(f"expected {width * height} pixels, got {len(flat)}")
        arr = np.array(flat, dtype=np.int64).reshape(height, width, 4)
        return cls.from_array(arr)

    def pixel(self, x: int, y: int) -> tuple[int, int, int, int]:
        return tuple(int(v) for v in self.pixels[y, x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Raster):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __len__(self) -> int:
        return self.width * self.height


def load_image(path: str | os.PathLike) -> Raster:
    try:
        with Image.open(path) as img:
            fmt = img.format
            if fmt not in LOSSLESS_FORMATS:
                raise UnsupportedFormatError(
                    f"{fmt or 'unknown'} is not a lossless format; lossy codecs destroy "
                    "least-significant bits, use PNG"
                )
            if img.mode not in _ACCEPTED_MODES:
                raise UnsupportedFormatError(f"image mode {img.mode} is not 8-bit per channel")
            img.load()
            rgba = img.convert("RGBA")
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        if isinstance(exc, FileNotFoundError):
            raise
        raise ImageDecodeError(f"cannot decode {os.fspath(path)}: {exc}") from exc
    return Raster.from_array(np.asarray(rgba, dtype=np.uint8))


def save_image(raster: Raster, path: str | os.PathLike) -> None:
    """Write ``raster`` as 8-bit RGBA PNG regardless of the file extension."""
    if raster.width == 0 or raster.height == 0:
        raise DomainError("cannot save a zero-sized raster")
    Image.fromarray(np.ascontiguousarray(raster.pixels)).save(path, format="PNG")
