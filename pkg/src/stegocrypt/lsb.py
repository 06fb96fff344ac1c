"""Least-significant-bit embedding in the R, G, B channels of a raster.

Payload bits are written most-significant-bit first, one bit per color
channel, walking R, G, B of pixel 0, then pixel 1, and so on row by row.
Alpha is never touched. Two payload framings are offered:

* delimited: the payload is followed by ``#####`` and extraction stops at
  the first occurrence. Only usable for payloads that cannot produce an
  early delimiter.
* framed: a 4-byte big-endian length precedes the payload, so any bytes
  (ciphertext included) round-trip.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, CorruptFrameError, DelimiterCollisionError, NoMessageError
from .raster import Raster

DELIMITER = b"#####"
HEADER_BYTES = 4


def capacity_bits(raster: Raster) -> int:
    return 3 * raster.width * raster.height


def _to_bits(data: bytes) -> np.ndarray:
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def _write_bits(cover: Raster, bits: np.ndarray) -> Raster:
    available = capacity_bits(cover)
    if bits.size > available:
        raise CapacityError(f"payload needs {bits.size} bits but the cover holds only {available}")
    out = cover.pixels.copy()
    rgb = out[..., :3].reshape(-1)  # copy, since the channel slice is not contiguous
    rgb[: bits.size] = (rgb[: bits.size] & 0xFE) | bits
    out[..., :3] = rgb.reshape(out.shape[0], out.shape[1], 3)
    return Raster(cover.width, cover.height, out)


def _read_bytes(stego: Raster) -> bytes:
    bits = stego.pixels[..., :3].reshape(-1) & 1
    usable = bits.size - bits.size % 8
    return np.packbits(bits[:usable]).tobytes()


def embed_delimited(cover: Raster, text: bytes) -> Raster:
    text = bytes(text)
    payload = text + DELIMITER
    # a trailing '#' would also make the delimiter appear early
    if payload.find(DELIMITER) != len(text):
        raise DelimiterCollisionError(
            "text contains the delimiter, or ends with '#', so extraction would stop early"
        )
    return _write_bits(cover, _to_bits(payload))


def extract_delimited(stego: Raster) -> bytes:
    data = _read_bytes(stego)
    end = data.find(DELIMITER)
    if end < 0:
        raise NoMessageError("no delimiter found in the image's least-significant bits")
    return data[:end]


def embed_framed(cover: Raster, payload: bytes) -> Raster:
    payload = bytes(payload)
    if len(payload) >= 1 << 32:
        raise CapacityError("payload length does not fit the 32-bit header")
    return _write_bits(cover, _to_bits(len(payload).to_bytes(HEADER_BYTES, "big") + payload))


def extract_framed(stego: Raster) -> bytes:
    data = _read_bytes(stego)
    if len(data) < HEADER_BYTES:
        raise CorruptFrameError("image too small to hold a length header")
    length = int.from_bytes(data[:HEADER_BYTES], "big")
    if length > len(data) - HEADER_BYTES:
        raise CorruptFrameError(
            f"header claims {length} bytes but only {len(data) - HEADER_BYTES} fit in the image"
        )
    return data[HEADER_BYTES : HEADER_BYTES + length]
