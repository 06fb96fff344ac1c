"""Byte-message <-> integer-block framing shared by the RSA and ElGamal byte modes.

A message is extended with a mandatory 0x01 terminator, zero-padded to a
whole number of ``block_size`` bytes, and cut into big-endian integers.
``block_size`` is ``(bitlen(modulus) - 1) // 8`` so every block is below
the modulus.
"""

from __future__ import annotations

from .errors import CorruptCiphertextError, KeyTooSmallError

TERMINATOR = 0x01


def block_size(modulus: int) -> int:
    size = (modulus.bit_length() - 1) // 8
    if size == 0:
        raise KeyTooSmallError(
            f"a {modulus.bit_length()}-bit modulus cannot carry a whole byte per block"
        )
    return size


def split_message(message: bytes, size: int) -> list[int]:
    padded = bytes(message) + bytes([TERMINATOR])
    padded += bytes(-len(padded) % size)
    return [int.from_bytes(padded[i : i + size], "big") for i in range(0, len(padded), size)]


def join_blocks(values: list[int], size: int) -> bytes:
    if not values:
        raise CorruptCiphertextError("no ciphertext blocks")
    limit = 1 << (8 * size)
    chunks = []
    for v in values:
        if v >= limit:
            raise CorruptCiphertextError("decrypted block exceeds the plaintext block size")
        chunks.append(v.to_bytes(size, "big"))
    data = b"".join(chunks)
    body = data.rstrip(b"\x00")
    if len(data) - len(body) >= size or not body or body[-1] != TERMINATOR:
        raise CorruptCiphertextError("malformed padding")
    return body[:-1]
