"""Encrypt-then-embed: carry RSA or ElGamal ciphertext inside a cover image.

Envelope wire format (all integers big-endian)::

    offset  size  field
    0       4     magic b"SCP1"
    4       1     cipher id: 0x01 RSA, 0x02 ElGamal
    5       4     block count (logical blocks)
    9       ...   Nat entries, each a 2-byte length L then L bytes of the value
                  (minimal encoding: no leading zero byte, zero is L = 0)

RSA stores one Nat per block. ElGamal stores two per block, e1 then e2.
The serialized envelope is embedded with :func:`lsb.embed_framed`.
"""

from __future__ import annotations

import random
import struct
from dataclasses import dataclass
from typing import Union

from . import elgamal, lsb, rsa
from .errors import (
    BlockTooLargeError,
    CapacityError,
    CorruptCiphertextError,
    CorruptFrameError,
    EnvelopeError,
    NotAStegoEnvelopeError,
    WrongKeyKindError,
)
from .raster import Raster

MAGIC = b"SCP1"
CIPHER_RSA = 0x01
CIPHER_ELGAMAL = 0x02
_NATS_PER_BLOCK = {CIPHER_RSA: 1, CIPHER_ELGAMAL: 2}
_HEAD = struct.Struct(">4sBI")

PublicKey = Union[rsa.RsaPublicKey, elgamal.ElGamalPublicKey]
PrivateKey = Union[rsa.RsaPrivateKey, elgamal.ElGamalPrivateKey]


@dataclass(frozen=True)
class CipherEnvelope:
    cipher_id: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.cipher_id not in _NATS_PER_BLOCK:
            raise EnvelopeError(f"unknown cipher id {self.cipher_id:#04x}")
        if len(self.values) % _NATS_PER_BLOCK[self.cipher_id]:
            raise EnvelopeError("ElGamal envelopes need an even number of values")

    @property
    def block_count(self) -> int:
        return len(self.values) // _NATS_PER_BLOCK[self.cipher_id]

    def blocks(self) -> list:
        """Logical blocks: ints for RSA, ciphertext pairs for ElGamal."""
        if self.cipher_id == CIPHER_RSA:
            return list(self.values)
        v = self.values
        return [elgamal.ElGamalCiphertext(v[i], v[i + 1]) for i in range(0, len(v), 2)]


def serialize_envelope(env: CipherEnvelope) -> bytes:
    parts = [_HEAD.pack(MAGIC, env.cipher_id, env.block_count)]
    for v in env.values:
        raw = v.to_bytes((v.bit_length() + 7) // 8, "big")
        if len(raw) > 0xFFFF:
            raise EnvelopeError("value too large for a 2-byte length prefix")
        parts.append(len(raw).to_bytes(2, "big") + raw)
    return b"".join(parts)


def parse_envelope(data: bytes) -> CipherEnvelope:
    data = bytes(data)
    if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
        raise NotAStegoEnvelopeError("missing SCP1 magic")
    if len(data) < _HEAD.size:
        raise EnvelopeError("truncated envelope header")
    _, cipher_id, count = _HEAD.unpack_from(data)
    if cipher_id not in _NATS_PER_BLOCK:
        raise EnvelopeError(f"unknown cipher id {cipher_id:#04x}")
    wanted = count * _NATS_PER_BLOCK[cipher_id]
    # each value takes at least its 2-byte length prefix
    if wanted * 2 > len(data) - _HEAD.size:
        raise EnvelopeError(f"declared {count} blocks exceed the {len(data)}-byte input")
    values = []
    pos = _HEAD.size
    for _ in range(wanted):
        if pos + 2 > len(data):
            raise EnvelopeError("truncated value length")
        size = int.from_bytes(data[pos : pos + 2], "big")
        pos += 2
        if pos + size > len(data):
            raise EnvelopeError("truncated value")
        raw = data[pos : pos + size]
        if raw[:1] == b"\x00":
            raise EnvelopeError("non-minimal value encoding")
        values.append(int.from_bytes(raw, "big"))
        pos += size
    if pos != len(data):
        raise EnvelopeError(f"{len(data) - pos} trailing bytes after the last block")
    return CipherEnvelope(cipher_id, tuple(values))


def seal(message: bytes, key: PublicKey, rng: random.Random | None = None) -> CipherEnvelope:
    """Encrypt ``message`` into an envelope without embedding it."""
    if isinstance(key, rsa.RsaPublicKey):
        return CipherEnvelope(CIPHER_RSA, tuple(rsa.encrypt_bytes(message, key)))
    if isinstance(key, elgamal.ElGamalPublicKey):
        cts = elgamal.encrypt_bytes(message, key, rng)
        return CipherEnvelope(CIPHER_ELGAMAL, tuple(v for ct in cts for v in (ct.e1, ct.e2)))
    raise WrongKeyKindError(f"not a public key: {type(key).__name__}")


def open_envelope(env: CipherEnvelope, key: PrivateKey) -> bytes:
    """Decrypt an envelope; the key kind must match the envelope's cipher id."""
    if isinstance(key, rsa.RsaPrivateKey):
        expected, decrypt = CIPHER_RSA, rsa.decrypt_bytes
    elif isinstance(key, elgamal.ElGamalPrivateKey):
        expected, decrypt = CIPHER_ELGAMAL, elgamal.decrypt_bytes
    else:
        raise WrongKeyKindError(f"not a private key: {type(key).__name__}")
    if env.cipher_id != expected:
        names = {CIPHER_RSA: "RSA", CIPHER_ELGAMAL: "ElGamal"}
        raise WrongKeyKindError(
            f"envelope holds {names[env.cipher_id]} ciphertext but a {names[expected]} key was given"
        )
    try:
        return decrypt(env.blocks(), key)
    except BlockTooLargeError as exc:
        raise CorruptCiphertextError(f"ciphertext does not fit this key: {exc}") from None


def hide(cover: Raster, message: bytes, key: PublicKey, rng: random.Random | None = None) -> Raster:
    payload = serialize_envelope(seal(message, key, rng))
    need = len(payload) + lsb.HEADER_BYTES
    have = lsb.capacity_bits(cover) // 8
    if need > have:
        raise CapacityError(f"envelope needs {need} bytes of capacity but the cover offers {have}")
    return lsb.embed_framed(cover, payload)


def reveal(stego: Raster, key: PrivateKey) -> bytes:
    try:
        payload = lsb.extract_framed(stego)
    except CorruptFrameError as exc:
        raise NotAStegoEnvelopeError(f"no embedded envelope: {exc}") from None
    return open_envelope(parse_envelope(payload), key)
