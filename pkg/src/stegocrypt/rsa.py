"""Textbook RSA: no padding scheme, d computed modulo Euler's totient.

This is deliberately the unpadded construction (C = M^e mod n). It is
deterministic and malleable and must not be used to protect real data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _framing
from .errors import BlockTooLargeError, DomainError
from .numtheory import Nat, gcd, gen_prime, is_probable_prime, mod_inverse, mod_pow

DEFAULT_E = 65537


@dataclass(frozen=True)
class RsaPublicKey:
    e: Nat
    n: Nat


@dataclass(frozen=True)
class RsaPrivateKey:
    d: Nat
    n: Nat


@dataclass(frozen=True)
class RsaKeyPair:
    public: RsaPublicKey
    private: RsaPrivateKey
    p: Nat
    q: Nat
    phi: Nat


def keygen_from_primes(p: Nat, q: Nat, e: Nat) -> RsaKeyPair:
    if p == q:
        raise DomainError("p and q must be distinct")
    for name, v in (("p", p), ("q", q)):
        if not is_probable_prime(v):
            raise DomainError(f"{name} = {v} is not prime")
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise DomainError(f"e = {e} must satisfy 1 < e < phi = {phi}")
    if gcd(e, phi) != 1:
        raise DomainError(f"e = {e} is not coprime to phi = {phi}")
    n = p * q
    d = mod_inverse(e, phi)
    return RsaKeyPair(RsaPublicKey(e, n), RsaPrivateKey(d, n), p, q, phi)


def keygen(bits: int, e: Nat = DEFAULT_E, rng: random.Random | None = None) -> RsaKeyPair:
    """Generate a keypair whose modulus has exactly ``bits`` significant bits.

    Primes are redrawn until n has full length, p != q and gcd(e, phi) = 1.
    """
    if bits < 16 or bits % 2:
        raise DomainError("bits must be an even number >= 16")
    if e < 3 or e % 2 == 0:
        raise DomainError("e must be odd and >= 3")
    # phi > 2**(bits-2) for bits/2-bit primes, so this keeps e < phi
    if e.bit_length() > bits - 2:
        raise DomainError(f"e = {e} is too large for a {bits}-bit modulus")
    rng = rng if rng is not None else random.SystemRandom()
    half = bits // 2
    p = gen_prime(half, rng)
    while True:
        q = gen_prime(half, rng)
        if q == p or (p * q).bit_length() != bits:
            continue
        if gcd(e, (p - 1) * (q - 1)) != 1:
            p = gen_prime(half, rng)
            continue
        return keygen_from_primes(p, q, e)


def encrypt_block(m: Nat, key: RsaPublicKey) -> Nat:
    if not 0 <= m < key.n:
        raise BlockTooLargeError(f"block {m} is not below the modulus {key.n}")
    return mod_pow(m, key.e, key.n)


def decrypt_block(c: Nat, key: RsaPrivateKey) -> Nat:
    if not 0 <= c < key.n:
        raise BlockTooLargeError(f"block {c} is not below the modulus {key.n}")
    return mod_pow(c, key.d, key.n)


def encrypt_bytes(message: bytes, key: RsaPublicKey) -> list[Nat]:
    if not message:
        raise DomainError("message must be non-empty")
    size = _framing.block_size(key.n)
    return [encrypt_block(m, key) for m in _framing.split_message(message, size)]


def decrypt_bytes(blocks: list[Nat], key: RsaPrivateKey) -> bytes:
    size = _framing.block_size(key.n)
    return _framing.join_blocks([decrypt_block(c, key) for c in blocks], size)
