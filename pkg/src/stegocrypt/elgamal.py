"""ElGamal encryption over the multiplicative group of a safe prime.

Each block gets a fresh session exponent l, so ciphertexts are randomized
and twice the size of the plaintext (a pair per block).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _framing
from .errors import BlockTooLargeError, CorruptCiphertextError, DomainError
from .numtheory import Nat, find_primitive_root, gen_safe_prime, mod_inverse, mod_pow


@dataclass(frozen=True)
class ElGamalPublicKey:
    r: Nat
    g: Nat
    z: Nat


@dataclass(frozen=True)
class ElGamalPrivateKey:
    s: Nat
    r: Nat
    g: Nat


@dataclass(frozen=True)
class ElGamalCiphertext:
    e1: Nat
    e2: Nat


def keypair_from_secret(r: Nat, g: Nat, s: Nat) -> tuple[ElGamalPublicKey, ElGamalPrivateKey]:
    """Derive the public value z = g^s mod r for a chosen secret."""
    if not 1 < s < r - 1:
        raise DomainError(f"secret must satisfy 1 < s < r - 1, got {s}")
    if not 2 <= g < r:
        raise DomainError(f"generator must satisfy 2 <= g < r, got {g}")
    return ElGamalPublicKey(r, g, mod_pow(g, s, r)), ElGamalPrivateKey(s, r, g)


def keygen(bits: int, rng: random.Random | None = None) -> tuple[ElGamalPublicKey, ElGamalPrivateKey]:
    rng = rng if rng is not None else random.SystemRandom()
    r, q = gen_safe_prime(bits, rng)
    g = find_primitive_root(r, q, check=False)
    s = rng.randrange(2, r - 1)
    return keypair_from_secret(r, g, s)


def encrypt_block(
    p_msg: Nat,
    key: ElGamalPublicKey,
    rng: random.Random | None = None,
    *,
    session_exponent: Nat | None = None,
) -> ElGamalCiphertext:
    """Encrypt one residue. ``session_exponent`` pins l (for worked examples)."""
    if not 0 <= p_msg < key.r:
        raise BlockTooLargeError(f"block {p_msg} is not below the modulus {key.r}")
    if session_exponent is None:
        rng = rng if rng is not None else random.SystemRandom()
        session_exponent = rng.randrange(2, key.r - 1)
    session_key = mod_pow(key.z, session_exponent, key.r)
    e1 = mod_pow(key.g, session_exponent, key.r)
    return ElGamalCiphertext(e1, session_key * p_msg % key.r)


def decrypt_block(ct: ElGamalCiphertext, key: ElGamalPrivateKey) -> Nat:
    """Recover P = E2 * (E1^s)^-1 mod r."""
    if not (0 <= ct.e1 < key.r and 0 <= ct.e2 < key.r):
        raise BlockTooLargeError("ciphertext component is not below the modulus")
    if ct.e1 == 0:
        raise CorruptCiphertextError("e1 = 0 cannot occur in a valid ciphertext")
    session_key = mod_pow(ct.e1, key.s, key.r)
    return ct.e2 * mod_inverse(session_key, key.r) % key.r


def encrypt_bytes(
    message: bytes, key: ElGamalPublicKey, rng: random.Random | None = None
) -> list[ElGamalCiphertext]:
    if not message:
        raise DomainError("message must be non-empty")
    rng = rng if rng is not None else random.SystemRandom()
    size = _framing.block_size(key.r)
    return [encrypt_block(m, key, rng) for m in _framing.split_message(message, size)]


def decrypt_bytes(cts: list[ElGamalCiphertext], key: ElGamalPrivateKey) -> bytes:
    size = _framing.block_size(key.r)
    return _framing.join_blocks([decrypt_block(ct, key) for ct in cts], size)
