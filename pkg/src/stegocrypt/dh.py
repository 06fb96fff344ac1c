"""Diffie-Hellman key agreement over a safe-prime group.

The shared secret is returned as a raw group element; turning it into a
symmetric key is left to the caller.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError
from .numtheory import Nat, find_primitive_root, gen_safe_prime, is_probable_prime, mod_pow


@dataclass(frozen=True)
class DhParams:
    p: Nat
    g: Nat
    q: Nat

    def validate(self) -> None:
        """Raise DomainError unless p = 2q + 1 is a safe prime and g generates Z_p*."""
        if self.p != 2 * self.q + 1 or not (is_probable_prime(self.p) and is_probable_prime(self.q)):
            raise DomainError("p must be a safe prime 2q + 1")
        if not 2 <= self.g < self.p:
            raise DomainError("g must satisfy 2 <= g < p")
        if mod_pow(self.g, 2, self.p) == 1 or mod_pow(self.g, self.q, self.p) == 1:
            raise DomainError(f"g = {self.g} is not a primitive root modulo p")


@dataclass(frozen=True)
class DhKeyPair:
    private_key: Nat
    public_key: Nat


def gen_params(bits: int, rng: random.Random | None = None) -> DhParams:
    rng = rng if rng is not None else random.SystemRandom()
    p, q = gen_safe_prime(bits, rng)
    return DhParams(p, find_primitive_root(p, q, check=False), q)


def keypair_from_private(params: DhParams, private_key: Nat) -> DhKeyPair:
    if not 1 < private_key < params.p - 1:
        raise DomainError("private key must satisfy 1 < a < p - 1")
    return DhKeyPair(private_key, mod_pow(params.g, private_key, params.p))


def gen_keypair(params: DhParams, rng: random.Random | None = None) -> DhKeyPair:
    rng = rng if rng is not None else random.SystemRandom()
    return keypair_from_private(params, rng.randrange(2, params.p - 1))


def shared_secret(params: DhParams, own_private: Nat, peer_public: Nat) -> Nat:
    if not 1 <= peer_public < params.p:
        raise DomainError(f"peer public value {peer_public} is outside [1, p - 1]")
    return mod_pow(peer_public, own_private, params.p)
