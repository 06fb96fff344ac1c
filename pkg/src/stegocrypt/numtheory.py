"""Modular arithmetic and prime generation on arbitrary-precision integers.

Every modular quantity in the package is a plain Python ``int`` (aliased
here as ``Nat``); Python integers are unbounded, so no limb arithmetic is
needed. Randomness always comes from an injected ``random.Random`` so that
key generation is a deterministic function of the seed. Prime search is
single-threaded.
"""

from __future__ import annotations

import random
import re
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator

import numpy as np

from .errors import DomainError, NotInvertibleError

Nat = int

MR_ROUNDS = 40

_HEX_RE = re.compile(r"0|[1-9a-f][0-9a-f]*")


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


# trial division in is_probable_prime; anything >= 257**2 that survives goes to Miller-Rabin
_TRIAL_PRIMES = _sieve(256)
# wider sieve for candidate filtering during prime search
_SIEVE_PRIMES = _sieve(1 << 16)[1:]


class ModexpCounter:
    """Running tally of :func:`mod_pow` calls; see :func:`count_modexp`."""

    def __init__(self) -> None:
        self.count = 0


_active_counter: ContextVar[ModexpCounter | None] = ContextVar("modexp_counter", default=None)


@contextmanager
def count_modexp() -> Iterator[ModexpCounter]:
    """Count modular exponentiations performed in the current context.

    >>> with count_modexp() as c:
    ...     _ = mod_pow(3, 5, 7)
    >>> c.count
    1
    """
    counter = ModexpCounter()
    token = _active_counter.set(counter)
    try:
        yield counter
    finally:
        _active_counter.reset(token)


def to_hex(n: Nat) -> str:
    """Lowercase hex, no prefix and no leading zeros ("0" for zero)."""
    if n < 0:
        raise DomainError(f"negative value {n} is not a Nat")
    return format(n, "x")


def from_hex(text: str) -> Nat:
    if not _HEX_RE.fullmatch(text):
        raise DomainError(f"not a canonical lowercase hex Nat: {text!r}")
    return int(text, 16)


def mod_pow(base: Nat, exponent: Nat, modulus: Nat) -> Nat:
    """Left-to-right binary square-and-multiply."""
    if modulus < 1:
        raise DomainError("modulus must be >= 1")
    if exponent < 0 or base < 0:
        raise DomainError("base and exponent must be non-negative")
    counter = _active_counter.get()
    if counter is not None:
        counter.count += 1
    if modulus == 1:
        return 0
    base %= modulus
    result = 1
    for bit in bin(exponent)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def gcd(a: Nat, b: Nat) -> Nat:
    while b:
        a, b = b, a % b
    return a


def mod_inverse(a: Nat, m: Nat) -> Nat:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    if m < 2:
        raise DomainError("modulus must be >= 2")
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    if old_r != 1:
        raise NotInvertibleError(f"{a} has no inverse modulo {m} (gcd = {old_r})")
    return old_s % m


def is_probable_prime(n: Nat, rounds: int = MR_ROUNDS, rng: random.Random | None = None) -> bool:
    """Trial division by primes below 256, then Miller-Rabin.

    Composites slip through with probability at most ``4**-rounds``; primes
    are never rejected. Witnesses come from ``rng``, or from a generator
    seeded with ``n`` itself so that verdicts are reproducible.
    """
    if rounds < 1:
        raise DomainError("rounds must be >= 1")
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 257 * 257:
        return True

    if rng is None:
        rng = random.Random(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        x = mod_pow(rng.randrange(2, n - 1), d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_WINDOW = 4096
# below this size a candidate may itself be one of the sieving primes
_SIEVE_MIN_BITS = 24


# (p, 1/2 mod p, 1/4 mod p) for solving a*(start + 2k) + b = 0 (mod p) with a in {1, 2}
_SIEVE_TABLE = [(p, (p + 1) // 2, pow((p + 1) // 2, 2, p)) for p in _SIEVE_PRIMES]


def _window_survivors(start: Nat, forms: tuple[tuple[int, int], ...]) -> np.ndarray:
    """Offsets k in [0, _WINDOW) such that no ``a*(start + 2k) + b`` has a sieving-prime factor."""
    # sieve depth grows with candidate size; deeper sieving does not pay off for small numbers
    limit = min(1 << 16, 64 * start.bit_length())
    alive = np.ones(_WINDOW, dtype=bool)
    for p, half, quarter in _SIEVE_TABLE:
        if p > limit:
            break
        for a, b in forms:
            # k = -(a*start + b) / (2a)  (mod p)
            inv = half if a == 1 else quarter
            alive[-(a * start + b) * inv % p :: p] = False
    return np.flatnonzero(alive)


def _search(bits: int, rng: random.Random, forms: tuple[tuple[int, int], ...], accept) -> Nat:
    """Scan odd candidates upward from a random odd ``bits``-bit start.

    Each window of candidates is sieved once; survivors go to ``accept`` in
    increasing order. The scan restarts from a fresh random point when it
    would leave the ``bits``-bit range.
    """
    top = 1 << (bits - 1)
    while True:
        start = rng.getrandbits(bits) | top | 1
        if start + 2 * _WINDOW >= 2 * top:
            continue
        for k in _window_survivors(start, forms):
            candidate = start + 2 * int(k)
            if accept(candidate):
                return candidate


def gen_prime(bits: int, rng: random.Random) -> Nat:
    """Random odd probable prime with exactly ``bits`` significant bits."""
    if bits < 8:
        raise DomainError("bits must be >= 8")
    if bits < _SIEVE_MIN_BITS:
        top = 1 << (bits - 1)
        while True:
            candidate = rng.getrandbits(bits) | top | 1
            if is_probable_prime(candidate):
                return candidate
    return _search(bits, rng, ((1, 0),), is_probable_prime)


def _safe_pair_ok(q: Nat) -> bool:
    p = 2 * q + 1
    # Pocklington: with q prime, 2^(p-1) = 1 (mod p) and 3 not dividing p (sieved)
    # prove p prime, so only q needs Miller-Rabin
    return mod_pow(2, p - 1, p) == 1 and is_probable_prime(q)


def gen_safe_prime(bits: int, rng: random.Random) -> tuple[Nat, Nat]:
    """Return ``(p, q)`` with ``p = 2q + 1``, both probable primes, ``p`` of ``bits`` bits."""
    if bits < 8:
        raise DomainError("bits must be >= 8")
    if bits < _SIEVE_MIN_BITS:
        top = 1 << (bits - 2)
        while True:
            q = rng.getrandbits(bits - 1) | top | 1
            if is_probable_prime(q) and is_probable_prime(2 * q + 1):
                return 2 * q + 1, q
    q = _search(bits - 1, rng, ((1, 0), (2, 1)), _safe_pair_ok)
    return 2 * q + 1, q


def find_primitive_root(p: Nat, q: Nat, *, check: bool = True) -> Nat:
    """Smallest generator of the multiplicative group mod a safe prime ``p = 2q + 1``.

    The group has order 2q, so g generates it iff g**2 != 1 and g**q != 1.
    Pass ``check=False`` only for a pair fresh from :func:`gen_safe_prime`.
    """
    if p != 2 * q + 1 or check and not (is_probable_prime(q) and is_probable_prime(p)):
        raise DomainError(f"({p}, {q}) is not a safe prime pair p = 2q + 1")
    for g in range(2, p):
        if mod_pow(g, 2, p) != 1 and mod_pow(g, q, p) != 1:
            return g
    raise DomainError(f"no primitive root found modulo {p}")  # unreachable for prime p
