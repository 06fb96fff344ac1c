"""Cipher timing benchmark and CSV table reports."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, fields
from typing import Iterable

from . import elgamal, lsb, rsa
from .errors import DomainError
from .metrics import CSV_HEADER as LSB_HEADER
from .metrics import quality_report
from .numtheory import count_modexp
from .raster import Raster

CIPHERS = ("rsa", "elgamal")
KEY_SIZES = (512, 1024, 2048)
MIN_REPETITIONS = 5


@dataclass(frozen=True)
class BenchReport:
    cipher: str
    key_bits: int
    message_bytes: int
    repetitions: int
    mean_encrypt_s: float
    mean_decrypt_s: float
    modexp_count_encrypt: float
    modexp_count_decrypt: float

    def csv_row(self) -> str:
        return (
            f"{self.cipher},{self.key_bits},{self.message_bytes},{self.repetitions},"
            f"{self.mean_encrypt_s:.6f},{self.mean_decrypt_s:.6f},"
            f"{self.modexp_count_encrypt:g},{self.modexp_count_decrypt:g}"
        )


BENCH_FIELDS = tuple(f.name for f in fields(BenchReport))
BENCH_HEADER = ",".join(BENCH_FIELDS)


def _cipher_ops(cipher: str, key_bits: int, rng: random.Random):
    if cipher == "rsa":
        pair = rsa.keygen(key_bits, rsa.DEFAULT_E, rng)
        return (
            lambda msg: rsa.encrypt_bytes(msg, pair.public),
            lambda cts: rsa.decrypt_bytes(cts, pair.private),
        )
    if cipher == "elgamal":
        pub, priv = elgamal.keygen(key_bits, rng)
        return (
            lambda msg: elgamal.encrypt_bytes(msg, pub, rng),
            lambda cts: elgamal.decrypt_bytes(cts, priv),
        )
    raise DomainError(f"unknown cipher {cipher!r}; expected one of {', '.join(CIPHERS)}")


def bench(
    cipher: str,
    key_bits: int,
    message_bytes: int = 256,
    repetitions: int = 10,
    seed: int = 0,
) -> BenchReport:
    """Time byte-mode encryption and decryption under a seeded key.

    One untimed warm-up run precedes the timed runs; it also supplies the
    per-block modular exponentiation counts.
    """
    if key_bits not in KEY_SIZES:
        raise DomainError(f"key_bits must be one of {KEY_SIZES}")
    if repetitions < MIN_REPETITIONS:
        raise DomainError(f"repetitions must be >= {MIN_REPETITIONS}")
    if message_bytes < 1:
        raise DomainError("message_bytes must be >= 1")
    rng = random.Random(seed)
    encrypt, decrypt = _cipher_ops(cipher, key_bits, rng)
    message = rng.randbytes(message_bytes)

    with count_modexp() as enc_count:
        ciphertext = encrypt(message)
    with count_modexp() as dec_count:
        if decrypt(ciphertext) != message:
            raise AssertionError("benchmark round trip failed")
    blocks = len(ciphertext)

    enc_total = dec_total = 0.0
    for _ in range(repetitions):
        t0 = time.perf_counter()
        ciphertext = encrypt(message)
        t1 = time.perf_counter()
        decrypt(ciphertext)
        t2 = time.perf_counter()
        enc_total += t1 - t0
        dec_total += t2 - t1

    return BenchReport(
        cipher,
        key_bits,
        message_bytes,
        repetitions,
        enc_total / repetitions,
        dec_total / repetitions,
        enc_count.count / blocks,
        dec_count.count / blocks,
    )


def bench_table(
    ciphers: Iterable[str],
    key_bits: Iterable[int],
    message_bytes: int = 256,
    repetitions: int = 10,
    seed: int = 0,
) -> str:
    key_bits = list(key_bits)
    rows = [BENCH_HEADER]
    for cipher in ciphers:
        for bits in key_bits:
            rows.append(bench(cipher, bits, message_bytes, repetitions, seed).csv_row())
    return "\n".join(rows) + "\n"


def lsb_table(images: Iterable[tuple[str, Raster]], message: bytes) -> str:
    """Embed ``message`` (delimited mode) in each cover and report MSE/PSNR."""
    rows = [LSB_HEADER]
    for name, cover in images:
        stego = lsb.embed_delimited(cover, message)
        rows.append(quality_report(cover, stego).csv_row(name))
    return "\n".join(rows) + "\n"
