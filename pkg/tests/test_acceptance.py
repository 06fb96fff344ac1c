"""Exit criteria for the package, one test per criterion.

Every test records a ``criterion`` label; conftest prints a PASS/FAIL line
for each label at the end of the run. Time limits are asserted inside the
tests.
"""

import random
import time

import numpy as np
import pytest

from conftest import random_raster, sieve_flags
from stegocrypt import bench, dh, elgamal, lsb, pipeline, rsa
from stegocrypt.errors import NotAStegoEnvelopeError, StegoCryptError, WrongKeyKindError
from stegocrypt.metrics import psnr_from_mse, quality_report
from stegocrypt.numtheory import is_probable_prime
from stegocrypt.raster import Raster


@pytest.fixture
def criterion(record_property):
    def label(text):
        record_property("criterion", text)
        print(f"\n{text}")

    return label


def test_ac1_rsa_worked_example(criterion):
    criterion("AC1 RSA worked example: (13, 19, 11) -> PU={11,247}, PR={59,247}")
    t0 = time.perf_counter()
    pair = rsa.keygen_from_primes(13, 19, 11)
    elapsed = time.perf_counter() - t0
    assert (pair.public.e, pair.public.n) == (11, 247)
    assert (pair.private.d, pair.private.n) == (59, 247)
    assert elapsed < 1e-3


def test_ac2_rsa_exhaustive_round_trip(criterion):
    criterion("AC2 RSA exhaustive round trip and bijection over all 247 residues")
    pair = rsa.keygen_from_primes(13, 19, 11)
    t0 = time.perf_counter()
    cts = [rsa.encrypt_block(m, pair.public) for m in range(247)]
    back = [rsa.decrypt_block(c, pair.private) for c in cts]
    elapsed = time.perf_counter() - t0
    assert back == list(range(247))
    assert len(set(cts)) == 247
    assert elapsed < 10e-3


def test_ac3_elgamal_exhaustive_round_trip(criterion):
    criterion("AC3 ElGamal r=23 g=5 s=6: every plaintext 0..22 x session exponent 2..21 recovers")
    pub, priv = elgamal.keypair_from_secret(23, 5, 6)
    t0 = time.perf_counter()
    failures = [
        (p_msg, l)
        for p_msg in range(23)
        for l in range(2, 22)
        if elgamal.decrypt_block(elgamal.encrypt_block(p_msg, pub, session_exponent=l), priv) != p_msg
    ]
    elapsed = time.perf_counter() - t0
    assert failures == []
    assert elapsed < 10e-3


def test_ac4_dh_agreement(criterion):
    criterion("AC4 DH agreement: 1000 seeded trials at 64-bit safe-prime params")
    t0 = time.perf_counter()
    disagreements = 0
    for trial in range(1000):
        rng = random.Random(trial)
        params = dh.gen_params(64, rng)
        a, b = dh.gen_keypair(params, rng), dh.gen_keypair(params, rng)
        s_a = dh.shared_secret(params, a.private_key, b.public_key)
        s_b = dh.shared_secret(params, b.private_key, a.public_key)
        disagreements += s_a != s_b
    elapsed = time.perf_counter() - t0
    assert disagreements == 0
    assert elapsed < 5.0


# (table, image, MSE, PSNR dB) as printed for the LSB, cGAN and concatenated methods
PUBLISHED_PAIRS = [
    ("LSB", "Barbara", 2.69e-05, 93.839034),
    ("LSB", "Cat", 1.74e-05, 95.729596),
    ("LSB", "Cameraman", 3.00e-05, 93.355987),
    ("LSB", "Boat", 1.95e-05, 95.232719),
    ("cGAN", "Barbara", 0.001, 78.130804),
    ("cGAN", "Cat", 0.000333, 82.902016),
    ("cGAN", "Cameraman", 0.0013, 77.99137),
    ("cGAN", "Boat", 0.0005333, 80.860816),
    ("concatenated", "Barbara", 0.033767, 62.84592),
    ("concatenated", "Cat", 0.0351, 62.67773),
    ("concatenated", "Cameraman", 0.0355, 62.62852),
    ("concatenated", "Boat", 0.034433, 62.76101),
]


def test_ac5_metric_fidelity(criterion):
    criterion("AC5 psnr_from_mse reproduces all 12 published MSE->PSNR pairs within 0.01 dB")
    t0 = time.perf_counter()
    computed = [(table, image, m, want, psnr_from_mse(m, 255)) for table, image, m, want in PUBLISHED_PAIRS]
    elapsed = time.perf_counter() - t0
    off = []
    for table, image, m, want, got in computed:
        ok = abs(got - want) <= 0.01
        print(f"  {'ok ' if ok else 'BAD'} {table:>12} {image:<9} mse={m:<9g} printed={want:<10} computed={got:.6f}")
        if not ok:
            off.append(f"{table}/{image}: mse {m} gives {got:.6f} dB, printed {want}")
    assert not off, "; ".join(off)
    assert elapsed < 1e-3


def test_ac6_lsb_quality_bound(criterion):
    criterion("AC6 10-char delimited message in 799x792 covers: MSE <= 6.33e-5, PSNR >= 90 dB")
    covers = [random_raster(seed, 799, 792) for seed in range(4)]
    covers += [Raster.from_array(np.full((792, 799, 4), v, dtype=np.uint8)) for v in (0, 255)]
    for cover in covers:
        t0 = time.perf_counter()
        stego = lsb.embed_delimited(cover, b"HelloWorld")
        report = quality_report(cover, stego)
        elapsed = time.perf_counter() - t0
        assert report.mse <= 6.33e-5
        assert report.psnr_db >= 90.0
        assert elapsed < 1.0


def test_ac7_lsb_structural_invariants(criterion):
    criterion("AC7 LSB invariants over >=500 random cases: bit planes, alpha, both round trips")
    rng = random.Random(7)
    t0 = time.perf_counter()
    cases = 0
    for i in range(600):
        w, h = rng.randint(8, 48), rng.randint(8, 48)
        cover = random_raster(10_000 + i, w, h)
        room = lsb.capacity_bits(cover) // 8
        payload = rng.randbytes(rng.randint(0, room - 5))
        for embed, extract, data in (
            (lsb.embed_framed, lsb.extract_framed, payload[: room - 4]),
            (lsb.embed_delimited, lsb.extract_delimited, payload.replace(b"#", b"*")),
        ):
            stego = embed(cover, data)
            assert np.array_equal(stego.pixels >> 1, cover.pixels >> 1)
            assert np.array_equal(stego.pixels[..., 3], cover.pixels[..., 3])
            assert extract(stego) == data
            cases += 1
    elapsed = time.perf_counter() - t0
    assert cases >= 500
    assert elapsed < 30.0


def test_ac8_pipeline_end_to_end(criterion):
    criterion("AC8 reveal(hide(cover, msg, pub), priv) = msg, 100 messages per cipher at 512 bits; error paths")
    t0 = time.perf_counter()
    rng = random.Random(8)
    rsa_pair = rsa.keygen(512, rng=rng)
    eg_pub, eg_priv = elgamal.keygen(512, rng)
    ciphers = [(rsa_pair.public, rsa_pair.private), (eg_pub, eg_priv)]
    for pub, priv in ciphers:
        for i in range(100):
            cover = random_raster(i, 64, 64)
            msg = rng.randbytes(rng.randint(1, 300))
            assert pipeline.reveal(pipeline.hide(cover, msg, pub, rng), priv) == msg

    other_rsa = rsa.keygen(512, rng=rng)
    other_eg = elgamal.keygen(512, rng)[1]
    for (pub, _), wrong_same, wrong_kind in (
        (ciphers[0], other_rsa.private, eg_priv),
        (ciphers[1], other_eg, rsa_pair.private),
    ):
        for i in range(10):
            msg = rng.randbytes(rng.randint(1, 100))
            stego = pipeline.hide(random_raster(500 + i, 64, 64), msg, pub, rng)
            try:
                assert pipeline.reveal(stego, wrong_same) != msg
            except StegoCryptError:
                pass
            with pytest.raises(WrongKeyKindError):
                pipeline.reveal(stego, wrong_kind)
    for i in range(10):
        with pytest.raises(NotAStegoEnvelopeError):
            pipeline.reveal(random_raster(900 + i, 64, 64), rsa_pair.private)
    assert time.perf_counter() - t0 < 60.0


def test_ac9_benchmark_orderings(criterion):
    criterion("AC9 bench at 512/1024 bits x10: RSA enc < ElGamal enc, ElGamal dec < enc, modexp 1 vs 2")
    t0 = time.perf_counter()
    for bits in (512, 1024):
        r = bench.bench("rsa", bits, repetitions=10, seed=bits)
        e = bench.bench("elgamal", bits, repetitions=10, seed=bits)
        print(f"  {r.csv_row()}\n  {e.csv_row()}")
        assert r.mean_encrypt_s < e.mean_encrypt_s
        assert e.mean_decrypt_s < e.mean_encrypt_s
        assert r.modexp_count_encrypt == 1
        assert e.modexp_count_encrypt == 2
    assert time.perf_counter() - t0 < 120.0


def test_ac10_primality_oracle(criterion):
    criterion("AC10 is_probable_prime agrees with a sieve for every n < 10**6")
    flags = sieve_flags(10**6)
    t0 = time.perf_counter()
    mismatches = [n for n in range(10**6) if is_probable_prime(n) != bool(flags[n])]
    elapsed = time.perf_counter() - t0
    assert mismatches == []
    assert elapsed < 60.0
