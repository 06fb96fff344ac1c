import random

import numpy as np
import pytest

from stegocrypt.raster import Raster


def random_raster(seed: int, width: int, height: int) -> Raster:
    gen = np.random.default_rng(seed)
    return Raster.from_array(gen.integers(0, 256, size=(height, width, 4), dtype=np.uint8))


def naive_pow(base: int, exponent: int, modulus: int) -> int:
    result = 1 % modulus
    for _ in range(exponent):
        result = result * base % modulus
    return result


def sieve_flags(limit: int) -> bytearray:
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return flags


@pytest.fixture
def rng():
    return random.Random(20261018)


_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    if report.when == "call" or report.outcome == "failed":
        _criteria.setdefault(label, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0][2:])):
        verdict = "PASS" if all(o == "passed" for o in _criteria[label]) else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {label}")
