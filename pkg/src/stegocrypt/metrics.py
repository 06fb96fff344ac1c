"""MSE and PSNR between a cover raster and a modified copy.

MSE averages squared differences over the R, G and B channels of every
pixel; alpha is ignored because embedding never touches it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .raster import Raster

MAX_8BIT = 255

CSV_HEADER = "image,mse,psnr_db"


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float
    max_i: int = MAX_8BIT

    def csv_row(self, image: str) -> str:
        return f"{image},{self.mse:.5e},{format_psnr(self.psnr_db)}"


def format_psnr(psnr_db: float) -> str:
    return "inf" if math.isinf(psnr_db) else f"{psnr_db:.6f}"


def mse(original: Raster, candidate: Raster) -> float:
    if (original.width, original.height) != (candidate.width, candidate.height):
        raise DomainError(
            f"dimension mismatch: {original.width}x{original.height} "
            f"vs {candidate.width}x{candidate.height}"
        )
    if len(original) == 0:
        raise DomainError("MSE of an empty image is undefined")
    diff = original.pixels[..., :3].astype(np.int64) - candidate.pixels[..., :3].astype(np.int64)
    return float(np.sum(diff * diff)) / diff.size


def psnr_from_mse(mse_value: float, max_i: float = MAX_8BIT) -> float:
    if mse_value < 0:
        raise DomainError(f"MSE cannot be negative, got {mse_value}")
    if mse_value == 0:
        return math.inf
    return 10.0 * math.log10(max_i * max_i / mse_value)


def quality_report(original: Raster, candidate: Raster) -> QualityReport:
    m = mse(original, candidate)
    return QualityReport(m, psnr_from_mse(m, MAX_8BIT), MAX_8BIT)
