"""Textbook public-key ciphers composed with LSB image steganography."""

from .errors import StegoCryptError
from .metrics import QualityReport, mse, psnr_from_mse, quality_report
from .pipeline import CipherEnvelope, hide, reveal
from .raster import Raster, load_image, save_image

__all__ = [
    "CipherEnvelope",
    "QualityReport",
    "Raster",
    "StegoCryptError",
    "hide",
    "load_image",
    "mse",
    "psnr_from_mse",
    "quality_report",
    "reveal",
    "save_image",
]

__version__ = "0.1.0"
