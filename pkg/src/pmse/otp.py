"""One-Time-Pad baseline: the statistical gold standard the stream cipher
is measured against. Pads come from the OS CSPRNG and are single-use."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .core import CipherParams, deconstruct_stream, encrypt_stream, keystream
from .errors import LengthMismatch, RandomSourceUnavailable, TooShort, ZeroVariance
from .stats import correlation, shannon_entropy


def generate_pad(n: int) -> bytes:
    """n bytes from the OS randomness source."""
    if n < 0:
        raise ValueError(f"pad length must be >= 0, got {n}")
    try:
        return os.urandom(n)
    except (OSError, NotImplementedError) as e:
        raise RandomSourceUnavailable(str(e)) from e


def otp_encrypt(msg: bytes, pad: bytes) -> bytes:
    """Bytewise XOR with a same-length pad; applying it twice restores msg."""
    if len(pad) != len(msg):
        raise LengthMismatch(f"pad is {len(pad)} bytes, message {len(msg)}")
    return bytes(a ^ b for a, b in zip(msg, pad))


@dataclass(frozen=True)
class OtpComparison:
    """Entropy of each processing stage plus correlation of each stage
    against the original. Correlations that are undefined (constant or
    sub-2-byte input) are reported as nan."""

    length: int
    entropy_original: float
    entropy_deconstructed: float
    entropy_keystream: float
    entropy_pmse: float
    entropy_otp: float
    corr_deconstructed: float
    corr_keystream: float
    corr_pmse: float
    corr_otp: float

    def to_text(self) -> str:
        return (f"length: {self.length}\n"
                f"entropy_original: {self.entropy_original:.6g}\n"
                f"entropy_deconstructed: {self.entropy_deconstructed:.6g}\n"
                f"entropy_keystream: {self.entropy_keystream:.6g}\n"
                f"entropy_pmse_encrypted: {self.entropy_pmse:.6g}\n"
                f"entropy_otp_encrypted: {self.entropy_otp:.6g}\n"
                f"corr_original_deconstructed: {self.corr_deconstructed:.6g}\n"
                f"corr_original_keystream: {self.corr_keystream:.6g}\n"
                f"corr_original_pmse: {self.corr_pmse:.6g}\n"
                f"corr_original_otp: {self.corr_otp:.6g}\n")


def _corr_or_nan(a: bytes, b: bytes) -> float:
    try:
        return correlation(a, b)
    except (TooShort, ZeroVariance):
        return math.nan


def compare_report(image, params: CipherParams) -> OtpComparison:
    """Head-to-head comparison of stream-cipher and OTP encryption of the
    same payload. Accepts an Image or a raw byte sequence."""
    data = image.pixels if hasattr(image, "pixels") else bytes(image)
    decon = deconstruct_stream(params, data)
    ks = keystream(params, len(data))
    pmse_ct, _ = encrypt_stream(params, data)
    otp_ct = otp_encrypt(data, generate_pad(len(data)))
    return OtpComparison(
        length=len(data),
        entropy_original=shannon_entropy(data),
        entropy_deconstructed=shannon_entropy(decon),
        entropy_keystream=shannon_entropy(ks),
        entropy_pmse=shannon_entropy(pmse_ct),
        entropy_otp=shannon_entropy(otp_ct),
        corr_deconstructed=_corr_or_nan(data, decon),
        corr_keystream=_corr_or_nan(data, ks),
        corr_pmse=_corr_or_nan(data, pmse_ct),
        corr_otp=_corr_or_nan(data, otp_ct),
    )
