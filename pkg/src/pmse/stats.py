"""Statistical evaluation of byte streams: moments, Shannon entropy,
histogram, Pearson correlation, and a single-sided amplitude spectrum.

Reports are key: value text lines; histograms and spectra can be dumped as
CSV. Standard deviation is the sample (n-1) estimator throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, TooShort, ZeroVariance


def _as_array(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return data.astype(np.float64, copy=False).ravel()
    return np.frombuffer(bytes(data), dtype=np.uint8).astype(np.float64)


def _byte_counts(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        arr = data.astype(np.uint8, copy=False).ravel()
    else:
        arr = np.frombuffer(bytes(data), dtype=np.uint8)
    return np.bincount(arr, minlength=256).astype(np.int64)


@dataclass(frozen=True)
class StreamStats:
    mean: float
    std: float
    variance: float
    entropy_bits: float
    histogram: np.ndarray  # 256 counts, sums to the stream length

    def to_text(self) -> str:
        n = int(self.histogram.sum())
        return (f"length: {n}\n"
                f"mean: {self.mean:.6g}\n"
                f"std: {self.std:.6g}\n"
                f"variance: {self.variance:.6g}\n"
                f"entropy_bits: {self.entropy_bits:.6g}\n")


def shannon_entropy(data) -> float:
    """Base-2 entropy of the byte histogram, in [0, 8]."""
    counts = _byte_counts(data)
    n = counts.sum()
    if n == 0:
        return 0.0
    p = counts[counts > 0] / n
    return float(-(p * np.log2(p)).sum())


def basic_stats(data) -> StreamStats:
    """Mean, sample std, variance, entropy, histogram of a byte stream."""
    x = _as_array(data)
    if x.size < 2:
        raise TooShort(f"need at least 2 bytes, got {x.size}")
    std = float(x.std(ddof=1))
    return StreamStats(mean=float(x.mean()), std=std, variance=std * std,
                       entropy_bits=shannon_entropy(data),
                       histogram=_byte_counts(data))


def correlation(a, b) -> float:
    """Pearson correlation of two equal-length byte streams, in [-1, 1]."""
    xa = _as_array(a)
    xb = _as_array(b)
    if xa.size != xb.size:
        raise LengthMismatch(f"lengths differ: {xa.size} vs {xb.size}")
    if xa.size < 2:
        raise TooShort(f"need at least 2 bytes, got {xa.size}")
    da = xa - xa.mean()
    db = xb - xb.mean()
    na = float(np.sqrt((da * da).sum()))
    nb = float(np.sqrt((db * db).sum()))
    if na == 0.0 or nb == 0.0:
        raise ZeroVariance("correlation undefined for a constant stream")
    r = float((da * db).sum() / (na * nb))
    return max(-1.0, min(1.0, r))


def spectrum(data) -> np.ndarray:
    """Single-sided amplitude spectrum of the stream as a real signal.

    The stream is zero-padded to the next power of two. The mean is removed
    before padding (otherwise the rectangular-window leakage of the byte
    mean, ~127 for anything noise-like, swamps every low-frequency bin);
    bin 0 reports the removed DC level.
    """
    x = _as_array(data)
    n = x.size
    if n < 16:
        raise TooShort(f"need at least 16 bytes, got {n}")
    mean = x.mean()
    padded_len = 1 << (n - 1).bit_length()
    padded = np.zeros(padded_len)
    padded[:n] = x - mean
    amp = np.abs(np.fft.rfft(padded)) / padded_len
    amp[1:-1] *= 2.0
    amp[0] = abs(mean)
    return amp


def histogram_csv(stats: StreamStats) -> str:
    lines = ["value,count"]
    lines += [f"{v},{int(c)}" for v, c in enumerate(stats.histogram)]
    return "\n".join(lines) + "\n"


def spectrum_csv(amplitudes: np.ndarray) -> str:
    lines = ["bin,magnitude"]
    lines += [f"{k},{a:.9g}" for k, a in enumerate(amplitudes)]
    return "\n".join(lines) + "\n"
