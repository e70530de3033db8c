"""Cipher vs One-Time-Pad on the same image.

The OTP (XOR with fresh OS randomness) is the statistical gold standard:
if the cipher's output is indistinguishable from it by entropy and
correlation, the generator is doing its job on this corpus.
"""

import sys
from pathlib import Path

from pmse import CipherParams, compare_report, read_pnm

sys.path.insert(0, str(Path(__file__).parent))
from _specimen import synthetic_specimen

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

image = read_pnm(sys.argv[1]) if len(sys.argv) > 1 else synthetic_specimen()
params = CipherParams(b"PMSE_encryption", b"blocksnet", permutation_set="V1C")

report = compare_report(image, params)
print(report.to_text())
(OUT / "otp_comparison.txt").write_text(report.to_text())

delta = abs(report.entropy_pmse - report.entropy_otp)
print(f"entropy gap between cipher and OTP encryption: {delta:.5f} "
      f"(both within noise of the 8-bit maximum)")
print(f"wrote {OUT / 'otp_comparison.txt'}")
