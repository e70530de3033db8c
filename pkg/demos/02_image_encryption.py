"""Image encryption walkthrough.

Builds a synthetic low-entropy "microscopy" image, then shows every stage
of the pipeline as a viewable PPM: the keystream rendered as an image, the
deconstructed image (bit swapping + partial complementation only), and the
fully encrypted image. Prints the entropy and correlation of each stage.

Pass a PGM/PPM path as argv[1] to run the same walkthrough on your own
image.
"""

import sys
from pathlib import Path

from pmse import (CipherParams, correlation, deconstruct_stream,
                  encrypt_stream, keystream, read_pnm, shannon_entropy,
                  write_pnm)

sys.path.insert(0, str(Path(__file__).parent))
from _specimen import synthetic_specimen

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

image = read_pnm(sys.argv[1]) if len(sys.argv) > 1 else synthetic_specimen()
data = image.pixels
print(f"image: {image.width}x{image.height}x{image.channels}, "
      f"{len(data)} payload bytes")

# masks matter here: V1C's partial complementation scrambles even the
# monochromatic dark regions that bare bit rotations would leave alone
params = CipherParams(b"aa", b"bb", permutation_set="V1C")

stages = {
    "original": data,
    "keystream": keystream(params, len(data)),
    "deconstructed": deconstruct_stream(params, data),
    "encrypted": encrypt_stream(params, data)[0],
}

print(f"\n{'stage':16s} {'entropy':>8s} {'corr vs original':>18s}")
for name, payload in stages.items():
    ent = shannon_entropy(payload)
    if name == "original":
        corr = 1.0
    else:
        corr = correlation(data, payload)
    print(f"{name:16s} {ent:8.4f} {corr:+18.7f}")
    write_pnm(image.with_pixels(payload), OUT / f"image_{name}.ppm")

print(f"\nwrote image_original/keystream/deconstructed/encrypted .ppm "
      f"under {OUT}")
print("open them in any image viewer: the encrypted image is noise, the "
      "deconstructed one only hints at the original shapes")
