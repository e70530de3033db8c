"""Shared synthetic test image for the demo scripts: a dark microscopy-like
field with a few bright blobs, entropy well under 5 bits."""

import numpy as np

from pmse import Image


def synthetic_specimen() -> Image:
    w, h = 256, 128
    yy, xx = np.mgrid[0:h, 0:w]
    img = np.full((h, w, 3), 8, dtype=np.uint8)
    for cx, cy, r, col in [(40, 30, 18, (200, 180, 60)),
                           (170, 80, 25, (90, 150, 220)),
                           (220, 20, 12, (240, 240, 240)),
                           (90, 100, 20, (60, 200, 90))]:
        img[(xx - cx) ** 2 + (yy - cy) ** 2 <= r * r] = col
    img[50:58, :, :] = (30, 30, 30)
    return Image(w, h, 3, img.tobytes())
