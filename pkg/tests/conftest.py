import numpy as np
import pytest

from pmse import Image


def make_low_entropy_image() -> Image:
    """Deterministic 256x128 RGB test image: dark field with a few bright
    blobs, entropy well under 5 bits, payload >= 64 KiB."""
    w, h = 256, 128
    yy, xx = np.mgrid[0:h, 0:w]
    img = np.full((h, w, 3), 8, dtype=np.uint8)
    blobs = [(40, 30, 18, (200, 180, 60)), (170, 80, 25, (90, 150, 220)),
             (220, 20, 12, (240, 240, 240)), (90, 100, 20, (60, 200, 90))]
    for cx, cy, r, col in blobs:
        mask = (xx - cx) ** 2 + (yy - cy) ** 2 <= r * r
        img[mask] = col
    img[50:58, :, :] = (30, 30, 30)
    return Image(w, h, 3, img.tobytes())


@pytest.fixture(scope="session")
def low_entropy_image() -> Image:
    return make_low_entropy_image()
