"""Binary PNM (PGM P5 / PPM P6) reader and writer, maxval 255 only.

Pixels are kept as a flat row-major byte payload (interleaved R,G,B for
color), which is exactly the stream the cipher operates on; writers keep
the header clear so an encrypted image stays viewable.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

from .errors import IoFailure, MalformedHeader, TruncatedPayload, UnsupportedMaxval

_WHITESPACE = b" \t\r\n\v\f"


@dataclass(frozen=True)
class Image:
    width: int
    height: int
    channels: int  # 1 (gray) or 3 (RGB)
    pixels: bytes  # width*height*channels bytes, row-major

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise MalformedHeader(f"image dimensions must be positive, got "
                                  f"{self.width}x{self.height}")
        if self.channels not in (1, 3):
            raise MalformedHeader(f"channels must be 1 or 3, got {self.channels}")
        expect = self.width * self.height * self.channels
        if len(self.pixels) != expect:
            raise MalformedHeader(f"payload is {len(self.pixels)} bytes, "
                                  f"header implies {expect}")

    def with_pixels(self, pixels: bytes) -> "Image":
        return Image(self.width, self.height, self.channels, pixels)


def _read_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # skip whitespace and '#' comments, then take one whitespace-delimited token
    n = len(data)
    while pos < n:
        if data[pos:pos + 1] in _WHITESPACE:
            pos += 1
        elif data[pos:pos + 1] == b"#":
            while pos < n and data[pos] != 0x0A:
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE:
        pos += 1
    if start == pos:
        raise MalformedHeader("unexpected end of header")
    return data[start:pos], pos


def _read_int(data: bytes, pos: int) -> tuple[int, int]:
    token, pos = _read_token(data, pos)
    if not token.isdigit():
        raise MalformedHeader(f"expected integer, got {token!r}")
    return int(token), pos


def read_pnm(source) -> Image:
    """Parse a binary PGM/PPM from bytes, a binary file object, or a path."""
    if isinstance(source, (str, Path)):
        try:
            data = Path(source).read_bytes()
        except OSError as e:
            raise IoFailure(str(e)) from e
    elif isinstance(source, (bytes, bytearray, memoryview)):
        data = bytes(source)
    else:
        data = source.read()

    magic, pos = _read_token(data, 0)
    if magic == b"P5":
        channels = 1
    elif magic == b"P6":
        channels = 3
    else:
        raise MalformedHeader(f"not a binary PGM/PPM (magic {magic!r})")
    width, pos = _read_int(data, pos)
    height, pos = _read_int(data, pos)
    maxval, pos = _read_int(data, pos)
    if maxval != 255:
        raise UnsupportedMaxval(f"only maxval 255 is supported, got {maxval}")
    if width < 1 or height < 1:
        raise MalformedHeader(f"dimensions must be positive, got {width}x{height}")
    pos += 1  # the single whitespace byte separating maxval from the payload
    need = width * height * channels
    payload = data[pos:pos + need]
    if len(payload) < need:
        raise TruncatedPayload(f"payload has {len(payload)} of {need} bytes")
    return Image(width, height, channels, payload)


def write_pnm(image: Image, sink) -> None:
    """Write a binary PGM/PPM to a path or a binary file object."""
    magic = b"P5" if image.channels == 1 else b"P6"
    blob = magic + b"\n%d %d\n255\n" % (image.width, image.height) + image.pixels
    if isinstance(sink, (str, Path)):
        try:
            Path(sink).write_bytes(blob)
        except OSError as e:
            raise IoFailure(str(e)) from e
    else:
        try:
            sink.write(blob)
        except OSError as e:
            raise IoFailure(str(e)) from e


def dumps_pnm(image: Image) -> bytes:
    buf = io.BytesIO()
    write_pnm(image, buf)
    return buf.getvalue()
