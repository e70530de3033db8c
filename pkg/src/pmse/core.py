"""Byte-stream cipher core: keystream generation and stream en/decryption.

Per message byte the generator evaluates a divergent polynomial over the
iteration index and password bytes, folds the 32-bit result into one byte,
mixes it with a second temporary key and the previous key byte, and emits
the new key byte plus a selector byte. Encryption deconstructs the data
byte through the selector-chosen permutation case and XORs it with the key
byte; decryption runs the same keystream and inverts both steps.

All register arithmetic is pinned to 32-bit two's-complement semantics
(wraparound multiply/add, division truncating toward zero, remainder sign
following the dividend, logical shifts on the 32-bit pattern) so that any
conforming implementation, in any language, produces identical bytes.

This cipher is experimental and educational. It has no security proof, no
authentication, and no constant-time guarantees; do not use it to protect
real secrets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams
from .permutations import get_set

MASK32 = 0xFFFFFFFF
IV_LEN = 24
MAX_MESSAGE = 2**31 - 1

# Example iv from the reference microcontroller build; fine for demos and
# tests, but real use should supply a fresh one.
DEFAULT_IV = b"1q23df5r8tyb6d9r5t7k6s4e"

YN_LOW_BYTE = "yn_low"
X0 = "x0"
_SELECTOR_SOURCES = (YN_LOW_BYTE, X0)

CHECKSUM_INIT = 10


def wrap32(v: int) -> int:
    """Two's-complement value of the low 32 bits of v."""
    v &= MASK32
    return v - 0x100000000 if v & 0x80000000 else v


def tdiv(a: int, b: int) -> int:
    """Quotient truncated toward zero (C semantics)."""
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


def trem(a: int, b: int) -> int:
    """Remainder whose sign follows the dividend, e.g. trem(-7, 255) == -7."""
    return a - b * tdiv(a, b)


@dataclass(frozen=True)
class Order1:
    """Yn = x2*i + x1"""


@dataclass(frozen=True)
class Order2Recursive:
    """Yn = x2*i^2 + x1*i + Yn_prev/divisor (division truncating toward zero)"""

    divisor: int = 4


@dataclass(frozen=True)
class CipherParams:
    """Full cipher configuration. pass2=None selects one-password mode, in
    which the x2 register is fed from the previous iteration's x1."""

    pass1: bytes
    pass2: bytes | None = None
    iv: bytes = DEFAULT_IV
    polynomial: Order1 | Order2Recursive = Order1()
    permutation_set: str = "V1"
    selector_source: str = YN_LOW_BYTE

    def __post_init__(self):
        if isinstance(self.pass1, str):
            object.__setattr__(self, "pass1", self.pass1.encode("utf-8"))
        if isinstance(self.pass2, str):
            object.__setattr__(self, "pass2", self.pass2.encode("utf-8"))

    def validate(self) -> None:
        if len(self.iv) != IV_LEN:
            raise InvalidParams(f"iv must be exactly {IV_LEN} bytes, got {len(self.iv)}")
        # iv[14..18] are the zero-reinit moduli: 0 divides by zero, 1 pins
        # the reinitialized registers to 0
        for k in range(14, 19):
            if self.iv[k] < 2:
                raise InvalidParams(f"iv[{k}] = {self.iv[k]} < 2 (reinit modulus)")
        if len(self.pass1) < 1:
            raise InvalidParams("pass1 must not be empty")
        if self.pass2 is not None and len(self.pass2) < 1:
            raise InvalidParams("pass2, when given, must not be empty")
        if isinstance(self.polynomial, Order2Recursive) and self.polynomial.divisor < 1:
            raise InvalidParams(f"divisor must be >= 1, got {self.polynomial.divisor}")
        if self.selector_source not in _SELECTOR_SOURCES:
            raise InvalidParams(f"selector_source must be one of {_SELECTOR_SOURCES}")


@dataclass
class KeystreamState:
    """Evolving generator registers. A state value belongs to one thread at
    a time; advancing is a pure function of (params, prior state)."""

    i: int
    x0: int
    x1: int
    x2: int
    x3: int
    yn: int
    xt: int
    x1_prev: int


def init_state(params: CipherParams) -> KeystreamState:
    """Seed the registers from the iv."""
    params.validate()
    iv = params.iv
    return KeystreamState(i=0, x0=iv[0], x1=iv[1], x2=iv[2], x3=iv[3],
                          yn=iv[10], xt=iv[7], x1_prev=iv[1])


def next_key(state: KeystreamState, params: CipherParams) -> tuple[int, int]:
    """Advance the generator one iteration; returns (key byte, selector byte).

    This is the readable one-step reference; the stream functions below run
    an equivalent fused loop and are tested to match it bit for bit.
    """
    i = state.i
    poly = params.polynomial
    if isinstance(poly, Order2Recursive):
        yn = wrap32(state.x2 * i * i + state.x1 * i + tdiv(state.yn, poly.divisor))
    else:
        yn = wrap32(state.x2 * i + state.x1)
    u = yn & MASK32
    xd = u & 0xFF
    x0 = (u >> 24) ^ ((u >> 16) & 0xFF) ^ ((u >> 8) & 0xFF) ^ xd
    x1 = params.pass1[i % len(params.pass1)]
    if params.pass2 is None:
        x2 = state.x1_prev
    else:
        x2 = params.pass2[(i + x1) % len(params.pass2)]
    x3 = trem(wrap32(i * x1 - state.x3 * x2), 255)
    xt = (state.xt ^ x0 ^ x1 ^ x2 ^ x3) & 0xFF
    if xt == 0:
        # zero key would leak the deconstructed byte through the XOR;
        # reseed from the iv moduli (xt may still come out 0 when
        # i % iv[14] == 0 and is emitted as-is)
        iv = params.iv
        xt = i % iv[14]
        x0 = i % iv[15]
        x1 = i % iv[16]
        x2 = i % iv[17]
        x3 = i % iv[18]
    state.i = i + 1
    state.x0, state.x1, state.x2, state.x3 = x0, x1, x2, x3
    state.yn, state.xt, state.x1_prev = yn, xt, x1
    return xt, (xd if params.selector_source == YN_LOW_BYTE else x0 & 0xFF)


def _key_selector_bytes(params: CipherParams, n: int) -> tuple[bytearray, bytearray]:
    """Fused keystream loop: n (key, selector) bytes. Local-variable bound
    version of next_key; the hot path for every stream operation."""
    state = init_state(params)
    pass1 = params.pass1
    lp1 = len(pass1)
    pass2 = params.pass2
    one_password = pass2 is None
    lp2 = 0 if one_password else len(pass2)
    iv = params.iv
    m_xt, m_x0, m_x1, m_x2, m_x3 = iv[14], iv[15], iv[16], iv[17], iv[18]
    poly = params.polynomial
    order2 = isinstance(poly, Order2Recursive)
    divisor = poly.divisor if order2 else 1
    sel_from_x0 = params.selector_source == X0

    x0, x1, x2, x3 = state.x0, state.x1, state.x2, state.x3
    yn, xt, x1_prev = state.yn, state.xt, state.x1_prev
    keys = bytearray(n)
    sels = bytearray(n)
    for i in range(n):
        if order2:
            q = yn // divisor if yn >= 0 else -((-yn) // divisor)
            yn = x2 * i * i + x1 * i + q
        else:
            yn = x2 * i + x1
        yn &= MASK32
        xd = yn & 0xFF
        x0 = (yn >> 24) ^ ((yn >> 16) & 0xFF) ^ ((yn >> 8) & 0xFF) ^ xd
        if yn >= 0x80000000:
            yn -= 0x100000000
        x1 = pass1[i % lp1]
        x2 = x1_prev if one_password else pass2[(i + x1) % lp2]
        t = (i * x1 - x3 * x2) & MASK32
        if t >= 0x80000000:
            t -= 0x100000000
        x3 = t % 255
        if t < 0 and x3:
            x3 -= 255
        xt = (xt ^ x0 ^ x1 ^ x2 ^ x3) & 0xFF
        if xt == 0:
            xt = i % m_xt
            x0 = i % m_x0
            x1 = i % m_x1
            x2 = i % m_x2
            x3 = i % m_x3
        x1_prev = x1
        keys[i] = xt
        sels[i] = x0 if sel_from_x0 else xd
    return keys, sels


def keystream(params: CipherParams, n: int) -> bytes:
    """First n key bytes, no data mixing (for statistical evaluation)."""
    if n < 0:
        raise InvalidParams(f"keystream length must be >= 0, got {n}")
    keys, _ = _key_selector_bytes(params, n)
    return bytes(keys)


def checksum(data: bytes) -> int:
    """32-bit integrity fold over a byte sequence: cs <- (cs ^ b) + cs,
    starting from 10, wrapping unsigned. Not cryptographic."""
    cs = CHECKSUM_INIT
    for b in data:
        cs = ((cs ^ b) + cs) & MASK32
    return cs


def _check_message(data) -> None:
    if len(data) > MAX_MESSAGE:
        raise InvalidParams(f"message longer than {MAX_MESSAGE} bytes")


def encrypt_stream(params: CipherParams, plaintext: bytes) -> tuple[bytes, int]:
    """Encrypt; returns (ciphertext, checksum of the ciphertext)."""
    _check_message(plaintext)
    keys, sels = _key_selector_bytes(params, len(plaintext))
    cases = get_set(params.permutation_set).cases
    ncases = len(cases)
    tables = [c.forward_table for c in cases]
    out = bytearray(len(plaintext))
    cs = CHECKSUM_INIT
    for i, d in enumerate(plaintext):
        c = tables[sels[i] % ncases][d] ^ keys[i]
        out[i] = c
        cs = ((cs ^ c) + cs) & MASK32
    return bytes(out), cs


def decrypt_stream(params: CipherParams, ciphertext: bytes) -> tuple[bytes, int]:
    """Decrypt; returns (plaintext, checksum of the input ciphertext), so
    encrypt and decrypt of the same message agree on the checksum."""
    _check_message(ciphertext)
    keys, sels = _key_selector_bytes(params, len(ciphertext))
    cases = get_set(params.permutation_set).cases
    ncases = len(cases)
    tables = [c.inverse_table for c in cases]
    out = bytearray(len(ciphertext))
    cs = CHECKSUM_INIT
    for i, c in enumerate(ciphertext):
        out[i] = tables[sels[i] % ncases][c ^ keys[i]]
        cs = ((cs ^ c) + cs) & MASK32
    return bytes(out), cs


def deconstruct_stream(params: CipherParams, data: bytes) -> bytes:
    """Apply only the per-byte deconstruction stage (no XOR with the key);
    the intermediate the statistical comparisons call the "deconstructed"
    stream."""
    _check_message(data)
    _, sels = _key_selector_bytes(params, len(data))
    cases = get_set(params.permutation_set).cases
    ncases = len(cases)
    tables = [c.forward_table for c in cases]
    return bytes(tables[sels[i] % ncases][d] for i, d in enumerate(data))
