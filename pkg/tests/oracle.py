"""Straight-line reference for the PMSE keystream and byte transforms.

This file was written first and is kept frozen. It spells out every step of
the recurrence with no abstractions and shares no code with src/pmse; the
test suite compares the package against it byte for byte. Do not "clean it
up" or route it through the package under test.
"""

M32 = 0xFFFFFFFF

DEFAULT_IV = b"1q23df5r8tyb6d9r5t7k6s4e"


def s32(v):
    """Two's-complement interpretation of the low 32 bits of v."""
    v &= M32
    return v - 0x100000000 if v & 0x80000000 else v


def tdiv(a, b):
    """Division truncating toward zero (C semantics)."""
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


def trem(a, b):
    """Remainder whose sign follows the dividend (C % semantics)."""
    return a - b * tdiv(a, b)


def oracle_keybytes(pass1, pass2, iv, n, order=1, divisor=4,
                    selector="yn_low", one_password=False):
    """Generate n (key, selector) pairs by literal transcription of the
    recurrence: polynomial, byte fold, password pick, x3 mix, xt xor,
    zero reinit, in that exact order."""
    x0 = iv[0]
    x1 = iv[1]
    x2 = iv[2]
    x3 = iv[3]
    xt = iv[7]
    yn = iv[10]
    x1_prev = iv[1]
    keys = []
    sels = []
    for i in range(n):
        # 1. polynomial
        if order == 1:
            yn = s32(x2 * i + x1)
        else:
            yn = s32(x2 * i * i + x1 * i + tdiv(yn, divisor))
        # 2. cut the 32-bit pattern into four bytes (logical shifts)
        u = yn & M32
        xa = (u >> 24) & 0xFF
        xb = (u >> 16) & 0xFF
        xc = (u >> 8) & 0xFF
        xd = u & 0xFF
        # 3. fold
        x0 = xa ^ xb ^ xc ^ xd
        # 4./5. password bytes
        x1 = pass1[i % len(pass1)]
        if one_password:
            x2 = x1_prev
        else:
            x2 = pass2[(i + x1) % len(pass2)]
        # 6. temporary key (can be negative)
        x3 = trem(s32(i * x1 - x3 * x2), 255)
        # 7. current key byte
        xt = (xt ^ x0 ^ x1 ^ x2 ^ x3) & 0xFF
        # 8. zero-key reinit
        if xt == 0:
            xt = i % iv[14]
            x0 = i % iv[15]
            x1 = i % iv[16]
            x2 = i % iv[17]
            x3 = i % iv[18]
        # 9. carry
        x1_prev = x1
        keys.append(xt)
        sels.append(xd if selector == "yn_low" else (x0 & 0xFF))
    return keys, sels


# Byte transform formulas, literal per-case expressions.

def oracle_forward(case_idx, b):
    if case_idx == 0:
        return ((b & 0x0F) << 4) + ((b & 0xF0) >> 4)
    if case_idx == 1:
        return ((b & 0x3F) << 2) + ((b & 0xC0) >> 6)
    if case_idx == 2:
        return ((b & 0x33) << 2) + ((b & 0xCC) >> 2)
    if case_idx == 3:
        return ((b & 0x1F) << 3) + ((b & 0xE0) >> 5)
    raise ValueError(case_idx)


def oracle_inverse(case_idx, b):
    if case_idx == 0:
        return ((b & 0x0F) << 4) + ((b & 0xF0) >> 4)
    if case_idx == 1:
        return ((b & 0xFC) >> 2) + ((b & 0x03) << 6)
    if case_idx == 2:
        return ((b & 0x33) << 2) + ((b & 0xCC) >> 2)
    if case_idx == 3:
        return ((b & 0xF8) >> 3) + ((b & 0x07) << 5)
    raise ValueError(case_idx)


V1_MASKS = (0x00, 0x00, 0x00, 0x00)
V1C_MASKS = (0xC0, 0x0C, 0xC0, 0x0C)


def oracle_checksum(data):
    cs = 10
    for b in data:
        cs = ((cs ^ b) + cs) & M32
    return cs


def oracle_encrypt(pass1, pass2, iv, data, masks=V1_MASKS, order=1,
                   divisor=4, selector="yn_low", one_password=False):
    keys, sels = oracle_keybytes(pass1, pass2, iv, len(data), order=order,
                                 divisor=divisor, selector=selector,
                                 one_password=one_password)
    out = []
    for d, k, s in zip(data, keys, sels):
        case = s % len(masks)
        out.append((oracle_forward(case, d) ^ masks[case]) ^ k)
    return bytes(out), oracle_checksum(out)


def oracle_decrypt(pass1, pass2, iv, data, masks=V1_MASKS, order=1,
                   divisor=4, selector="yn_low", one_password=False):
    keys, sels = oracle_keybytes(pass1, pass2, iv, len(data), order=order,
                                 divisor=divisor, selector=selector,
                                 one_password=one_password)
    out = []
    for c, k, s in zip(data, keys, sels):
        case = s % len(masks)
        out.append(oracle_inverse(case, (c ^ k) ^ masks[case]))
    return bytes(out), oracle_checksum(data)
