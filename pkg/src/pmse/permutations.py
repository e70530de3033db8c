"""Reversible byte "deconstruction" transforms.

A transform case is pure data: a bit permutation (``bit_map[k]`` names the
source bit feeding output bit ``k``) plus an XOR mask applied after the
permutation. Decryption XORs the mask first, then applies the inverse
permutation. Because cases are data, whole sets can be serialized, shipped,
and swapped between cipher versions.

Text format for a set (see ``loads_set``/``dumps_set``): one case per line,

    p7 p6 p5 p4 p3 p2 p1 p0 mask_hex

where ``pK`` is the source bit index (0..7, LSB = 0) for output bit K and
``mask_hex`` is the XOR mask as two hex digits (``0x`` prefix optional).
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import UnknownSet

MAX_CASES = 255  # selector byte modulo N must be able to reach every case


@dataclass(frozen=True)
class PermutationCase:
    bit_map: tuple[int, ...]
    xor_mask: int = 0

    @cached_property
    def forward_table(self) -> bytes:
        """256-entry lookup for the forward (deconstruction) transform."""
        out = bytearray(256)
        for b in range(256):
            v = 0
            for k, src in enumerate(self.bit_map):
                v |= ((b >> src) & 1) << k
            out[b] = v ^ self.xor_mask
        return bytes(out)

    @cached_property
    def inverse_table(self) -> bytes:
        """256-entry lookup for the inverse (reconstruction) transform."""
        fwd = self.forward_table
        if len(set(fwd)) != 256:
            raise ValueError("bit_map is not a bijection; case is not invertible")
        out = bytearray(256)
        for b in range(256):
            out[fwd[b]] = b
        return bytes(out)


@dataclass(frozen=True)
class PermutationSet:
    id: str
    cases: tuple[PermutationCase, ...]

    def __len__(self) -> int:
        return len(self.cases)


def forward(case: PermutationCase, b: int) -> int:
    """Deconstruct one byte: permute bits, then XOR the mask."""
    return case.forward_table[b]


def inverse(case: PermutationCase, b: int) -> int:
    """Reconstruct one byte: XOR the mask, then un-permute bits."""
    return case.inverse_table[b]


def _rotl_case(r: int, mask: int = 0) -> PermutationCase:
    # rotate-left by r: output bit k comes from input bit (k - r) mod 8
    return PermutationCase(tuple((k - r) % 8 for k in range(8)), mask)


_V1_MAPS = (
    _rotl_case(4).bit_map,            # nibble swap
    _rotl_case(2).bit_map,
    (2, 3, 0, 1, 6, 7, 4, 5),         # swap adjacent bit pairs
    _rotl_case(3).bit_map,
)

_BUILTINS = {
    "V1": PermutationSet("V1", tuple(PermutationCase(m) for m in _V1_MAPS)),
    "V1C": PermutationSet("V1C", tuple(
        PermutationCase(m, x) for m, x in zip(_V1_MAPS, (0xC0, 0x0C, 0xC0, 0x0C)))),
}

_registry: dict[str, PermutationSet] = dict(_BUILTINS)


def builtin_set(set_id: str) -> PermutationSet:
    """Return one of the shipped sets (V1: four rotations/pair-swaps, no
    masks; V1C: same permutations with partial-complement masks)."""
    try:
        return _BUILTINS[set_id]
    except KeyError:
        raise UnknownSet(f"no builtin permutation set {set_id!r}") from None


def register_set(ps: PermutationSet) -> None:
    """Make a set resolvable by id (e.g. one loaded from a file)."""
    _registry[ps.id] = ps


def get_set(set_id: str) -> PermutationSet:
    """Resolve an id against builtins and registered sets."""
    try:
        return _registry[set_id]
    except KeyError:
        raise UnknownSet(f"unknown permutation set {set_id!r}") from None


def validate_set(ps: PermutationSet) -> list[str]:
    """Check structural invariants; returns violations (empty list = ok)."""
    violations = []
    if not 1 <= len(ps.cases) <= MAX_CASES:
        violations.append(
            f"set has {len(ps.cases)} cases, outside 1..{MAX_CASES}")
    for n, case in enumerate(ps.cases):
        if len(case.bit_map) != 8 or any(not 0 <= v <= 7 for v in case.bit_map):
            violations.append(f"case {n}: bit_map must be 8 values in 0..7")
        elif len(set(case.bit_map)) != 8:
            violations.append(f"case {n}: bit_map is not a bijection")
        if not 0 <= case.xor_mask <= 0xFF:
            violations.append(f"case {n}: xor_mask {case.xor_mask} is not a byte")
    return violations


def dumps_set(ps: PermutationSet) -> str:
    lines = [f"# permutation set {ps.id}: {len(ps.cases)} cases"]
    for case in ps.cases:
        fields = [str(case.bit_map[k]) for k in range(7, -1, -1)]
        lines.append(" ".join(fields) + f" {case.xor_mask:02x}")
    return "\n".join(lines) + "\n"


def loads_set(text: str, set_id: str) -> PermutationSet:
    """Parse the one-case-per-line format; raises ValueError on bad lines."""
    cases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 9:
            raise ValueError(f"line {lineno}: expected 9 fields, got {len(fields)}")
        try:
            rev = [int(f) for f in fields[:8]]
            mask = int(fields[8], 16)
        except ValueError:
            raise ValueError(f"line {lineno}: unparseable field") from None
        cases.append(PermutationCase(tuple(reversed(rev)), mask))
    if not cases:
        raise ValueError("no cases in input")
    return PermutationSet(set_id, tuple(cases))
