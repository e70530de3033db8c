"""Self-decryptable web encrypted objects ("blocks").

A block is a single HTML file carrying:

  * a metadata island ``<script type="application/json" id="pmse-block">``
    holding the JSON document described in docs/block-format.md (schema
    ``pmse-block-v1``): cipher version descriptor, iv (hex), base64
    ciphertext, 32-bit ciphertext checksum (8 hex chars), ISO-8601 UTC
    timestamp, content type, and an optional clear-text prompt;
  * an inlined, dependency-free decryptor script plus the page skeleton it
    drives (password fields, output region, verdict badge, next link).

The checksum covers the ciphertext, so anyone can verify a block's
integrity without knowing the passwords. Blocks compose into chains
(each block's encrypted content carries the url and optionally the
passwords of the next one) and russian dolls (a block whose decrypted
content is itself a block file).
"""

from __future__ import annotations

import base64
import binascii
import json
import re
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources

from .core import (CipherParams, Order1, Order2Recursive, X0, YN_LOW_BYTE,
                   checksum, decrypt_stream, encrypt_stream)
from .errors import (InvalidParams, NotABlock, SchemaVersionUnknown,
                     TemplateMissingSlot)

SCHEMA = "pmse-block-v1"
CONTENT_TYPES = ("text", "html-block", "url-list")
NEXT_MARKER = "\n--- next-block ---\n"

_SLOT_JSON = "{{BLOCK_JSON}}"
_SLOT_DECRYPTOR = "{{DECRYPTOR_JS}}"
_SLOT_TITLE = "{{TITLE}}"
_SLOT_PROMPT = "{{PROMPT_HTML}}"

_ISLAND_RE = re.compile(
    r"<script[^>]*\bid=[\"']pmse-block[\"'][^>]*>(.*?)</script>",
    re.DOTALL | re.IGNORECASE)


@dataclass(frozen=True)
class BlockVersion:
    """Variant descriptor: everything a decryptor needs besides passwords."""

    polynomial: str  # "order1" | "order2"
    divisor: int | None
    permutation_set: str
    selector_source: str
    passwords: int  # 1 | 2

    @classmethod
    def from_params(cls, params: CipherParams) -> "BlockVersion":
        order2 = isinstance(params.polynomial, Order2Recursive)
        return cls(
            polynomial="order2" if order2 else "order1",
            divisor=params.polynomial.divisor if order2 else None,
            permutation_set=params.permutation_set,
            selector_source=params.selector_source,
            passwords=1 if params.pass2 is None else 2,
        )


@dataclass(frozen=True)
class Block:
    version: BlockVersion
    iv_hex: str
    payload_b64: str
    checksum_hex: str
    timestamp: str
    content_type: str
    prompt: str | None

    @property
    def payload(self) -> bytes:
        return base64.b64decode(self.payload_b64, validate=True)


@dataclass(frozen=True)
class ChecksumMismatch:
    expected: int
    computed: int

    def __str__(self) -> str:
        return (f"checksum mismatch: block declares {self.expected:08X}, "
                f"payload folds to {self.computed:08X}")


@dataclass(frozen=True)
class ChainItem:
    content: bytes
    params: CipherParams
    prompt: str | None = None
    content_type: str = "text"


def default_template() -> str:
    return _read_data("block_template.html")


def bundled_decryptor() -> str:
    """The browser decryptor script, if a built copy ships with the package."""
    try:
        return _read_data("decryptor.js")
    except FileNotFoundError:
        return ("/* pmse decryptor not bundled: build the frontend and pass "
                "its dist/decryptor.js via decryptor_js (CLI: --decryptor) */")


def _read_data(name: str) -> str:
    return (resources.files("pmse") / "data" / name).read_text(encoding="utf-8")


def _now_utc() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace(
        "+00:00", "Z")


def _island_json(block: Block) -> str:
    doc = {
        "schema": SCHEMA,
        "version": {
            "polynomial": block.version.polynomial,
            "permutation_set": block.version.permutation_set,
            "selector_source": block.version.selector_source,
            "passwords": block.version.passwords,
        },
        "iv_hex": block.iv_hex,
        "payload_b64": block.payload_b64,
        "checksum_hex": block.checksum_hex,
        "timestamp": block.timestamp,
        "content_type": block.content_type,
        "prompt": block.prompt,
    }
    if block.version.divisor is not None:
        doc["version"]["divisor"] = block.version.divisor
    # "</script" must never appear inside the island
    return json.dumps(doc, indent=2).replace("</", "<\\/")


def build_block(content: bytes, params: CipherParams, content_type: str = "text",
                prompt: str | None = None, template: str | None = None,
                decryptor_js: str | None = None,
                timestamp: str | None = None) -> str:
    """Encrypt content and wrap it into a self-contained block page."""
    if content_type not in CONTENT_TYPES:
        raise InvalidParams(f"content_type must be one of {CONTENT_TYPES}")
    params.validate()
    if template is None:
        template = default_template()
    for slot in (_SLOT_JSON, _SLOT_DECRYPTOR):
        if slot not in template:
            raise TemplateMissingSlot(f"template lacks the {slot} slot")
    if decryptor_js is None:
        decryptor_js = bundled_decryptor()

    ciphertext, cs = encrypt_stream(params, bytes(content))
    block = Block(
        version=BlockVersion.from_params(params),
        iv_hex=params.iv.hex(),
        payload_b64=base64.b64encode(ciphertext).decode("ascii"),
        checksum_hex=f"{cs:08X}",
        timestamp=timestamp if timestamp is not None else _now_utc(),
        content_type=content_type,
        prompt=prompt,
    )
    title = _escape_html(prompt) if prompt else "encrypted block"
    page = template.replace(_SLOT_TITLE, title)
    page = page.replace(_SLOT_PROMPT, _escape_html(prompt) if prompt else "")
    page = page.replace(_SLOT_JSON, _island_json(block))
    page = page.replace(_SLOT_DECRYPTOR, decryptor_js)
    return page


def _escape_html(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def parse_block(document: str) -> Block:
    """Extract the metadata island from a block page."""
    m = _ISLAND_RE.search(document)
    if not m:
        raise NotABlock("no pmse-block metadata island found")
    try:
        doc = json.loads(m.group(1))
    except json.JSONDecodeError as e:
        raise NotABlock(f"metadata island is not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "schema" not in doc:
        raise NotABlock("metadata island lacks a schema field")
    if doc["schema"] != SCHEMA:
        raise SchemaVersionUnknown(f"schema {doc['schema']!r} not supported")
    try:
        v = doc["version"]
        block = Block(
            version=BlockVersion(
                polynomial=v["polynomial"],
                divisor=v.get("divisor"),
                permutation_set=v["permutation_set"],
                selector_source=v["selector_source"],
                passwords=int(v["passwords"]),
            ),
            iv_hex=doc["iv_hex"],
            payload_b64=doc["payload_b64"],
            checksum_hex=doc["checksum_hex"],
            timestamp=doc["timestamp"],
            content_type=doc["content_type"],
            prompt=doc.get("prompt"),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise NotABlock(f"metadata island missing or malformed field: {e}") from e
    try:
        iv = bytes.fromhex(block.iv_hex)
        block.payload
        int(block.checksum_hex, 16)
    except (ValueError, binascii.Error) as e:
        raise NotABlock(f"undecodable metadata field: {e}") from e
    if len(iv) != 24 or len(block.checksum_hex) != 8:
        raise NotABlock("iv_hex must decode to 24 bytes and checksum_hex to 4")
    if block.content_type not in CONTENT_TYPES:
        raise NotABlock(f"unknown content_type {block.content_type!r}")
    if block.version.polynomial not in ("order1", "order2"):
        raise NotABlock(f"unknown polynomial {block.version.polynomial!r}")
    if block.version.passwords not in (1, 2):
        raise NotABlock("version.passwords must be 1 or 2")
    return block


def verify_block(block: Block) -> ChecksumMismatch | None:
    """Recompute the payload checksum; None means the block is intact."""
    computed = checksum(block.payload)
    expected = int(block.checksum_hex, 16)
    if computed != expected:
        return ChecksumMismatch(expected=expected, computed=computed)
    return None


def block_params(block: Block, pass1: bytes, pass2: bytes | None = None) -> CipherParams:
    """Reassemble CipherParams from a block's version descriptor."""
    if block.version.passwords == 2 and pass2 is None:
        raise InvalidParams("block was built with two passwords")
    if block.version.passwords == 1 and pass2 is not None:
        raise InvalidParams("block was built with one password")
    if block.version.polynomial == "order2":
        poly = Order2Recursive(block.version.divisor if block.version.divisor else 4)
    else:
        poly = Order1()
    return CipherParams(
        pass1=pass1, pass2=pass2, iv=bytes.fromhex(block.iv_hex),
        polynomial=poly, permutation_set=block.version.permutation_set,
        selector_source=block.version.selector_source)


def decrypt_block(block: Block, pass1: bytes, pass2: bytes | None = None) -> bytes:
    plaintext, _ = decrypt_stream(block_params(block, pass1, pass2), block.payload)
    return plaintext


def password_recheck(block: Block, pass1: bytes, pass2: bytes | None = None) -> bool:
    """Heuristic wrong-password detector for text content: decrypt, decode
    as UTF-8 (lossy), re-encode, re-encrypt, compare checksums. A wrong
    password garbles the plaintext into invalid UTF-8 with overwhelming
    probability, so the round trip is lossy and the checksum moves. This is
    not authentication.
    """
    params = block_params(block, pass1, pass2)
    plaintext, _ = decrypt_stream(params, block.payload)
    rt = plaintext.decode("utf-8", errors="replace").encode("utf-8")
    _, cs = encrypt_stream(params, rt)
    return f"{cs:08X}" == block.checksum_hex.upper()


def build_chain(items, base_url_pattern: str = "block_{index}.html",
                embed_passwords: bool = True, template: str | None = None,
                decryptor_js: str | None = None) -> list[str]:
    """Build a linked sequence of blocks. Block k's encrypted content ends
    with a next-block trailer naming the url (and, unless disabled, the
    passwords) of block k+1; the last block has no trailer."""
    items = list(items)
    if not items:
        raise InvalidParams("chain needs at least one item")
    pages = []
    for k, item in enumerate(items):
        content = bytes(item.content)
        content_type = item.content_type
        if k + 1 < len(items):
            nxt = items[k + 1]
            lines = [f"url: {base_url_pattern.format(index=k + 1)}"]
            if embed_passwords:
                lines.append(f"pass1: {nxt.params.pass1.decode('utf-8')}")
                if nxt.params.pass2 is not None:
                    lines.append(f"pass2: {nxt.params.pass2.decode('utf-8')}")
            content += (NEXT_MARKER + "\n".join(lines) + "\n").encode("utf-8")
            content_type = "url-list"
        pages.append(build_block(content, item.params, content_type=content_type,
                                 prompt=item.prompt, template=template,
                                 decryptor_js=decryptor_js))
    return pages
