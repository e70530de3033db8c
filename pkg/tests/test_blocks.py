import base64
import dataclasses
import json
import re

import pytest

from pmse import (ChainItem, ChecksumMismatch, CipherParams, NotABlock,
                  Order2Recursive, SchemaVersionUnknown, TemplateMissingSlot,
                  build_block, build_chain, checksum, decrypt_block,
                  parse_block, password_recheck, verify_block)
from pmse.blocks import NEXT_MARKER, default_template

PARAMS = CipherParams(b"alpha", b"beta")
ONE_PW = CipherParams(b"solo")


def test_empty_content_block():
    page = build_block(b"", PARAMS)
    block = parse_block(page)
    assert block.payload_b64 == ""
    assert block.checksum_hex == "0000000A"
    assert verify_block(block) is None
    assert decrypt_block(block, b"alpha", b"beta") == b""


def test_build_parse_roundtrip_metadata():
    page = build_block(b"payload bytes", PARAMS, content_type="text",
                       prompt="what is the answer?",
                       timestamp="2026-01-02T03:04:05Z")
    block = parse_block(page)
    assert block.prompt == "what is the answer?"
    assert block.timestamp == "2026-01-02T03:04:05Z"
    assert block.content_type == "text"
    assert block.version.passwords == 2
    assert block.version.polynomial == "order1"
    assert block.version.permutation_set == "V1"
    assert block.iv_hex == PARAMS.iv.hex()
    assert verify_block(block) is None
    assert decrypt_block(block, b"alpha", b"beta") == b"payload bytes"


def test_version_descriptor_order2_one_password():
    params = CipherParams(b"solo", polynomial=Order2Recursive(7),
                          permutation_set="V1C")
    block = parse_block(build_block(b"x", params))
    assert block.version.polynomial == "order2"
    assert block.version.divisor == 7
    assert block.version.passwords == 1
    assert block.version.permutation_set == "V1C"
    assert decrypt_block(block, b"solo") == b"x"


def test_tampered_payload_fails_verification():
    page = build_block(b"some secret content here", PARAMS)
    block = parse_block(page)
    payload = bytearray(block.payload)
    # a last-byte flip is the one tamper the fold provably always catches
    payload[-1] ^= 0x40
    tampered = dataclasses.replace(
        block, payload_b64=base64.b64encode(bytes(payload)).decode())
    problem = verify_block(tampered)
    assert isinstance(problem, ChecksumMismatch)
    assert "checksum mismatch" in str(problem)


def test_checksum_blind_spot_far_from_stream_end():
    # documented weakness of the non-cryptographic fold: a flip more than
    # 31 bytes before the end is doubled out of the 32-bit accumulator and
    # verification cannot see it
    page = build_block(bytes(48), PARAMS)
    block = parse_block(page)
    payload = bytearray(block.payload)
    payload[0] ^= 0xFF
    tampered = dataclasses.replace(
        block, payload_b64=base64.b64encode(bytes(payload)).decode())
    assert verify_block(tampered) is None


def test_arbitrary_html_is_not_a_block():
    with pytest.raises(NotABlock):
        parse_block("<html><body><p>hello</p></body></html>")


def test_unknown_schema():
    page = build_block(b"x", PARAMS)
    page = page.replace('"schema": "pmse-block-v1"', '"schema": "pmse-block-v9"')
    with pytest.raises(SchemaVersionUnknown):
        parse_block(page)


def test_malformed_island_is_not_a_block():
    page = '<script id="pmse-block" type="application/json">{not json</script>'
    with pytest.raises(NotABlock):
        parse_block(page)
    page = '<script id="pmse-block" type="application/json">{"schema": "pmse-block-v1"}</script>'
    with pytest.raises(NotABlock):
        parse_block(page)


def test_template_missing_slot():
    with pytest.raises(TemplateMissingSlot):
        build_block(b"x", PARAMS, template="<html>{{BLOCK_JSON}}</html>")
    with pytest.raises(TemplateMissingSlot):
        build_block(b"x", PARAMS, template="<html>{{DECRYPTOR_JS}}</html>")


def test_bad_content_type_rejected():
    with pytest.raises(Exception) as exc:
        build_block(b"x", PARAMS, content_type="binary")
    assert "content_type" in str(exc.value)


def test_custom_decryptor_is_inlined():
    page = build_block(b"x", PARAMS, decryptor_js="/* sentinel-decryptor */")
    assert "/* sentinel-decryptor */" in page


def test_bundled_decryptor_ships_with_the_package():
    # frontend build installs its bundle as package data; default blocks
    # must be self-decrypting out of the box
    page = build_block(b"x", PARAMS)
    assert "keystreamBytes" in page
    assert 'id="pmse-decryptor"' in page


def test_prompt_is_escaped_in_clear_region():
    page = build_block(b"x", PARAMS, prompt="a <b> & \"c\"")
    assert "a &lt;b&gt; &amp; &quot;c&quot;" in page


def test_island_never_contains_script_terminator():
    page = build_block(b"x", PARAMS, prompt="</script><script>alert(1)</script>")
    island = re.search(r'<script[^>]*id="pmse-block"[^>]*>(.*?)</script>',
                       page, re.DOTALL).group(1)
    assert "</script" not in island
    assert parse_block(page).prompt == "</script><script>alert(1)</script>"


def test_checksum_covers_ciphertext_not_plaintext():
    page = build_block(b"content", PARAMS)
    block = parse_block(page)
    assert int(block.checksum_hex, 16) == checksum(block.payload)
    # verification needs no passwords at all
    assert verify_block(block) is None


def test_password_recheck_detects_wrong_password():
    content = "the quick brown fox jumps over the lazy dog".encode()
    block = parse_block(build_block(content, PARAMS))
    assert password_recheck(block, b"alpha", b"beta")
    assert not password_recheck(block, b"alpha", b"wrong")
    assert not password_recheck(block, b"oops", b"beta")


def test_single_item_chain_is_terminal():
    pages = build_chain([ChainItem(b"only", ONE_PW)])
    assert len(pages) == 1
    block = parse_block(pages[0])
    assert block.content_type == "text"
    assert NEXT_MARKER.encode() not in decrypt_block(block, b"solo")


def test_three_block_chain_walk():
    items = [
        ChainItem(b"first clue", CipherParams(b"open"), prompt="say the magic word"),
        ChainItem(b"second clue", CipherParams(b"sesame", b"seed")),
        ChainItem(b"treasure", CipherParams(b"final")),
    ]
    pages = build_chain(items, base_url_pattern="b{index}.html")
    b0 = parse_block(pages[0])
    text0 = decrypt_block(b0, b"open").decode()
    assert text0.startswith("first clue")
    assert "url: b1.html" in text0
    assert "pass1: sesame" in text0
    assert "pass2: seed" in text0
    assert b0.content_type == "url-list"

    b1 = parse_block(pages[1])
    text1 = decrypt_block(b1, b"sesame", b"seed").decode()
    assert "url: b2.html" in text1
    assert "pass1: final" in text1
    assert "pass2:" not in text1

    b2 = parse_block(pages[2])
    assert decrypt_block(b2, b"final") == b"treasure"
    assert b2.content_type == "text"


def test_chain_without_embedded_passwords():
    items = [ChainItem(b"q1", CipherParams(b"a1"), prompt="riddle 1"),
             ChainItem(b"done", CipherParams(b"a2"))]
    pages = build_chain(items, embed_passwords=False)
    text = decrypt_block(parse_block(pages[0]), b"a1").decode()
    assert "url: block_1.html" in text
    assert "pass1" not in text


def test_chain_wrong_key_garbles_and_fails_recheck():
    items = [ChainItem(b"first clue, some longer text body", CipherParams(b"right")),
             ChainItem(b"end", CipherParams(b"next"))]
    pages = build_chain(items)
    block = parse_block(pages[0])
    garbled = decrypt_block(block, b"wrong")
    assert b"first clue" not in garbled
    assert not password_recheck(block, b"wrong")


def test_russian_doll_nesting():
    inner = build_block(b"innermost secret", CipherParams(b"deep"),
                        prompt="inner prompt")
    outer = build_block(inner.encode("utf-8"), PARAMS, content_type="html-block")
    outer_block = parse_block(outer)
    assert outer_block.content_type == "html-block"
    recovered = decrypt_block(outer_block, b"alpha", b"beta").decode("utf-8")
    inner_block = parse_block(recovered)
    assert decrypt_block(inner_block, b"deep") == b"innermost secret"


def test_chain_timestamps_are_iso_utc_and_non_decreasing():
    items = [ChainItem(str(k).encode(), CipherParams(b"p%d" % k)) for k in range(4)]
    stamps = [parse_block(p).timestamp for p in build_chain(items)]
    iso = re.compile(r"^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z$")
    assert all(iso.match(s) for s in stamps)
    assert stamps == sorted(stamps)


def test_empty_chain_rejected():
    with pytest.raises(Exception):
        build_chain([])


def test_default_template_has_ui_skeleton():
    tpl = default_template()
    for anchor in ("pmse-pass1", "pmse-pass2", "pmse-decrypt", "pmse-output",
                   "pmse-badge", "pmse-next", "pmse-prompt", "{{BLOCK_JSON}}",
                   "{{DECRYPTOR_JS}}"):
        assert anchor in tpl


def test_island_is_valid_json_island():
    page = build_block(b"x", PARAMS, prompt="p")
    m = re.search(r'<script type="application/json" id="pmse-block">(.*?)</script>',
                  page, re.DOTALL)
    doc = json.loads(m.group(1))
    assert doc["schema"] == "pmse-block-v1"
    assert set(doc) >= {"version", "iv_hex", "payload_b64", "checksum_hex",
                        "timestamp", "content_type"}
