"""Generate the cross-component fixtures the browser test suite checks
itself against: 100 encryption cases spanning every cipher variant, plus
demo chains, a russian-doll block, and an empty block.

Run from anywhere with the pmse package installed:

    python3 frontend/scripts/make_fixtures.py

The outputs under frontend/test/fixtures/ are committed; regenerate only
when the block format version changes.
"""

import json
import random
import string
from pathlib import Path

from pmse import (ChainItem, CipherParams, Order1, Order2Recursive, X0,
                  YN_LOW_BYTE, build_block, build_chain, encrypt_stream,
                  keystream)

FIXTURES = Path(__file__).resolve().parent.parent / "test" / "fixtures"
PRINTABLE = string.ascii_letters + string.digits + "#@!?_-"


def random_password(rng: random.Random) -> str:
    if rng.random() < 0.1:
        # exercise the UTF-8 password path
        return "".join(rng.choice("éüßλж日暗号") for _ in range(rng.randrange(1, 5)))
    return "".join(rng.choice(PRINTABLE) for _ in range(rng.randrange(1, 13)))


def random_iv(rng: random.Random) -> bytes:
    iv = bytearray(rng.randrange(0, 256) for _ in range(24))
    for k in range(14, 19):
        iv[k] = rng.randrange(2, 256)
    return bytes(iv)


def version_doc(params: CipherParams) -> dict:
    doc = {
        "polynomial": "order2" if isinstance(params.polynomial, Order2Recursive) else "order1",
        "permutation_set": params.permutation_set,
        "selector_source": params.selector_source,
        "passwords": 1 if params.pass2 is None else 2,
    }
    if isinstance(params.polynomial, Order2Recursive):
        doc["divisor"] = params.polynomial.divisor
    return doc


def make_cross_component(rng: random.Random) -> dict:
    cases = []
    for k in range(100):
        pass1 = random_password(rng)
        pass2 = random_password(rng) if k % 4 else None
        params = CipherParams(
            pass1=pass1, pass2=pass2, iv=random_iv(rng),
            polynomial=Order2Recursive(rng.randrange(1, 9)) if k % 3 == 2 else Order1(),
            permutation_set="V1C" if k % 2 else "V1",
            selector_source=X0 if k % 5 == 4 else YN_LOW_BYTE)
        plaintext = rng.randbytes(rng.randrange(0, 400))
        ciphertext, cs = encrypt_stream(params, plaintext)
        cases.append({
            "version": version_doc(params),
            "iv_hex": params.iv.hex(),
            "pass1": pass1,
            "pass2": pass2,
            "plaintext_hex": plaintext.hex(),
            "ciphertext_hex": ciphertext.hex(),
            "checksum_hex": f"{cs:08X}",
            "keystream16_hex": keystream(params, 16).hex(),
        })
    return {"cases": cases}


def main() -> None:
    rng = random.Random(0x0F1C)
    FIXTURES.mkdir(parents=True, exist_ok=True)

    doc = make_cross_component(rng)
    (FIXTURES / "cross_component.json").write_text(json.dumps(doc, indent=1))
    print(f"wrote cross_component.json ({len(doc['cases'])} cases)")

    # quiz chain: passwords must be guessed (only urls are revealed)
    quiz_dir = FIXTURES / "chain_quiz"
    quiz_dir.mkdir(exist_ok=True)
    items = [
        ChainItem(b"clue one: the second answer is 'sesame'",
                  CipherParams("open"), prompt="say the opening word"),
        ChainItem(b"clue two: the last answer is 'gold'",
                  CipherParams("sesame", "sesame2")),
        ChainItem(b"the treasure room", CipherParams("gold")),
    ]
    for k, page in enumerate(build_chain(items, base_url_pattern="block_{index}.html",
                                         embed_passwords=False)):
        (quiz_dir / f"block_{k}.html").write_text(page)
    print("wrote chain_quiz/block_{0,1,2}.html")

    # courier chain: each block reveals the next block's passwords
    embed_dir = FIXTURES / "chain_embed"
    embed_dir.mkdir(exist_ok=True)
    items = [
        ChainItem(b"message one", CipherParams("start-key")),
        ChainItem(b"message two", CipherParams("rel4y", "p4ss")),
        ChainItem(b"final message", CipherParams("l4st")),
    ]
    for k, page in enumerate(build_chain(items, base_url_pattern="block_{index}.html",
                                         embed_passwords=True)):
        (embed_dir / f"block_{k}.html").write_text(page)
    print("wrote chain_embed/block_{0,1,2}.html")

    inner = build_block(b"nested payload", CipherParams("inner-key"),
                        prompt="inner block")
    outer = build_block(inner.encode(), CipherParams("outer-key"),
                        content_type="html-block", prompt="outer block")
    (FIXTURES / "russian_doll.html").write_text(outer)
    print("wrote russian_doll.html")

    (FIXTURES / "empty_block.html").write_text(
        build_block(b"", CipherParams("nothing")))
    print("wrote empty_block.html")


if __name__ == "__main__":
    main()
