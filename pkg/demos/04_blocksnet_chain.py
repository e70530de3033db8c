"""Build a three-block quiz chain.

Each block is a single self-contained HTML file: ciphertext, metadata
(checksum, timestamp) and the in-page decryptor. The password of each
block is the answer to the previous block's question, so the chain is a
quiz a human can walk with nothing but a browser; no server is involved.
Open demos/out/quiz/block_0.html and start with the answer "vernam".
"""

from pathlib import Path

from pmse import ChainItem, CipherParams, build_chain, parse_block

OUT = Path(__file__).parent / "out" / "quiz"
OUT.mkdir(parents=True, exist_ok=True)

items = [
    ChainItem(
        content=("Welcome. Next riddle: I am the operation that undoes "
                 "myself; apply me twice and nothing happened. "
                 "(answer in lowercase)").encode(),
        params=CipherParams(b"vernam"),
        prompt="Who proved the one-time pad perfectly secret? "
               "Gilbert ____ built the machine. (lowercase)"),
    ChainItem(
        content=("Almost there. Last riddle: how many bits are in the "
                 "byte this cipher chews per step? (a word, lowercase)").encode(),
        params=CipherParams(b"xor"),
        prompt="answer the riddle from block 0"),
    ChainItem(
        content="You reached the end of the chain. The cake is real.".encode(),
        params=CipherParams(b"eight"),
        prompt="answer the riddle from block 1"),
]

# quiz mode: the next block's password must be guessed, only its url is
# revealed by the decrypted content
pages = build_chain(items, base_url_pattern="block_{index}.html",
                    embed_passwords=False)

for k, page in enumerate(pages):
    path = OUT / f"block_{k}.html"
    path.write_text(page, encoding="utf-8")
    meta = parse_block(page)
    print(f"{path}  checksum={meta.checksum_hex}  built={meta.timestamp}")

print(f"\nopen {OUT / 'block_0.html'} in a browser; first answer: vernam")
