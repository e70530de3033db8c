"""Command-line front door.

Subcommands: keystream, encrypt, decrypt, analyze, compare-otp, bench,
block build / block chain / block verify. Exit codes: 0 success, 1 usage
error, 2 data error (checksum or format failures).

Passwords come from --pass1/--pass2, the PMSE_PASS1/PMSE_PASS2 environment
variables, or an interactive no-echo prompt; they are never echoed back.
"""

from __future__ import annotations

import argparse
import getpass
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import blocks, otp, permutations, pnm, stats
from .core import (CipherParams, DEFAULT_IV, Order1, Order2Recursive, X0,
                   YN_LOW_BYTE, decrypt_stream, encrypt_stream, keystream)
from .errors import IoFailure, PmseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_SELECTORS = {"yn": YN_LOW_BYTE, "x0": X0}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_cipher_flags(p: argparse.ArgumentParser, with_passwords: bool = True):
    if with_passwords:
        p.add_argument("--pass1", help="first password (default: $PMSE_PASS1, else prompt)")
        p.add_argument("--pass2", help="second password (default: $PMSE_PASS2, else prompt)")
        p.add_argument("--one-password", action="store_true",
                       help="single-password mode; x2 is fed from the previous x1")
    p.add_argument("--iv", metavar="HEX48",
                   help="24-byte iv as 48 hex chars (default: built-in example iv)")
    p.add_argument("--order", type=int, choices=(1, 2), default=1,
                   help="polynomial order (default 1)")
    p.add_argument("--divisor", type=int, default=4,
                   help="recursive divisor for order 2 (default 4)")
    p.add_argument("--set", dest="perm_set", default="V1",
                   help="permutation set id: V1, V1C, or the id of --set-file")
    p.add_argument("--set-file", help="load and register a permutation set "
                   "from this file (id = file stem)")
    p.add_argument("--selector", choices=sorted(_SELECTORS), default="yn",
                   help="deconstruction case selector source (default yn)")


def _resolve_passwords(args) -> tuple[bytes, bytes | None]:
    pass1 = args.pass1 if args.pass1 is not None else os.environ.get("PMSE_PASS1")
    if pass1 is None:
        pass1 = getpass.getpass("pass1: ")
    if args.one_password:
        return pass1.encode("utf-8"), None
    pass2 = args.pass2 if args.pass2 is not None else os.environ.get("PMSE_PASS2")
    if pass2 is None:
        pass2 = getpass.getpass("pass2 (empty for one-password mode): ")
    return pass1.encode("utf-8"), pass2.encode("utf-8") if pass2 else None


def _iv_from_args(args) -> bytes:
    if args.iv is None:
        return DEFAULT_IV
    try:
        iv = bytes.fromhex(args.iv)
    except ValueError:
        raise _UsageError("--iv must be hex") from None
    if len(iv) != 24:
        raise _UsageError(f"--iv must decode to 24 bytes, got {len(iv)}")
    return iv


def _params_from_args(args, with_passwords: bool = True) -> CipherParams:
    if args.set_file:
        path = Path(args.set_file)
        ps = permutations.loads_set(path.read_text(encoding="utf-8"), path.stem)
        problems = permutations.validate_set(ps)
        if problems:
            raise _UsageError("; ".join(problems))
        permutations.register_set(ps)
        set_id = ps.id
    else:
        set_id = args.perm_set
    if with_passwords:
        pass1, pass2 = _resolve_passwords(args)
    else:
        pass1, pass2 = b"aa", b"bb"
    return CipherParams(
        pass1=pass1, pass2=pass2, iv=_iv_from_args(args),
        polynomial=Order2Recursive(args.divisor) if args.order == 2 else Order1(),
        permutation_set=set_id, selector_source=_SELECTORS[args.selector])


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise IoFailure(str(e)) from e


def _write_file(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise IoFailure(str(e)) from e


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        _write_file(path, text.encode("utf-8"))


def _sniff_pnm(data: bytes):
    if data[:2] in (b"P5", b"P6"):
        try:
            return pnm.read_pnm(data)
        except PmseError:
            return None
    return None


# ---------------------------------------------------------------- commands

def _cmd_keystream(args) -> int:
    ks = keystream(_params_from_args(args), args.count)
    if args.output is None or args.output == "-":
        sys.stdout.buffer.write(ks)
    else:
        _write_file(args.output, ks)
    return EXIT_OK


def _crypt(args, encrypt: bool) -> int:
    params = _params_from_args(args)
    data = _read_file(args.input)
    op = encrypt_stream if encrypt else decrypt_stream
    img = None if args.raw else _sniff_pnm(data)
    if img is not None:
        # image mode: only the pixel payload is transformed, the header
        # stays clear so the result is still a viewable PNM
        out_pixels, cs = op(params, img.pixels)
        _write_file(args.output, pnm.dumps_pnm(img.with_pixels(out_pixels)))
    else:
        out, cs = op(params, data)
        _write_file(args.output, out)
    print(f"checksum: {cs:08X}")
    return EXIT_OK


def _cmd_encrypt(args) -> int:
    return _crypt(args, encrypt=True)


def _cmd_decrypt(args) -> int:
    return _crypt(args, encrypt=False)


def _cmd_analyze(args) -> int:
    data = _read_file(args.input)
    st = stats.basic_stats(data)
    _write_text(args.output, st.to_text())
    if args.histogram_csv:
        _write_text(args.histogram_csv, stats.histogram_csv(st))
    if args.spectrum_csv:
        _write_text(args.spectrum_csv, stats.spectrum_csv(stats.spectrum(data)))
    return EXIT_OK


def _cmd_compare_otp(args) -> int:
    image = pnm.read_pnm(args.image)
    report = otp.compare_report(image, _params_from_args(args))
    _write_text(args.output, report.to_text())
    return EXIT_OK


@dataclass(frozen=True)
class BenchReport:
    payload_bytes: int
    runs: int
    encrypt_seconds: float
    decrypt_seconds: float
    encrypt_mb_per_s: float
    decrypt_mb_per_s: float
    decrypt_encrypt_ratio: float

    def to_text(self) -> str:
        return (f"payload_bytes: {self.payload_bytes}\n"
                f"runs: {self.runs}\n"
                f"encrypt_seconds_median: {self.encrypt_seconds:.4f}\n"
                f"decrypt_seconds_median: {self.decrypt_seconds:.4f}\n"
                f"encrypt_mb_per_s: {self.encrypt_mb_per_s:.3f}\n"
                f"decrypt_mb_per_s: {self.decrypt_mb_per_s:.3f}\n"
                f"decrypt_encrypt_ratio: {self.decrypt_encrypt_ratio:.3f}\n")


def bench(params: CipherParams, size: int = 1 << 20, runs: int = 5) -> BenchReport:
    """Median-of-runs throughput of encrypt and decrypt over one payload."""
    payload = os.urandom(size)
    ciphertext, _ = encrypt_stream(params, payload)  # also warms caches
    enc, dec = [], []
    for _ in range(runs):
        t0 = time.perf_counter()
        encrypt_stream(params, payload)
        enc.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        decrypt_stream(params, ciphertext)
        dec.append(time.perf_counter() - t0)
    e = statistics.median(enc)
    d = statistics.median(dec)
    return BenchReport(payload_bytes=size, runs=runs, encrypt_seconds=e,
                       decrypt_seconds=d, encrypt_mb_per_s=size / e / 1e6,
                       decrypt_mb_per_s=size / d / 1e6,
                       decrypt_encrypt_ratio=d / e)


def _cmd_bench(args) -> int:
    if args.size < 1 << 20:
        raise _UsageError("--size must be at least 1 MiB")
    if args.runs < 5:
        raise _UsageError("--runs must be at least 5")
    report = bench(_params_from_args(args, with_passwords=False),
                   size=args.size, runs=args.runs)
    sys.stdout.write(report.to_text())
    return EXIT_OK


def _template_arg(args) -> str | None:
    return Path(args.template).read_text(encoding="utf-8") if args.template else None


def _decryptor_arg(args) -> str | None:
    return Path(args.decryptor).read_text(encoding="utf-8") if args.decryptor else None


def _cmd_block_build(args) -> int:
    params = _params_from_args(args)
    content = _read_file(args.input)
    page = blocks.build_block(content, params, content_type=args.content_type,
                              prompt=args.prompt, template=_template_arg(args),
                              decryptor_js=_decryptor_arg(args))
    _write_file(args.output, page.encode("utf-8"))
    return EXIT_OK


def _chain_items(manifest: dict, args) -> list[blocks.ChainItem]:
    items = []
    for n, entry in enumerate(manifest.get("items", [])):
        if "content" in entry:
            content = entry["content"].encode("utf-8")
        elif "content_file" in entry:
            content = _read_file(entry["content_file"])
        else:
            raise _UsageError(f"item {n}: needs content or content_file")
        if "pass1" not in entry:
            raise _UsageError(f"item {n}: needs pass1")
        iv = bytes.fromhex(entry["iv_hex"]) if "iv_hex" in entry else _iv_from_args(args)
        order = int(entry.get("order", args.order))
        poly = Order2Recursive(int(entry.get("divisor", args.divisor))) \
            if order == 2 else Order1()
        params = CipherParams(
            pass1=entry["pass1"].encode("utf-8"),
            pass2=entry["pass2"].encode("utf-8") if entry.get("pass2") else None,
            iv=iv, polynomial=poly,
            permutation_set=entry.get("set", args.perm_set),
            selector_source=_SELECTORS[entry.get("selector", args.selector)])
        items.append(blocks.ChainItem(content=content, params=params,
                                      prompt=entry.get("prompt"),
                                      content_type=entry.get("content_type", "text")))
    if not items:
        raise _UsageError("manifest has no items")
    return items


def _cmd_block_chain(args) -> int:
    try:
        manifest = json.loads(_read_file(args.manifest))
    except json.JSONDecodeError as e:
        raise _UsageError(f"manifest is not valid JSON: {e}") from e
    pattern = manifest.get("url_pattern", args.url_pattern)
    embed = manifest.get("embed_passwords", not args.no_embed_passwords)
    pages = blocks.build_chain(_chain_items(manifest, args), base_url_pattern=pattern,
                               embed_passwords=embed, template=_template_arg(args),
                               decryptor_js=_decryptor_arg(args))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for k, page in enumerate(pages):
        name = pattern.format(index=k)
        _write_file(str(out_dir / name), page.encode("utf-8"))
        print(out_dir / name)
    return EXIT_OK


def _cmd_block_verify(args) -> int:
    block = blocks.parse_block(_read_file(args.file).decode("utf-8", errors="replace"))
    problem = blocks.verify_block(block)
    if problem is not None:
        print(str(problem), file=sys.stderr)
        return EXIT_DATA
    print(f"ok: checksum {block.checksum_hex}, timestamp {block.timestamp}")
    return EXIT_OK


# ------------------------------------------------------------------ wiring

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pmse", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keystream", help="dump raw key bytes")
    _add_cipher_flags(p)
    p.add_argument("-n", "--count", type=int, required=True, metavar="N")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_keystream)

    for name, fn, hlp in (("encrypt", _cmd_encrypt, "encrypt a file"),
                          ("decrypt", _cmd_decrypt, "decrypt a file")):
        p = sub.add_parser(name, help=hlp + " (PNM images keep a clear header)")
        _add_cipher_flags(p)
        p.add_argument("input")
        p.add_argument("output")
        p.add_argument("--raw", action="store_true",
                       help="never treat the input as a PNM image")
        p.set_defaults(func=fn)

    p = sub.add_parser("analyze", help="statistics of a byte stream")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="report file (default stdout)")
    p.add_argument("--histogram-csv", metavar="PATH")
    p.add_argument("--spectrum-csv", metavar="PATH")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare-otp", help="cipher vs one-time-pad on an image")
    _add_cipher_flags(p)
    p.add_argument("image", help="PGM/PPM image")
    p.add_argument("-o", "--output", help="report file (default stdout)")
    p.set_defaults(func=_cmd_compare_otp)

    p = sub.add_parser("bench", help="encrypt/decrypt throughput")
    _add_cipher_flags(p, with_passwords=False)
    p.add_argument("--size", type=int, default=1 << 20, help="payload bytes (>= 1 MiB)")
    p.add_argument("--runs", type=int, default=5, help="timed runs (>= 5)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("block", help="self-decryptable web blocks")
    bsub = p.add_subparsers(dest="block_command", required=True)

    b = bsub.add_parser("build", help="build one block from a content file")
    _add_cipher_flags(b)
    b.add_argument("input", help="content file")
    b.add_argument("output", help="block HTML file")
    b.add_argument("--content-type", choices=blocks.CONTENT_TYPES, default="text")
    b.add_argument("--prompt", help="clear-text question/hint shown on the page")
    b.add_argument("--template", help="alternative block template file")
    b.add_argument("--decryptor", help="decryptor script to inline")
    b.set_defaults(func=_cmd_block_build)

    b = bsub.add_parser("chain", help="build a linked chain from a JSON manifest")
    _add_cipher_flags(b)
    b.add_argument("manifest", help="JSON manifest: {items: [{content|content_file, "
                   "pass1[, pass2, prompt, iv_hex, order, divisor, set, selector]}]}")
    b.add_argument("--out-dir", required=True)
    b.add_argument("--url-pattern", default="block_{index}.html")
    b.add_argument("--no-embed-passwords", action="store_true",
                   help="do not reveal the next block's passwords (quiz mode)")
    b.add_argument("--template", help="alternative block template file")
    b.add_argument("--decryptor", help="decryptor script to inline")
    b.set_defaults(func=_cmd_block_chain)

    b = bsub.add_parser("verify", help="recompute a block's payload checksum")
    b.add_argument("file")
    b.set_defaults(func=_cmd_block_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"pmse: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PmseError as e:
        print(f"pmse: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"pmse: i/o error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
