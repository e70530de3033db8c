import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  base64Decode, base64Encode, hexDecode, parseBlockFromHtml,
} from "../src/block";
import { payloadIntact } from "../src/quiz";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

const page = (name: string) => readFileSync(join(FIXTURES, name), "utf-8");

describe("base64 codec", () => {
  it("round-trips binary data", () => {
    for (const n of [0, 1, 2, 3, 4, 57, 256]) {
      const data = new Uint8Array(n).map((_, i) => (i * 89 + 7) & 0xff);
      expect(base64Decode(base64Encode(data))).toEqual(data);
    }
  });

  it("matches known vectors", () => {
    expect(base64Encode(new TextEncoder().encode("foob"))).toBe("Zm9vYg==");
    expect(new TextDecoder().decode(base64Decode("Zm9vYmFy"))).toBe("foobar");
    expect(base64Decode("")).toEqual(new Uint8Array(0));
  });

  it("rejects malformed input", () => {
    expect(() => base64Decode("abc")).toThrow();
    expect(() => base64Decode("a$==")).toThrow();
  });
});

describe("hex codec", () => {
  it("decodes and validates", () => {
    expect(hexDecode("00ff10")).toEqual(new Uint8Array([0, 255, 16]));
    expect(() => hexDecode("0g")).toThrow();
    expect(() => hexDecode("abc")).toThrow();
  });
});

describe("block parsing", () => {
  it("extracts the metadata island from a real block page", () => {
    const meta = parseBlockFromHtml(page("russian_doll.html"));
    expect(meta.schema).toBe("pmse-block-v1");
    expect(meta.content_type).toBe("html-block");
    expect(meta.version.passwords).toBe(1);
    expect(meta.prompt).toBe("outer block");
    expect(hexDecode(meta.iv_hex).length).toBe(24);
    expect(meta.timestamp).toMatch(/^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z$/);
  });

  it("rejects plain pages and unknown schemas", () => {
    expect(() => parseBlockFromHtml("<html><body>nope</body></html>"))
      .toThrow(/not a block/);
    const mutated = page("empty_block.html")
      .replace('"schema": "pmse-block-v1"', '"schema": "pmse-block-v9"');
    expect(() => parseBlockFromHtml(mutated)).toThrow(/schema/);
  });

  it("verifies payload integrity without any password", () => {
    const meta = parseBlockFromHtml(page("empty_block.html"));
    expect(meta.payload_b64).toBe("");
    expect(meta.checksum_hex).toBe("0000000A");
    expect(payloadIntact(meta)).toBe(true);
    // corrupting the final payload byte must break integrity
    const quiz = parseBlockFromHtml(page(join("chain_quiz", "block_0.html")));
    const payload = base64Decode(quiz.payload_b64);
    payload[payload.length - 1] ^= 0x80;
    const tampered = { ...quiz, payload_b64: base64Encode(payload) };
    expect(payloadIntact(tampered)).toBe(false);
  });
});
