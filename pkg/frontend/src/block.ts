/**
 * Block metadata parsing and the byte/text plumbing the decryptor needs:
 * dependency-free base64 and hex codecs (standard alphabet, padded) plus
 * extraction of the JSON metadata island from a block page.
 */

import { CipherVersion } from "./cipher";

export interface BlockMeta {
  schema: string;
  version: CipherVersion;
  iv_hex: string;
  payload_b64: string;
  checksum_hex: string;
  timestamp: string;
  content_type: "text" | "html-block" | "url-list";
  prompt: string | null;
}

const B64_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

export function base64Decode(text: string): Uint8Array {
  const clean = text.replace(/[\r\n\s]/g, "");
  if (clean.length % 4 !== 0) throw new Error("base64 length not a multiple of 4");
  let pad = 0;
  if (clean.endsWith("==")) pad = 2;
  else if (clean.endsWith("=")) pad = 1;
  const out = new Uint8Array((clean.length / 4) * 3 - pad);
  let o = 0;
  for (let i = 0; i < clean.length; i += 4) {
    let acc = 0;
    for (let j = 0; j < 4; j++) {
      const ch = clean[i + j];
      let v = 0;
      if (ch === "=") {
        if (i + 4 < clean.length || j < 2) throw new Error("misplaced base64 padding");
      } else {
        v = B64_ALPHABET.indexOf(ch);
        if (v < 0) throw new Error(`invalid base64 character '${ch}'`);
      }
      acc = (acc << 6) | v;
    }
    if (o < out.length) out[o++] = (acc >> 16) & 0xff;
    if (o < out.length) out[o++] = (acc >> 8) & 0xff;
    if (o < out.length) out[o++] = acc & 0xff;
  }
  return out;
}

export function base64Encode(data: Uint8Array): string {
  let out = "";
  for (let i = 0; i < data.length; i += 3) {
    const b0 = data[i];
    const b1 = i + 1 < data.length ? data[i + 1] : 0;
    const b2 = i + 2 < data.length ? data[i + 2] : 0;
    const acc = (b0 << 16) | (b1 << 8) | b2;
    out += B64_ALPHABET[(acc >> 18) & 63];
    out += B64_ALPHABET[(acc >> 12) & 63];
    out += i + 1 < data.length ? B64_ALPHABET[(acc >> 6) & 63] : "=";
    out += i + 2 < data.length ? B64_ALPHABET[acc & 63] : "=";
  }
  return out;
}

export function hexDecode(text: string): Uint8Array {
  if (text.length % 2 !== 0 || /[^0-9a-fA-F]/.test(text)) {
    throw new Error("invalid hex string");
  }
  const out = new Uint8Array(text.length / 2);
  for (let i = 0; i < out.length; i++) {
    out[i] = parseInt(text.slice(2 * i, 2 * i + 2), 16);
  }
  return out;
}

export const SCHEMA = "pmse-block-v1";

const ISLAND_RE = /<script[^>]*\bid=["']pmse-block["'][^>]*>([\s\S]*?)<\/script>/i;

function validate(doc: unknown): BlockMeta {
  if (typeof doc !== "object" || doc === null) throw new Error("not a block: island is not an object");
  const d = doc as Record<string, unknown>;
  if (d.schema !== SCHEMA) throw new Error(`unsupported block schema '${String(d.schema)}'`);
  const v = d.version as Record<string, unknown>;
  if (!v || (v.polynomial !== "order1" && v.polynomial !== "order2")) {
    throw new Error("not a block: bad version.polynomial");
  }
  if (v.passwords !== 1 && v.passwords !== 2) throw new Error("not a block: bad version.passwords");
  if (v.selector_source !== "yn_low" && v.selector_source !== "x0") {
    throw new Error("not a block: bad version.selector_source");
  }
  const meta: BlockMeta = {
    schema: d.schema as string,
    version: {
      polynomial: v.polynomial,
      divisor: typeof v.divisor === "number" ? v.divisor : undefined,
      permutation_set: String(v.permutation_set),
      selector_source: v.selector_source,
      passwords: v.passwords,
    },
    iv_hex: String(d.iv_hex),
    payload_b64: String(d.payload_b64 ?? ""),
    checksum_hex: String(d.checksum_hex),
    timestamp: String(d.timestamp),
    content_type: d.content_type as BlockMeta["content_type"],
    prompt: d.prompt == null ? null : String(d.prompt),
  };
  if (!["text", "html-block", "url-list"].includes(meta.content_type)) {
    throw new Error(`not a block: unknown content_type '${meta.content_type}'`);
  }
  if (hexDecode(meta.iv_hex).length !== 24) throw new Error("not a block: iv_hex must be 24 bytes");
  if (meta.checksum_hex.length !== 8) throw new Error("not a block: checksum_hex must be 8 chars");
  return meta;
}

export function parseBlockFromHtml(html: string): BlockMeta {
  const m = ISLAND_RE.exec(html);
  if (!m) throw new Error("not a block: no pmse-block metadata island");
  return validate(JSON.parse(m[1]));
}

export function parseBlockFromDocument(doc: Document): BlockMeta {
  const island = doc.getElementById("pmse-block");
  if (!island || !island.textContent) {
    throw new Error("not a block: no pmse-block metadata island");
  }
  return validate(JSON.parse(island.textContent));
}
