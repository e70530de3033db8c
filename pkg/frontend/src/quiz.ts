/**
 * Quiz/chain view model: everything the page does between "user typed
 * passwords" and "pixels", kept DOM-free so it is directly testable.
 *
 * Passwords live only in function arguments and return values (volatile
 * page state); decryption is entirely client side.
 */

import { checksum, checksumHex, decryptBytes, encryptBytes } from "./cipher";
import { base64Decode, BlockMeta, hexDecode, parseBlockFromHtml } from "./block";

export const NEXT_MARKER = "\n--- next-block ---\n";

export interface NextPointer {
  url: string;
  pass1: string | null;
  pass2: string | null;
}

export interface DecryptOutcome {
  bytes: Uint8Array;
  /** full decrypted text, lossy UTF-8 (garbage stays visible by design) */
  text: string;
  /** text with any next-block trailer stripped */
  body: string;
  /** re-encryption checksum verdict: true = matches the block's checksum */
  badgeOk: boolean;
  next: NextPointer | null;
  /** parsed inner block for russian-doll content, if it is one */
  innerBlock: BlockMeta | null;
}

export function payloadIntact(meta: BlockMeta): boolean {
  return checksumHex(checksum(base64Decode(meta.payload_b64))) ===
    meta.checksum_hex.toUpperCase();
}

function utf8Encode(text: string): Uint8Array {
  return new TextEncoder().encode(text);
}

function utf8DecodeLossy(bytes: Uint8Array): string {
  return new TextDecoder("utf-8", { fatal: false }).decode(bytes);
}

function parseTrailer(text: string): { body: string; next: NextPointer | null } {
  const at = text.indexOf(NEXT_MARKER);
  if (at < 0) return { body: text, next: null };
  const body = text.slice(0, at);
  const next: NextPointer = { url: "", pass1: null, pass2: null };
  for (const line of text.slice(at + NEXT_MARKER.length).split("\n")) {
    if (line.startsWith("url: ")) next.url = line.slice(5);
    else if (line.startsWith("pass1: ")) next.pass1 = line.slice(7);
    else if (line.startsWith("pass2: ")) next.pass2 = line.slice(7);
  }
  return { body, next: next.url ? next : null };
}

/**
 * Decrypt a block with the typed password(s). Wrong passwords do not
 * error: the garbled text is returned for display and the badge goes to
 * mismatch, because re-encrypting the lossy UTF-8 round trip of garbage
 * w.h.p. no longer folds to the declared checksum (valid text survives
 * the round trip byte-exactly, so a correct password keeps the badge ok).
 */
export function decryptBlock(meta: BlockMeta, pass1: string, pass2?: string): DecryptOutcome {
  const iv = hexDecode(meta.iv_hex);
  const p1 = utf8Encode(pass1);
  const p2 = meta.version.passwords === 2 ? utf8Encode(pass2 ?? "") : null;
  const ciphertext = base64Decode(meta.payload_b64);
  const bytes = decryptBytes(meta.version, iv, p1, p2, ciphertext);
  const text = utf8DecodeLossy(bytes);
  const reencrypted = encryptBytes(meta.version, iv, p1, p2, utf8Encode(text));
  const badgeOk = checksumHex(checksum(reencrypted)) === meta.checksum_hex.toUpperCase();
  const { body, next } = parseTrailer(text);
  let innerBlock: BlockMeta | null = null;
  if (meta.content_type === "html-block") {
    try {
      innerBlock = parseBlockFromHtml(text);
    } catch {
      innerBlock = null;
    }
  }
  return { bytes, text, body, badgeOk, next, innerBlock };
}

export type Fetcher = (url: string) => string;

export interface QuizStep {
  url: string;
  outcome: DecryptOutcome;
}

/**
 * Programmatic chain walk (the browser flow is the same loop with human
 * navigation): feed each block the answer for its url, follow the
 * revealed link until a block with no next pointer.
 */
export function walkChain(
  fetchPage: Fetcher,
  startUrl: string,
  answers: (url: string, meta: BlockMeta) => { pass1: string; pass2?: string },
  maxSteps = 32,
): QuizStep[] {
  const steps: QuizStep[] = [];
  let url: string | null = startUrl;
  while (url !== null && steps.length < maxSteps) {
    const meta = parseBlockFromHtml(fetchPage(url));
    const { pass1, pass2 } = answers(url, meta);
    const outcome = decryptBlock(meta, pass1, pass2);
    steps.push({ url, outcome });
    url = outcome.next ? outcome.next.url : null;
  }
  return steps;
}
