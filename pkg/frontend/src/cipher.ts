/**
 * Bit-exact port of the pmse stream cipher core.
 *
 * Every arithmetic step is forced onto 32-bit two's-complement semantics
 * (Math.imul for wrapping products, |0 for wrapping sums, >>> for logical
 * shifts, and JS % which already truncates toward zero), so the key bytes
 * produced here are positionally identical to the reference
 * implementation's. Do not "simplify" the integer handling.
 */

export type SelectorSource = "yn_low" | "x0";

export interface CipherVersion {
  polynomial: "order1" | "order2";
  divisor?: number;
  permutation_set: string;
  selector_source: SelectorSource;
  passwords: 1 | 2;
}

/** Quotient truncated toward zero; exact for |a| < 2^31, 1 <= b < 2^31. */
function tdiv(a: number, b: number): number {
  return Math.trunc(a / b);
}

export interface KeyStream {
  keys: Uint8Array;
  selectors: Uint8Array;
}

export function keystreamBytes(
  version: CipherVersion,
  iv: Uint8Array,
  pass1: Uint8Array,
  pass2: Uint8Array | null,
  n: number,
): KeyStream {
  if (iv.length !== 24) throw new Error(`iv must be 24 bytes, got ${iv.length}`);
  if (pass1.length < 1) throw new Error("pass1 must not be empty");
  if (pass2 !== null && pass2.length < 1) throw new Error("pass2 must not be empty");
  for (let k = 14; k < 19; k++) {
    if (iv[k] < 2) throw new Error(`iv[${k}] < 2 (reinit modulus)`);
  }
  const order2 = version.polynomial === "order2";
  const divisor = order2 ? (version.divisor ?? 4) : 1;
  if (divisor < 1) throw new Error(`divisor must be >= 1, got ${divisor}`);
  const selFromX0 = version.selector_source === "x0";

  let x0 = iv[0], x1 = iv[1], x2 = iv[2], x3 = iv[3];
  let xt = iv[7], yn = iv[10], x1prev = iv[1];
  const keys = new Uint8Array(n);
  const selectors = new Uint8Array(n);
  for (let i = 0; i < n; i++) {
    if (order2) {
      yn = (Math.imul(Math.imul(i, i), x2) + Math.imul(x1, i) + tdiv(yn, divisor)) | 0;
    } else {
      yn = (Math.imul(x2, i) + x1) | 0;
    }
    const xd = yn & 0xff;
    x0 = (yn >>> 24) ^ ((yn >>> 16) & 0xff) ^ ((yn >>> 8) & 0xff) ^ xd;
    x1 = pass1[i % pass1.length];
    x2 = pass2 === null ? x1prev : pass2[(i + x1) % pass2.length];
    x3 = ((Math.imul(i, x1) - Math.imul(x3, x2)) | 0) % 255;
    xt = (xt ^ x0 ^ x1 ^ x2 ^ x3) & 0xff;
    if (xt === 0) {
      xt = i % iv[14];
      x0 = i % iv[15];
      x1 = i % iv[16];
      x2 = i % iv[17];
      x3 = i % iv[18];
    }
    x1prev = x1;
    keys[i] = xt;
    selectors[i] = selFromX0 ? x0 : xd;
  }
  return { keys, selectors };
}

// Deconstruction cases: bitMap[k] = source bit index feeding output bit k,
// plus a XOR mask applied after the permutation (forward direction).

function rotlMap(r: number): number[] {
  const m = [];
  for (let k = 0; k < 8; k++) m.push((k - r + 8) % 8);
  return m;
}

const V1_MAPS: number[][] = [rotlMap(4), rotlMap(2), [2, 3, 0, 1, 6, 7, 4, 5], rotlMap(3)];

interface PermCase {
  forward: Uint8Array;
  inverse: Uint8Array;
}

function buildCase(bitMap: number[], mask: number): PermCase {
  const forward = new Uint8Array(256);
  const inverse = new Uint8Array(256);
  for (let b = 0; b < 256; b++) {
    let v = 0;
    for (let k = 0; k < 8; k++) v |= ((b >> bitMap[k]) & 1) << k;
    forward[b] = v ^ mask;
  }
  for (let b = 0; b < 256; b++) inverse[forward[b]] = b;
  return { forward, inverse };
}

const BUILTIN_SETS: Record<string, PermCase[]> = {
  V1: V1_MAPS.map((m) => buildCase(m, 0)),
  V1C: V1_MAPS.map((m, idx) => buildCase(m, [0xc0, 0x0c, 0xc0, 0x0c][idx])),
};

export function permutationSet(id: string): PermCase[] {
  const set = BUILTIN_SETS[id];
  if (!set) throw new Error(`unsupported permutation set '${id}'`);
  return set;
}

export function decryptBytes(
  version: CipherVersion,
  iv: Uint8Array,
  pass1: Uint8Array,
  pass2: Uint8Array | null,
  ciphertext: Uint8Array,
): Uint8Array {
  const set = permutationSet(version.permutation_set);
  const { keys, selectors } = keystreamBytes(version, iv, pass1, pass2, ciphertext.length);
  const out = new Uint8Array(ciphertext.length);
  for (let i = 0; i < ciphertext.length; i++) {
    out[i] = set[selectors[i] % set.length].inverse[ciphertext[i] ^ keys[i]];
  }
  return out;
}

export function encryptBytes(
  version: CipherVersion,
  iv: Uint8Array,
  pass1: Uint8Array,
  pass2: Uint8Array | null,
  plaintext: Uint8Array,
): Uint8Array {
  const set = permutationSet(version.permutation_set);
  const { keys, selectors } = keystreamBytes(version, iv, pass1, pass2, plaintext.length);
  const out = new Uint8Array(plaintext.length);
  for (let i = 0; i < plaintext.length; i++) {
    out[i] = set[selectors[i] % set.length].forward[plaintext[i]] ^ keys[i];
  }
  return out;
}

/** 32-bit integrity fold: cs starts at 10, cs <- (cs ^ b) + cs, unsigned. */
export function checksum(data: Uint8Array): number {
  let cs = 10;
  for (let i = 0; i < data.length; i++) {
    cs = (((cs ^ data[i]) >>> 0) + cs) >>> 0;
  }
  return cs;
}

export function checksumHex(cs: number): string {
  return cs.toString(16).toUpperCase().padStart(8, "0");
}
