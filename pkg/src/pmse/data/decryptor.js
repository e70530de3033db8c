"use strict";
(() => {
  // src/block.ts
  var B64_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  function base64Decode(text) {
    const clean = text.replace(/[\r\n\s]/g, "");
    if (clean.length % 4 !== 0) throw new Error("base64 length not a multiple of 4");
    let pad = 0;
    if (clean.endsWith("==")) pad = 2;
    else if (clean.endsWith("=")) pad = 1;
    const out = new Uint8Array(clean.length / 4 * 3 - pad);
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
        acc = acc << 6 | v;
      }
      if (o < out.length) out[o++] = acc >> 16 & 255;
      if (o < out.length) out[o++] = acc >> 8 & 255;
      if (o < out.length) out[o++] = acc & 255;
    }
    return out;
  }
  function hexDecode(text) {
    if (text.length % 2 !== 0 || /[^0-9a-fA-F]/.test(text)) {
      throw new Error("invalid hex string");
    }
    const out = new Uint8Array(text.length / 2);
    for (let i = 0; i < out.length; i++) {
      out[i] = parseInt(text.slice(2 * i, 2 * i + 2), 16);
    }
    return out;
  }
  var SCHEMA = "pmse-block-v1";
  var ISLAND_RE = /<script[^>]*\bid=["']pmse-block["'][^>]*>([\s\S]*?)<\/script>/i;
  function validate(doc) {
    var _a;
    if (typeof doc !== "object" || doc === null) throw new Error("not a block: island is not an object");
    const d = doc;
    if (d.schema !== SCHEMA) throw new Error(`unsupported block schema '${String(d.schema)}'`);
    const v = d.version;
    if (!v || v.polynomial !== "order1" && v.polynomial !== "order2") {
      throw new Error("not a block: bad version.polynomial");
    }
    if (v.passwords !== 1 && v.passwords !== 2) throw new Error("not a block: bad version.passwords");
    if (v.selector_source !== "yn_low" && v.selector_source !== "x0") {
      throw new Error("not a block: bad version.selector_source");
    }
    const meta = {
      schema: d.schema,
      version: {
        polynomial: v.polynomial,
        divisor: typeof v.divisor === "number" ? v.divisor : void 0,
        permutation_set: String(v.permutation_set),
        selector_source: v.selector_source,
        passwords: v.passwords
      },
      iv_hex: String(d.iv_hex),
      payload_b64: String((_a = d.payload_b64) != null ? _a : ""),
      checksum_hex: String(d.checksum_hex),
      timestamp: String(d.timestamp),
      content_type: d.content_type,
      prompt: d.prompt == null ? null : String(d.prompt)
    };
    if (!["text", "html-block", "url-list"].includes(meta.content_type)) {
      throw new Error(`not a block: unknown content_type '${meta.content_type}'`);
    }
    if (hexDecode(meta.iv_hex).length !== 24) throw new Error("not a block: iv_hex must be 24 bytes");
    if (meta.checksum_hex.length !== 8) throw new Error("not a block: checksum_hex must be 8 chars");
    return meta;
  }
  function parseBlockFromHtml(html) {
    const m = ISLAND_RE.exec(html);
    if (!m) throw new Error("not a block: no pmse-block metadata island");
    return validate(JSON.parse(m[1]));
  }
  function parseBlockFromDocument(doc) {
    const island = doc.getElementById("pmse-block");
    if (!island || !island.textContent) {
      throw new Error("not a block: no pmse-block metadata island");
    }
    return validate(JSON.parse(island.textContent));
  }

  // src/cipher.ts
  function tdiv(a, b) {
    return Math.trunc(a / b);
  }
  function keystreamBytes(version, iv, pass1, pass2, n) {
    var _a;
    if (iv.length !== 24) throw new Error(`iv must be 24 bytes, got ${iv.length}`);
    if (pass1.length < 1) throw new Error("pass1 must not be empty");
    if (pass2 !== null && pass2.length < 1) throw new Error("pass2 must not be empty");
    for (let k = 14; k < 19; k++) {
      if (iv[k] < 2) throw new Error(`iv[${k}] < 2 (reinit modulus)`);
    }
    const order2 = version.polynomial === "order2";
    const divisor = order2 ? (_a = version.divisor) != null ? _a : 4 : 1;
    if (divisor < 1) throw new Error(`divisor must be >= 1, got ${divisor}`);
    const selFromX0 = version.selector_source === "x0";
    let x0 = iv[0], x1 = iv[1], x2 = iv[2], x3 = iv[3];
    let xt = iv[7], yn = iv[10], x1prev = iv[1];
    const keys = new Uint8Array(n);
    const selectors = new Uint8Array(n);
    for (let i = 0; i < n; i++) {
      if (order2) {
        yn = Math.imul(Math.imul(i, i), x2) + Math.imul(x1, i) + tdiv(yn, divisor) | 0;
      } else {
        yn = Math.imul(x2, i) + x1 | 0;
      }
      const xd = yn & 255;
      x0 = yn >>> 24 ^ yn >>> 16 & 255 ^ yn >>> 8 & 255 ^ xd;
      x1 = pass1[i % pass1.length];
      x2 = pass2 === null ? x1prev : pass2[(i + x1) % pass2.length];
      x3 = (Math.imul(i, x1) - Math.imul(x3, x2) | 0) % 255;
      xt = (xt ^ x0 ^ x1 ^ x2 ^ x3) & 255;
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
  function rotlMap(r) {
    const m = [];
    for (let k = 0; k < 8; k++) m.push((k - r + 8) % 8);
    return m;
  }
  var V1_MAPS = [rotlMap(4), rotlMap(2), [2, 3, 0, 1, 6, 7, 4, 5], rotlMap(3)];
  function buildCase(bitMap, mask) {
    const forward = new Uint8Array(256);
    const inverse = new Uint8Array(256);
    for (let b = 0; b < 256; b++) {
      let v = 0;
      for (let k = 0; k < 8; k++) v |= (b >> bitMap[k] & 1) << k;
      forward[b] = v ^ mask;
    }
    for (let b = 0; b < 256; b++) inverse[forward[b]] = b;
    return { forward, inverse };
  }
  var BUILTIN_SETS = {
    V1: V1_MAPS.map((m) => buildCase(m, 0)),
    V1C: V1_MAPS.map((m, idx) => buildCase(m, [192, 12, 192, 12][idx]))
  };
  function permutationSet(id) {
    const set = BUILTIN_SETS[id];
    if (!set) throw new Error(`unsupported permutation set '${id}'`);
    return set;
  }
  function decryptBytes(version, iv, pass1, pass2, ciphertext) {
    const set = permutationSet(version.permutation_set);
    const { keys, selectors } = keystreamBytes(version, iv, pass1, pass2, ciphertext.length);
    const out = new Uint8Array(ciphertext.length);
    for (let i = 0; i < ciphertext.length; i++) {
      out[i] = set[selectors[i] % set.length].inverse[ciphertext[i] ^ keys[i]];
    }
    return out;
  }
  function encryptBytes(version, iv, pass1, pass2, plaintext) {
    const set = permutationSet(version.permutation_set);
    const { keys, selectors } = keystreamBytes(version, iv, pass1, pass2, plaintext.length);
    const out = new Uint8Array(plaintext.length);
    for (let i = 0; i < plaintext.length; i++) {
      out[i] = set[selectors[i] % set.length].forward[plaintext[i]] ^ keys[i];
    }
    return out;
  }
  function checksum(data) {
    let cs = 10;
    for (let i = 0; i < data.length; i++) {
      cs = ((cs ^ data[i]) >>> 0) + cs >>> 0;
    }
    return cs;
  }
  function checksumHex(cs) {
    return cs.toString(16).toUpperCase().padStart(8, "0");
  }

  // src/quiz.ts
  var NEXT_MARKER = "\n--- next-block ---\n";
  function payloadIntact(meta) {
    return checksumHex(checksum(base64Decode(meta.payload_b64))) === meta.checksum_hex.toUpperCase();
  }
  function utf8Encode(text) {
    return new TextEncoder().encode(text);
  }
  function utf8DecodeLossy(bytes) {
    return new TextDecoder("utf-8", { fatal: false }).decode(bytes);
  }
  function parseTrailer(text) {
    const at = text.indexOf(NEXT_MARKER);
    if (at < 0) return { body: text, next: null };
    const body = text.slice(0, at);
    const next = { url: "", pass1: null, pass2: null };
    for (const line of text.slice(at + NEXT_MARKER.length).split("\n")) {
      if (line.startsWith("url: ")) next.url = line.slice(5);
      else if (line.startsWith("pass1: ")) next.pass1 = line.slice(7);
      else if (line.startsWith("pass2: ")) next.pass2 = line.slice(7);
    }
    return { body, next: next.url ? next : null };
  }
  function decryptBlock(meta, pass1, pass2) {
    const iv = hexDecode(meta.iv_hex);
    const p1 = utf8Encode(pass1);
    const p2 = meta.version.passwords === 2 ? utf8Encode(pass2 != null ? pass2 : "") : null;
    const ciphertext = base64Decode(meta.payload_b64);
    const bytes = decryptBytes(meta.version, iv, p1, p2, ciphertext);
    const text = utf8DecodeLossy(bytes);
    const reencrypted = encryptBytes(meta.version, iv, p1, p2, utf8Encode(text));
    const badgeOk = checksumHex(checksum(reencrypted)) === meta.checksum_hex.toUpperCase();
    const { body, next } = parseTrailer(text);
    let innerBlock = null;
    if (meta.content_type === "html-block") {
      try {
        innerBlock = parseBlockFromHtml(text);
      } catch (e) {
        innerBlock = null;
      }
    }
    return { bytes, text, body, badgeOk, next, innerBlock };
  }

  // src/main.ts
  function el(id) {
    return document.getElementById(id);
  }
  function render(meta) {
    const pass1 = el("pmse-pass1");
    const pass2 = el("pmse-pass2");
    const pass2Row = el("pmse-pass2-row");
    const button = el("pmse-decrypt");
    const output = el("pmse-output");
    const badge = el("pmse-badge");
    const nextRegion = el("pmse-next");
    const metaRegion = el("pmse-meta");
    if (!pass1 || !button || !output || !badge || !nextRegion) return;
    if (meta.version.passwords === 1 && pass2Row) pass2Row.style.display = "none";
    if (metaRegion) {
      const intact = payloadIntact(meta) ? "intact" : "TAMPERED";
      metaRegion.textContent = `block ${meta.checksum_hex} \xB7 built ${meta.timestamp} \xB7 payload ${intact} \xB7 ${meta.version.polynomial}/${meta.version.permutation_set}`;
    }
    const attempt = () => {
      const outcome = decryptBlock(meta, pass1.value, pass2 ? pass2.value : void 0);
      badge.textContent = outcome.badgeOk ? "checksum ok" : "checksum mismatch";
      badge.className = outcome.badgeOk ? "ok" : "mismatch";
      nextRegion.textContent = "";
      if (meta.content_type === "html-block" && outcome.innerBlock) {
        const enter = document.createElement("button");
        enter.textContent = "open nested block";
        enter.addEventListener("click", () => {
          document.open();
          document.write(outcome.text);
          document.close();
        });
        output.textContent = "decrypted content is itself an encrypted block.";
        output.appendChild(document.createElement("br"));
        output.appendChild(enter);
        return;
      }
      output.textContent = outcome.body;
      if (outcome.next) {
        const a = document.createElement("a");
        a.href = outcome.next.url;
        a.textContent = `continue: ${outcome.next.url}`;
        nextRegion.appendChild(a);
        if (outcome.next.pass1) {
          const hint = document.createElement("div");
          hint.textContent = outcome.next.pass2 ? `next passwords: ${outcome.next.pass1} / ${outcome.next.pass2}` : `next password: ${outcome.next.pass1}`;
          nextRegion.appendChild(hint);
        }
      }
    };
    button.addEventListener("click", attempt);
    const onEnter = (e) => {
      if (e.key === "Enter") attempt();
    };
    pass1.addEventListener("keydown", onEnter);
    if (pass2) pass2.addEventListener("keydown", onEnter);
  }
  function boot() {
    let meta;
    try {
      meta = parseBlockFromDocument(document);
    } catch (err) {
      const output = el("pmse-output");
      if (output) output.textContent = String(err);
      return;
    }
    render(meta);
  }
  if (typeof document !== "undefined") {
    if (document.readyState === "loading") {
      document.addEventListener("DOMContentLoaded", boot);
    } else {
      boot();
    }
  }
})();
