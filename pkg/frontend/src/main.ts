/**
 * DOM wiring for a block page. The page skeleton (inputs, button, output,
 * badge, next-link region) ships in the block template; this script reads
 * the metadata island, hides the second password field for one-password
 * blocks, and renders decryption outcomes. No network access: everything
 * happens in the page, navigation to the next block is a plain link.
 */

import { parseBlockFromDocument, BlockMeta } from "./block";
import { decryptBlock, payloadIntact } from "./quiz";

function el<T extends HTMLElement>(id: string): T | null {
  return document.getElementById(id) as T | null;
}

function render(meta: BlockMeta): void {
  const pass1 = el<HTMLInputElement>("pmse-pass1");
  const pass2 = el<HTMLInputElement>("pmse-pass2");
  const pass2Row = el<HTMLElement>("pmse-pass2-row");
  const button = el<HTMLButtonElement>("pmse-decrypt");
  const output = el<HTMLElement>("pmse-output");
  const badge = el<HTMLElement>("pmse-badge");
  const nextRegion = el<HTMLElement>("pmse-next");
  const metaRegion = el<HTMLElement>("pmse-meta");
  if (!pass1 || !button || !output || !badge || !nextRegion) return;

  if (meta.version.passwords === 1 && pass2Row) pass2Row.style.display = "none";
  if (metaRegion) {
    const intact = payloadIntact(meta) ? "intact" : "TAMPERED";
    metaRegion.textContent =
      `block ${meta.checksum_hex} · built ${meta.timestamp} · payload ${intact} · ` +
      `${meta.version.polynomial}/${meta.version.permutation_set}`;
  }

  const attempt = () => {
    const outcome = decryptBlock(meta, pass1.value, pass2 ? pass2.value : undefined);
    badge.textContent = outcome.badgeOk ? "checksum ok" : "checksum mismatch";
    badge.className = outcome.badgeOk ? "ok" : "mismatch";
    nextRegion.textContent = "";

    if (meta.content_type === "html-block" && outcome.innerBlock) {
      // russian doll: the decrypted bytes are a complete block page;
      // replace this document so the nested block's own decryptor boots
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

    // garbage from a wrong password is rendered as-is, retry is just
    // typing again
    output.textContent = outcome.body;
    if (outcome.next) {
      const a = document.createElement("a");
      a.href = outcome.next.url;
      a.textContent = `continue: ${outcome.next.url}`;
      nextRegion.appendChild(a);
      if (outcome.next.pass1) {
        const hint = document.createElement("div");
        hint.textContent = outcome.next.pass2
          ? `next passwords: ${outcome.next.pass1} / ${outcome.next.pass2}`
          : `next password: ${outcome.next.pass1}`;
        nextRegion.appendChild(hint);
      }
    }
  };

  button.addEventListener("click", attempt);
  const onEnter = (e: KeyboardEvent) => {
    if (e.key === "Enter") attempt();
  };
  pass1.addEventListener("keydown", onEnter);
  if (pass2) pass2.addEventListener("keydown", onEnter);
}

export function boot(): void {
  let meta: BlockMeta;
  try {
    meta = parseBlockFromDocument(document);
  } catch (err) {
    const output = el<HTMLElement>("pmse-output");
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
