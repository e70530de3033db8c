// @vitest-environment happy-dom
//
// Drives the real DOM wiring against a block page built by the reference
// CLI: type passwords, click decrypt, read the output and badge exactly as
// a user would. innerHTML does not execute the inlined scripts, so boot()
// is invoked directly.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeEach, describe, expect, it } from "vitest";

import { boot } from "../src/main";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

function loadPage(relative: string): void {
  const html = readFileSync(join(FIXTURES, relative), "utf-8");
  const body = /<body>([\s\S]*)<\/body>/.exec(html);
  document.body.innerHTML = body ? body[1] : html;
}

function ui() {
  return {
    pass1: document.getElementById("pmse-pass1") as HTMLInputElement,
    pass2: document.getElementById("pmse-pass2") as HTMLInputElement,
    pass2Row: document.getElementById("pmse-pass2-row") as HTMLElement,
    button: document.getElementById("pmse-decrypt") as HTMLButtonElement,
    output: document.getElementById("pmse-output") as HTMLElement,
    badge: document.getElementById("pmse-badge") as HTMLElement,
    next: document.getElementById("pmse-next") as HTMLElement,
    meta: document.getElementById("pmse-meta") as HTMLElement,
  };
}

describe("block page wiring", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("decrypts in place with the right answer and flags wrong ones", () => {
    loadPage(join("chain_quiz", "block_0.html"));
    boot();
    const page = ui();
    expect(page.pass2Row.style.display).toBe("none"); // one-password block
    expect(page.meta.textContent).toContain("payload intact");

    page.pass1.value = "not-the-answer";
    page.button.click();
    expect(page.badge.className).toBe("mismatch");
    expect(page.output.textContent).not.toContain("clue one");

    // retrying is just typing again
    page.pass1.value = "open";
    page.button.click();
    expect(page.badge.className).toBe("ok");
    expect(page.output.textContent).toContain("clue one");
    expect(page.next.textContent).toContain("block_1.html");
    const link = page.next.querySelector("a");
    expect(link?.getAttribute("href")).toBe("block_1.html");
  });

  it("renders a two-password block and keeps both fields", () => {
    loadPage(join("chain_quiz", "block_1.html"));
    boot();
    const page = ui();
    expect(page.pass2Row.style.display).not.toBe("none");
    page.pass1.value = "sesame";
    page.pass2.value = "sesame2";
    page.button.click();
    expect(page.badge.className).toBe("ok");
    expect(page.output.textContent).toContain("clue two");
  });

  it("offers to open a russian-doll nested block", () => {
    loadPage("russian_doll.html");
    boot();
    const page = ui();
    page.pass1.value = "outer-key";
    page.button.click();
    expect(page.badge.className).toBe("ok");
    expect(page.output.textContent).toContain("itself an encrypted block");
    expect(page.output.querySelector("button")).not.toBeNull();
  });

  it("reports non-block documents instead of crashing", () => {
    document.body.innerHTML = '<div id="pmse-output"></div>';
    boot();
    expect(document.getElementById("pmse-output")!.textContent)
      .toContain("not a block");
  });
});
