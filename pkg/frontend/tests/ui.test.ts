/**
 * DOM smoke tests for the rendering layer, run under happy-dom.
 *
 * @vitest-environment happy-dom
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeEach, describe, expect, it } from "vitest";

import { loadDocument } from "../src/state.js";
import { App, showError } from "../src/ui.js";

// happy-dom replaces the global URL, so resolve the fixture path via node:url
const documentBytes = readFileSync(
  join(dirname(fileURLToPath(import.meta.url)), "fixtures", "socmed.factors.json"),
  "utf-8"
);

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
});

function renderApp(): App {
  const app = new App(root, loadDocument(documentBytes));
  app.render();
  return app;
}

describe("App rendering", () => {
  it("renders one range input per factor with tick count + 1 stops", () => {
    renderApp();
    const state = loadDocument(documentBytes);
    const inputs = root.querySelectorAll<HTMLInputElement>('input[type="range"]');
    expect(inputs.length).toBe(state.document.factors.length);
    inputs.forEach((input, i) => {
      expect(Number(input.min)).toBe(0);
      expect(Number(input.max)).toBe(state.document.factors[i].ticks.length);
      expect(input.value).toBe("0");
    });
  });

  it("renders every object row with distance zero initially", () => {
    renderApp();
    const rows = root.querySelectorAll(".ranking tbody tr");
    expect(rows.length).toBe(10);
    rows.forEach((row) => {
      expect(row.children[1].textContent).toBe("0");
    });
  });

  it("keeps the full tick text reachable via the title attribute", () => {
    renderApp();
    const labels = root.querySelectorAll<HTMLElement>(".tick-label:not(.zero)");
    expect(labels.length).toBeGreaterThan(0);
    labels.forEach((label) => {
      expect(label.title.length).toBeGreaterThan(0);
      // visible text is the title or a truncated prefix of it
      const visible = label.textContent ?? "";
      expect(
        visible === label.title ||
          label.title.startsWith(visible.replace(/…$/, ""))
      ).toBe(true);
    });
  });

  it("re-ranks when an object row is clicked", () => {
    renderApp();
    const rows = root.querySelectorAll<HTMLElement>(".ranking tbody tr");
    const twitter = Array.from(rows).find(
      (row) => row.children[0].textContent === "Twitter"
    )!;
    twitter.dispatchEvent(new Event("click"));
    const selected = root.querySelector(".ranking tbody tr.selected");
    expect(selected?.children[0].textContent).toBe("Twitter");
    expect(selected?.children[1].textContent).toBe("0");
    // sliders moved off zero for at least one factor
    const values = Array.from(
      root.querySelectorAll<HTMLInputElement>('input[type="range"]')
    ).map((i) => Number(i.value));
    expect(Math.max(...values)).toBeGreaterThan(0);
  });

  it("renders the scatter with one dot per object", () => {
    renderApp();
    expect(root.querySelectorAll(".scatter circle").length).toBe(10);
  });

  it("filters the ranking with the search box", () => {
    renderApp();
    const search = root.querySelector<HTMLInputElement>('input[type="search"]')!;
    search.value = "red";
    search.dispatchEvent(new Event("input"));
    const rows = root.querySelectorAll(".ranking tbody tr");
    expect(rows.length).toBe(1);
    expect(rows[0].children[0].textContent).toBe("Reddit");
  });
});

describe("showError", () => {
  it("replaces content with a banner and nothing else", () => {
    showError(root, "Cannot load document: broken");
    expect(root.children.length).toBe(1);
    expect(root.querySelector(".error-banner")?.textContent).toContain("broken");
  });
});
