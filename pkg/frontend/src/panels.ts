/** Solution panel rendering: one <section> per solution, side by side. */

import type { ComparisonDocument } from "./types.js";

/**
 * Replace `container`'s contents with one panel per solution.
 *
 * Every span's color is applied verbatim from the document — the client
 * never recomputes colors from scores.
 */
export function renderPanels(
  container: HTMLElement,
  document: ComparisonDocument,
): void {
  const page = container.ownerDocument;
  container.replaceChildren();
  for (const solution of document.solutions) {
    const panel = page.createElement("section");
    panel.className = "panel";

    const title = page.createElement("h2");
    title.textContent = `solution ${solution.index + 1}`;
    panel.appendChild(title);

    const body = page.createElement("pre");
    body.className = "solution";
    for (const span of solution.spans) {
      const el = page.createElement("span");
      el.textContent = span.text;
      el.style.color = span.color;
      el.dataset.score = String(span.score);
      body.appendChild(el);
    }
    panel.appendChild(body);
    container.appendChild(panel);
  }
}
