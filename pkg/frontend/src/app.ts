/** Form wiring: submit a prompt, switch unit/hue in place, download JSON. */

import { ApiError, compare, promptPayload, solutionsPayload } from "./api.js";
import { renderPanels } from "./panels.js";
import { initialState, rawTexts, type ViewState } from "./state.js";
import type { HueName, UnitMode } from "./types.js";

interface Elements {
  form: HTMLFormElement;
  prompt: HTMLTextAreaElement;
  samples: HTMLInputElement;
  unit: HTMLSelectElement;
  hue: HTMLSelectElement;
  submit: HTMLButtonElement;
  download: HTMLButtonElement;
  banner: HTMLElement;
  status: HTMLElement;
  panels: HTMLElement;
}

function grab(page: Document): Elements {
  const byId = <T extends HTMLElement>(id: string): T => {
    const el = page.getElementById(id);
    if (!el) {
      throw new Error(`missing #${id}`);
    }
    return el as T;
  };
  return {
    form: byId<HTMLFormElement>("compare-form"),
    prompt: byId<HTMLTextAreaElement>("prompt"),
    samples: byId<HTMLInputElement>("samples"),
    unit: byId<HTMLSelectElement>("unit"),
    hue: byId<HTMLSelectElement>("hue"),
    submit: byId<HTMLButtonElement>("submit"),
    download: byId<HTMLButtonElement>("download"),
    banner: byId<HTMLElement>("banner"),
    status: byId<HTMLElement>("status"),
    panels: byId<HTMLElement>("panels"),
  };
}

export function initApp(page: Document): void {
  const els = grab(page);
  let state: ViewState = initialState();

  function sync(): void {
    els.submit.disabled = state.busy;
    els.download.disabled = state.busy || state.document === null;
    els.status.hidden = !state.busy;
    els.banner.hidden = state.error === "";
    els.banner.textContent = state.error;
  }

  async function runCompare(payload: object): Promise<void> {
    if (state.busy) {
      return;
    }
    state = { ...state, busy: true, error: "" };
    sync();
    try {
      const document = await compare(payload);
      state = {
        ...state,
        document,
        rawSolutions: rawTexts(document),
        busy: false,
      };
      renderPanels(els.panels, document);
    } catch (error) {
      // Keep the previous panels; the failure only reaches the banner.
      const message =
        error instanceof ApiError ? error.message : "unexpected client error";
      state = { ...state, busy: false, error: message };
    }
    sync();
  }

  els.form.addEventListener("submit", (event) => {
    event.preventDefault();
    state = {
      ...state,
      prompt: els.prompt.value,
      samples: Number(els.samples.value) || 5,
      unit: els.unit.value as UnitMode,
      hue: els.hue.value as HueName,
    };
    if (state.prompt.trim() === "") {
      state = { ...state, error: "enter a prompt first" };
      sync();
      return;
    }
    void runCompare(promptPayload(state));
  });

  function recompareInPlace(): void {
    state = {
      ...state,
      unit: els.unit.value as UnitMode,
      hue: els.hue.value as HueName,
    };
    if (state.rawSolutions.length > 0) {
      void runCompare(
        solutionsPayload({
          solutions: state.rawSolutions,
          unit: state.unit,
          hue: state.hue,
        }),
      );
    }
  }

  els.unit.addEventListener("change", recompareInPlace);
  els.hue.addEventListener("change", recompareInPlace);

  els.download.addEventListener("click", () => {
    if (state.document === null) {
      return;
    }
    const blob = new Blob([JSON.stringify(state.document, null, 2)], {
      type: "application/json",
    });
    const url = URL.createObjectURL(blob);
    const anchor = page.createElement("a");
    anchor.href = url;
    anchor.download = "comparison.json";
    anchor.click();
    URL.revokeObjectURL(url);
  });

  sync();
}
