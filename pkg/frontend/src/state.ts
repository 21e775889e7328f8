/** Client view state: form fields, the last document, and derived texts. */

import type { ComparisonDocument, HueName, UnitMode } from "./types.js";

export interface ViewState {
  prompt: string;
  samples: number;
  unit: UnitMode;
  hue: HueName;
  document: ComparisonDocument | null;
  rawSolutions: string[];
  busy: boolean;
  error: string;
}

export function initialState(): ViewState {
  return {
    prompt: "",
    samples: 5,
    unit: "char",
    hue: "blue",
    document: null,
    rawSolutions: [],
    busy: false,
    error: "",
  };
}

/** Each solution's raw text, recovered by concatenating its span texts. */
export function rawTexts(document: ComparisonDocument): string[] {
  return document.solutions.map((solution) =>
    solution.spans.map((span) => span.text).join(""),
  );
}
