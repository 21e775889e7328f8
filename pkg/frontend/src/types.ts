/** Wire types for the comparison service's JSON API. */

export type UnitMode = "char" | "token" | "line";
export type HueName = "blue" | "red" | "green";

export interface HighlightSpan {
  /** Raw text of the span; a solution's spans concatenate to its full text. */
  text: string;
  /** How many of the other solutions do not contain this span: 0 … n-1. */
  score: number;
  /** Lowercase #rrggbb, already mapped from the score; never recomputed here. */
  color: string;
}

export interface SolutionPanel {
  index: number;
  spans: HighlightSpan[];
}

export interface ComparisonDocument {
  schema: number;
  prompt: string | null;
  n: number;
  mode: UnitMode;
  hue: HueName;
  solutions: SolutionPanel[];
}
