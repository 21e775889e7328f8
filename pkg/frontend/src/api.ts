/** Requests against the comparison service. */

import type { ComparisonDocument, HueName, UnitMode } from "./types.js";

export interface PromptOptions {
  prompt: string;
  samples: number;
  unit: UnitMode;
  hue: HueName;
}

export interface SolutionsOptions {
  solutions: string[];
  unit: UnitMode;
  hue: HueName;
}

export class ApiError extends Error {}

/** Body for the generate-then-compare flow (asks the provider for samples). */
export function promptPayload(options: PromptOptions): object {
  return {
    prompt: options.prompt,
    samples: options.samples,
    unit: options.unit,
    hue: options.hue,
  };
}

/** Body for re-comparing texts already in hand; never contains a prompt. */
export function solutionsPayload(options: SolutionsOptions): object {
  return {
    solutions: options.solutions,
    unit: options.unit,
    hue: options.hue,
  };
}

export async function compare(
  payload: object,
  fetchImpl: typeof fetch = fetch,
): Promise<ComparisonDocument> {
  let response: Response;
  try {
    response = await fetchImpl("/api/compare", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  } catch {
    throw new ApiError("could not reach the comparison service");
  }
  if (!response.ok) {
    throw new ApiError(await errorDetail(response));
  }
  return (await response.json()) as ComparisonDocument;
}

async function errorDetail(response: Response): Promise<string> {
  const fallback = `request failed (${response.status})`;
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string" && body.detail) {
      return body.detail;
    }
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return fallback;
}
