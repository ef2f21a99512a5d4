import { DraftCapacity, Tab, ViewState } from "./state.js";
import {
  ApiError,
  ShapleyResponse,
  WhatIfResponse,
  WorkspaceSummary,
} from "./types.js";

const BASE = "/api/v1";

export class ValidationFailure extends Error {
  constructor(public readonly body: ApiError) {
    super(body.error);
  }
}

async function getJson<T>(path: string): Promise<T> {
  const res = await fetch(`${BASE}${path}`);
  if (!res.ok) throw new Error(`GET ${path} failed: ${res.status}`);
  return res.json() as Promise<T>;
}

export function fetchWorkspace(): Promise<WorkspaceSummary> {
  return getJson<WorkspaceSummary>("/workspace");
}

export function fetchShapley(name: string): Promise<ShapleyResponse> {
  return getJson<ShapleyResponse>(`/capacities/${encodeURIComponent(name)}/shapley`);
}

/** Build the /whatif body for the active tab from the slider draft. */
export function whatIfBody(draft: DraftCapacity, view: ViewState): object {
  const interactions = Object.entries(draft.interactions)
    .filter(([, v]) => v !== 0)
    .map(([key, v]) => [...key.split("|"), v]);
  const capacity = {
    shapley: { shapley: draft.shapley, interactions },
  };
  const analysis = analysisFor(view);
  const needsCapacity = ["rank", "team"].includes(view.tab);
  return needsCapacity
    ? { horizon: view.horizon, shapley: capacity.shapley, analysis }
    : { horizon: view.horizon, analysis };
}

function analysisFor(view: ViewState): object {
  switch (view.tab) {
    case "rank":
      return { type: "rank" };
    case "team":
      return { type: "team", k: view.teamK, combine: view.teamCombine };
    case "classes":
      return { type: "classify", model: view.model, minorities: view.minorities };
    case "gaps":
      return {
        type: "gap",
        model: view.model,
        class: view.classId,
        profile: view.profileId,
      };
    case "device":
      throw new Error("device coverage uses its own endpoint");
  }
}

export async function postWhatIf(body: object): Promise<WhatIfResponse> {
  return postJson<WhatIfResponse>("/whatif", body);
}

/** Device coverage has no capacity dimension; call its endpoint directly. */
export async function postDeviceCoverage(
  device: string,
  horizon: number,
): Promise<WhatIfResponse> {
  const result = await postJson<object>("/device-coverage", { device, horizon });
  return { analysis: "device", result } as WhatIfResponse;
}

async function postJson<T>(path: string, body: object): Promise<T> {
  const res = await fetch(`${BASE}${path}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (res.status === 400 || res.status === 404) {
    throw new ValidationFailure((await res.json()) as ApiError);
  }
  if (!res.ok) throw new Error(`POST ${path} failed: ${res.status}`);
  return res.json() as Promise<T>;
}

export type { Tab };
