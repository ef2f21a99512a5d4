import { Violation, WhatIfResponse } from "./types.js";

export type Tab = "rank" | "team" | "classes" | "gaps" | "device";

/** Draft capacity in Shapley form: slider values are sent verbatim to the
 * server for validation; nothing is clamped client-side. */
export interface DraftCapacity {
  shapley: Record<string, number>;
  interactions: Record<string, number>; // key "a|b" with a < b
}

export interface ViewState {
  tab: Tab;
  horizon: number;
  teamK: number;
  teamCombine: "coverage" | "mean";
  model: string | null;
  classId: string | null;
  profileId: string | null;
  device: string | null;
  minorities: boolean;
}

export interface UiState {
  draft: DraftCapacity;
  view: ViewState;
  // last good result per tab; kept on errors so the screen never blanks
  lastGood: Partial<Record<Tab, WhatIfResponse>>;
  violations: Violation[];
  banner: string | null;
  pending: boolean;
}

export function pairKey(a: string, b: string): string {
  return a < b ? `${a}|${b}` : `${b}|${a}`;
}

export function initialState(criteria: string[]): UiState {
  const shapley: Record<string, number> = {};
  for (const id of criteria) shapley[id] = 1 / criteria.length;
  const interactions: Record<string, number> = {};
  for (let i = 0; i < criteria.length; i++) {
    for (let j = i + 1; j < criteria.length; j++) {
      interactions[pairKey(criteria[i], criteria[j])] = 0;
    }
  }
  return {
    draft: { shapley, interactions },
    view: {
      tab: "rank",
      horizon: 0,
      teamK: 2,
      teamCombine: "coverage",
      model: null,
      classId: null,
      profileId: null,
      device: null,
      minorities: true,
    },
    lastGood: {},
    violations: [],
    banner: null,
    pending: false,
  };
}

/** Record a successful response: it becomes the tab's display state and
 * clears any error banner or violation list. */
export function applySuccess(state: UiState, tab: Tab, resp: WhatIfResponse): UiState {
  return {
    ...state,
    lastGood: { ...state.lastGood, [tab]: resp },
    violations: [],
    banner: null,
    pending: false,
  };
}

/** Record a validation failure: violations are shown, the last good
 * result of the tab stays visible. */
export function applyValidationError(state: UiState, violations: Violation[]): UiState {
  return { ...state, violations, banner: null, pending: false };
}

/** Record a network failure: banner up, everything else retained. */
export function applyNetworkError(state: UiState, message: string): UiState {
  return { ...state, banner: message, pending: false };
}
