import {
  ValidationFailure,
  fetchShapley,
  fetchWorkspace,
  postDeviceCoverage,
  postWhatIf,
  whatIfBody,
} from "./api.js";
import { debounce } from "./debounce.js";
import { LatestGate } from "./latest.js";
import { renderResult, renderViolations } from "./render.js";
import {
  Tab,
  UiState,
  applyNetworkError,
  applySuccess,
  applyValidationError,
  initialState,
  pairKey,
} from "./state.js";
import { WorkspaceSummary } from "./types.js";

const REFRESH_MS = 150;

const TABS: { id: Tab; label: string }[] = [
  { id: "rank", label: "Ranking" },
  { id: "team", label: "Team" },
  { id: "classes", label: "Classes" },
  { id: "gaps", label: "Gaps" },
  { id: "device", label: "Device" },
];

let state: UiState;
let workspace: WorkspaceSummary;
const gate = new LatestGate();

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

async function refresh(): Promise<void> {
  const tab = state.view.tab;
  const seq = gate.issue();
  try {
    const resp = tab === "device"
      ? await postDeviceCoverage(state.view.device ?? "", state.view.horizon)
      : await postWhatIf(whatIfBody(state.draft, state.view));
    if (!gate.accept(seq)) return;
    state = applySuccess(state, tab, resp);
  } catch (err) {
    if (!gate.accept(seq)) return;
    state = err instanceof ValidationFailure
      ? applyValidationError(state, err.body.violations)
      : applyNetworkError(state, `request failed: ${(err as Error).message}`);
  }
  paint();
}

const debouncedRefresh = debounce(() => void refresh(), REFRESH_MS);

function paint(): void {
  const banner = $("banner");
  banner.textContent = state.banner ?? "";
  banner.style.display = state.banner ? "block" : "none";

  const errors = $("errors");
  errors.replaceChildren();
  if (state.violations.length > 0) {
    errors.appendChild(renderViolations(state.violations));
  }

  const output = $("output");
  const shown = state.lastGood[state.view.tab];
  output.replaceChildren();
  if (shown) output.appendChild(renderResult(shown));

  for (const { id } of TABS) {
    $(`tab-${id}`).classList.toggle("active", state.view.tab === id);
  }
  $("controls-team").style.display = state.view.tab === "team" ? "" : "none";
  $("controls-classes").style.display = state.view.tab === "classes" ? "" : "none";
  $("controls-gaps").style.display = state.view.tab === "gaps" ? "" : "none";
  $("controls-device").style.display = state.view.tab === "device" ? "" : "none";
  $("sliders").style.display =
    state.view.tab === "rank" || state.view.tab === "team" ? "" : "none";
}

function slider(
  label: string, min: number, max: number, step: number, value: number,
  onInput: (v: number) => void,
): HTMLElement {
  const row = document.createElement("label");
  row.className = "slider-row";
  const name = document.createElement("span");
  name.textContent = label;
  const input = document.createElement("input");
  input.type = "range";
  input.min = String(min);
  input.max = String(max);
  input.step = String(step);
  input.value = String(value);
  const readout = document.createElement("span");
  readout.className = "readout";
  readout.textContent = value.toFixed(2);
  input.addEventListener("input", () => {
    const v = Number(input.value);
    readout.textContent = v.toFixed(2);
    onInput(v);
    debouncedRefresh();
  });
  row.append(name, input, readout);
  return row;
}

function buildSliders(): void {
  const host = $("sliders");
  host.replaceChildren();
  const ids = workspace.criteria.map((c) => c.id);
  const importance = document.createElement("fieldset");
  importance.appendChild(Object.assign(
    document.createElement("legend"), { textContent: "importance (Shapley)" }));
  for (const cid of ids) {
    importance.appendChild(slider(
      cid, 0, 1, 0.01, state.draft.shapley[cid],
      (v) => { state.draft.shapley[cid] = v; }));
  }
  host.appendChild(importance);
  const synergy = document.createElement("fieldset");
  synergy.appendChild(Object.assign(
    document.createElement("legend"), { textContent: "synergy (interaction)" }));
  for (let i = 0; i < ids.length; i++) {
    for (let j = i + 1; j < ids.length; j++) {
      const key = pairKey(ids[i], ids[j]);
      synergy.appendChild(slider(
        `${ids[i]} × ${ids[j]}`, -1, 1.5, 0.01,
        state.draft.interactions[key] ?? 0,
        (v) => { state.draft.interactions[key] = v; }));
    }
  }
  host.appendChild(synergy);
}

function select(id: string, options: string[], onChange: (v: string) => void): void {
  const node = $(id) as HTMLSelectElement;
  node.replaceChildren();
  for (const opt of options) {
    node.appendChild(Object.assign(
      document.createElement("option"), { value: opt, textContent: opt }));
  }
  node.addEventListener("change", () => {
    onChange(node.value);
    debouncedRefresh();
  });
}

function wireControls(): void {
  const horizon = $("horizon") as HTMLInputElement;
  horizon.addEventListener("input", () => {
    state.view.horizon = Math.max(0, Number(horizon.value) || 0);
    $("horizon-readout").textContent = String(state.view.horizon);
    debouncedRefresh();
  });

  for (const { id } of TABS) {
    $(`tab-${id}`).addEventListener("click", () => {
      state.view.tab = id;
      paint();
      void refresh();
    });
  }

  const teamK = $("team-k") as HTMLInputElement;
  teamK.max = String(Math.max(1, workspace.population.length));
  teamK.addEventListener("input", () => {
    state.view.teamK = Math.max(1, Number(teamK.value) || 1);
    debouncedRefresh();
  });
  const combine = $("team-combine") as HTMLSelectElement;
  combine.addEventListener("change", () => {
    state.view.teamCombine = combine.value as "coverage" | "mean";
    debouncedRefresh();
  });

  select("classes-model", workspace.class_models,
         (v) => { state.view.model = v; });
  select("gaps-model", workspace.class_models, (v) => {
    state.view.model = v;
    seedClassOptions(v);
  });
  select("gaps-profile", workspace.population,
         (v) => { state.view.profileId = v; });
  select("device-name", workspace.devices, (v) => { state.view.device = v; });
  select("gaps-class", [], (v) => { state.view.classId = v; });
  if (state.view.model) seedClassOptions(state.view.model);
}

function seedClassOptions(model: string): void {
  const classes = workspace.model_classes[model] ?? [];
  const node = $("gaps-class") as HTMLSelectElement;
  node.replaceChildren();
  for (const cid of classes) {
    node.appendChild(Object.assign(
      document.createElement("option"), { value: cid, textContent: cid }));
  }
  state.view.classId = classes[0] ?? null;
}

async function seedDraftFromServer(): Promise<void> {
  if (workspace.capacities.length === 0) return;
  const name = workspace.capacities.includes("default")
    ? "default" : workspace.capacities[0];
  const view = await fetchShapley(name);
  state.draft.shapley = { ...view.shapley };
  for (const [a, b, v] of view.interactions) {
    state.draft.interactions[pairKey(a, b)] = v;
  }
}

async function init(): Promise<void> {
  workspace = await fetchWorkspace();
  state = initialState(workspace.criteria.map((c) => c.id));
  state.view.model = workspace.class_models[0] ?? null;
  state.view.device = workspace.devices[0] ?? null;
  state.view.profileId = workspace.population[0] ?? null;
  try {
    await seedDraftFromServer();
  } catch {
    // fall back to the uniform draft
  }
  buildSliders();
  wireControls();
  paint();
  void refresh();
}

void init();
