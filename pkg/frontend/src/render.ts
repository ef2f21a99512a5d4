import { fmt3 } from "./format.js";
import { tieGroups } from "./ranking.js";
import {
  ClassifyResult,
  DeviceResult,
  GapResult,
  RankResult,
  TeamResult,
  Violation,
  WhatIfResponse,
} from "./types.js";

function el(tag: string, cls?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function bar(fraction: number, cls = "bar"): HTMLElement {
  const outer = el("div", "bar-outer");
  const inner = el("div", cls);
  inner.style.width = `${Math.max(0, Math.min(1, fraction)) * 100}%`;
  outer.appendChild(inner);
  return outer;
}

/** Ranked table with score bars; rows stay in server order and tied rows
 * merge into one rank cell. */
export function renderRanking(result: RankResult): HTMLElement {
  const table = el("table", "rank-table");
  const head = el("tr");
  for (const h of ["rank", "candidate", "score", ""]) {
    head.appendChild(el("th", undefined, h));
  }
  table.appendChild(head);
  for (const group of tieGroups(result.ranking)) {
    group.rows.forEach((row, i) => {
      const tr = el("tr", group.rows.length > 1 ? "tied" : undefined);
      if (i === 0) {
        const rankCell = el("td", "rank-cell", String(group.rank));
        rankCell.setAttribute("rowspan", String(group.rows.length));
        tr.appendChild(rankCell);
      }
      tr.appendChild(el("td", undefined, row.id));
      tr.appendChild(el("td", "num", fmt3(row.score)));
      const barCell = el("td", "bar-cell");
      barCell.appendChild(bar(row.score));
      tr.appendChild(barCell);
      table.appendChild(tr);
    });
  }
  return table;
}

/** Per-criterion deficit bars plus time-to-ready / reachability badges. */
export function renderGap(result: GapResult): HTMLElement {
  const root = el("div");
  root.appendChild(el(
    "h3", undefined, `${result.profile} → class ${result.class}`));
  const table = el("table", "gap-table");
  const head = el("tr");
  for (const h of ["criterion", "required", "deficit", ""]) {
    head.appendChild(el("th", undefined, h));
  }
  table.appendChild(head);
  const maxRequired = Math.max(1e-9, ...Object.values(result.required));
  for (const cid of Object.keys(result.required).sort()) {
    const deficit = result.deficits[cid];
    const tr = el("tr", deficit === 0 ? "met" : "deficit");
    tr.appendChild(el("td", undefined, cid));
    tr.appendChild(el("td", "num", fmt3(result.required[cid])));
    tr.appendChild(el("td", "num", fmt3(deficit)));
    const cell = el("td", "bar-cell");
    cell.appendChild(bar(deficit / maxRequired,
                         deficit === 0 ? "bar ok" : "bar gap"));
    tr.appendChild(cell);
    table.appendChild(tr);
  }
  root.appendChild(table);
  const badges = el("div", "badges");
  if (result.unreachable) {
    badges.appendChild(el("span", "badge bad", "unreachable"));
    if (result.reachable_with_full_motivation) {
      badges.appendChild(el("span", "badge warn", "reachable at full motivation"));
    }
  } else {
    badges.appendChild(el(
      "span", "badge", `time to ready: ${fmt3(result.time_to_ready ?? 0)} periods`));
  }
  if (result.reachable_within !== undefined) {
    badges.appendChild(el(
      "span",
      result.reachable_within ? "badge ok" : "badge warn",
      result.reachable_within ? "reachable within horizon" : "not within horizon"));
  }
  root.appendChild(badges);
  return root;
}

export function renderTeam(result: TeamResult): HTMLElement {
  const root = el("div");
  root.appendChild(el("h3", undefined, `team: ${result.members.join(", ")}`));
  root.appendChild(el(
    "p", undefined,
    `objective ${fmt3(result.objective)} (${result.method_used})`));
  const table = el("table", "gap-table");
  for (const cid of Object.keys(result.team_vector).sort()) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, cid));
    tr.appendChild(el("td", "num", fmt3(result.team_vector[cid])));
    const cell = el("td", "bar-cell");
    cell.appendChild(bar(result.team_vector[cid]));
    tr.appendChild(cell);
    table.appendChild(tr);
  }
  root.appendChild(table);
  return root;
}

export function renderClassify(result: ClassifyResult): HTMLElement {
  const root = el("div");
  const table = el("table", "rank-table");
  const classes = result.profiles.length > 0
    ? Object.keys(result.profiles[0].degrees).sort()
    : [];
  const head = el("tr");
  head.appendChild(el("th", undefined, "profile"));
  for (const c of classes) head.appendChild(el("th", undefined, c));
  head.appendChild(el("th", undefined, "assigned"));
  table.appendChild(head);
  for (const p of result.profiles) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, p.id));
    for (const c of classes) {
      const td = el("td", p.assigned.includes(c) ? "num member" : "num");
      td.textContent = fmt3(p.degrees[c]);
      tr.appendChild(td);
    }
    tr.appendChild(el("td", undefined, p.assigned.join(", ") || "—"));
    table.appendChild(tr);
  }
  root.appendChild(table);
  if (result.minorities !== undefined) {
    root.appendChild(el(
      "p", "minorities",
      `relevant minorities: ${result.minorities.join(", ") || "none"}`));
  }
  return root;
}

export function renderDevice(result: DeviceResult): HTMLElement {
  const root = el("div");
  root.appendChild(el("h3", undefined, `device: ${result.device}`));
  const table = el("table", "gap-table");
  for (const fid of Object.keys(result.per_function).sort()) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, fid));
    tr.appendChild(el("td", "num", fmt3(result.per_function[fid])));
    const cell = el("td", "bar-cell");
    cell.appendChild(bar(result.per_function[fid]));
    tr.appendChild(cell);
    table.appendChild(tr);
  }
  root.appendChild(table);
  const people = el("p", undefined,
    "utilization: " + Object.keys(result.per_individual).sort()
      .map((pid) => `${pid}=${fmt3(result.per_individual[pid])}`)
      .join("  "));
  root.appendChild(people);
  return root;
}

export function renderResult(resp: WhatIfResponse): HTMLElement {
  switch (resp.analysis) {
    case "rank":
      return renderRanking(resp.result as RankResult);
    case "team":
      return renderTeam(resp.result as TeamResult);
    case "classify":
      return renderClassify(resp.result as ClassifyResult);
    case "gap":
      return renderGap(resp.result as GapResult);
    case "device":
      return renderDevice(resp.result as DeviceResult);
    default:
      return el("p", undefined, `unknown analysis ${resp.analysis}`);
  }
}

export function renderViolations(violations: Violation[]): HTMLElement {
  const list = el("ul", "violations");
  for (const v of violations) {
    list.appendChild(el("li", undefined, `[${v.rule}] ${v.subject}: ${v.message}`));
  }
  return list;
}
