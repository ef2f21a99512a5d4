import { RankRow } from "./types.js";

export interface TieGroup {
  rank: number;
  rows: RankRow[];
}

/**
 * Group server-ordered ranking rows by their server-assigned rank. Rows
 * are never re-sorted client-side; tied rows (same rank) merge into one
 * visual group.
 */
export function tieGroups(rows: RankRow[]): TieGroup[] {
  const groups: TieGroup[] = [];
  for (const row of rows) {
    const last = groups[groups.length - 1];
    if (last !== undefined && last.rank === row.rank) {
      last.rows.push(row);
    } else {
      groups.push({ rank: row.rank, rows: [row] });
    }
  }
  return groups;
}
