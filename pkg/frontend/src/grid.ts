// Judgment grid view data: one control per unordered sibling pair at a
// node, plus the node's consistency badge from the latest analysis.

import { badgeColor, pct } from "./format.js";
import { nodeAt, orientedValue, pairMembers } from "./model.js";
import type { AnalysisDoc, ModelDoc } from "./types.js";

export interface PairControl {
  left: string;
  right: string;
  // Current ratio of left over right, as an exact token ("3", "1/7").
  ratio: string | null;
}

export interface ConsistencyBadge {
  text: string; // e.g. "18.4%"
  color: "green" | "amber" | "red";
}

export interface JudgmentGridView {
  path: string[];
  title: string;
  // What the pairs range over, for column headers.
  members: string[];
  comparesAlternatives: boolean;
  pairs: PairControl[];
  badge: ConsistencyBadge | null;
}

export function badgeFor(analysis: AnalysisDoc | null,
                         path: string[]): ConsistencyBadge | null {
  if (!analysis) return null;
  const key = path.join("/");
  const row = analysis.rows.find((r) => r.path.join("/") === key);
  if (!row) return null;
  return {
    text: pct(row.consistency.consistency_ratio),
    color: badgeColor(row.consistency.status),
  };
}

export function buildGrid(model: ModelDoc, analysis: AnalysisDoc | null,
                          path: string[]): JudgmentGridView {
  const node = nodeAt(model, path);
  const members = pairMembers(model, node);
  const pairs: PairControl[] = [];
  for (let i = 0; i < members.length; i++) {
    for (let j = i + 1; j < members.length; j++) {
      const left = members[i];
      const right = members[j];
      const stored = node.judgments
        .map((judgment) => orientedValue(judgment, left, right))
        .find((v) => v !== null);
      pairs.push({ left, right, ratio: stored ?? null });
    }
  }
  return {
    path,
    title: node.name,
    members,
    comparesAlternatives: node.children === "alternatives",
    pairs,
    badge: badgeFor(analysis, path),
  };
}
