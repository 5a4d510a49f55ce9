// Results view data: the published-style table (Weight, one column per
// alternative, Consistency; one-decimal percentages; two spaces of indent
// per depth below the categories), ranked alternatives, and evidence chips.
// Every number comes straight from an analyze payload.

import { badgeColor, pct } from "./format.js";
import type { AnalysisDoc, MetricRecordDoc } from "./types.js";

export interface ResultsTable {
  header: string[];
  // One row per node: [name, weight, ...alternatives, consistency].
  cells: string[][];
  badges: ("green" | "amber" | "red")[];
}

export function buildResultsTable(analysis: AnalysisDoc): ResultsTable {
  const alternatives = Object.keys(analysis.alternative_totals);
  const header = ["", "Weight", ...alternatives, "Consistency"];
  const cells: string[][] = [];
  const badges: ("green" | "amber" | "red")[] = [];
  for (const row of analysis.rows) {
    const indent = "  ".repeat(Math.max(row.depth - 1, 0));
    cells.push([
      indent + row.name,
      pct(row.global_weight),
      ...alternatives.map((alt) => pct(row.per_alternative_weight[alt])),
      pct(row.consistency.consistency_ratio),
    ]);
    badges.push(badgeColor(row.consistency.status));
  }
  return { header, cells, badges };
}

export interface RankedRow {
  position: number;
  alternative: string;
  weight: string;
  leading: boolean;
}

export function buildRanking(analysis: AnalysisDoc): RankedRow[] {
  return analysis.ranking.map((entry, index) => ({
    position: index + 1,
    alternative: entry.alternative,
    weight: pct(entry.weight),
    leading: index === 0,
  }));
}

// Evidence chips keyed by leaf criterion name, e.g.
// "OLD 86-92% | NEW 91-93% (% of successes)".
export function evidenceByAttribute(metrics: MetricRecordDoc[]): Map<string, string> {
  const chips = new Map<string, string>();
  for (const record of metrics) {
    const parts: string[] = [];
    for (const [alt, value] of Object.entries(record.values)) {
      if (value.rate !== undefined) {
        parts.push(`${alt} ${(value.rate * 100).toFixed(0)}%`);
      } else if (value.low !== undefined && value.high !== undefined) {
        parts.push(`${alt} ${(value.low * 100).toFixed(0)}-${(value.high * 100).toFixed(0)}%`);
      } else if (value.mean !== undefined) {
        parts.push(`${alt} ${value.mean}±${value.stddev}`);
      }
    }
    chips.set(record.attribute, `${parts.join(" | ")} (${record.metric_name})`);
  }
  return chips;
}
