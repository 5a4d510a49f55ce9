// Number and badge presentation. All weights arrive raw from the API;
// the UI renders one-decimal percentages like the published results table.

import type { ConsistencyStatus } from "./types.js";

export function pct(weight: number): string {
  return `${(weight * 100).toFixed(1)}%`;
}

export function signedPct(shift: number): string {
  const text = (shift * 100).toFixed(1);
  return shift >= 0 ? `+${text}%` : `${text}%`;
}

// Badge color by consistency band: the server's status field is
// authoritative, so the boundaries can never drift from the engine's.
export function badgeColor(status: ConsistencyStatus): "green" | "amber" | "red" {
  switch (status) {
    case "IDEAL":
      return "green";
    case "ACCEPTABLE":
      return "amber";
    case "INCONSISTENT":
      return "red";
  }
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
