// The judgment scale control: nine ordered choices from "left vastly more
// important" (9) down through equal (1) to "right vastly more important"
// (1/9). Selecting a left-favoring step k stores (left, right, k); a
// right-favoring step stores the reciprocal form (left, right, 1/k).

export interface ScaleChoice {
  // Exact ratio token stored in the model for (left, right).
  ratio: string;
  // Which side the choice favors; "equal" for 1.
  favors: "left" | "equal" | "right";
  // Magnitude label (9, 7, 5, 3, 1).
  step: number;
}

export const SCALE_CHOICES: ScaleChoice[] = [
  { ratio: "9", favors: "left", step: 9 },
  { ratio: "7", favors: "left", step: 7 },
  { ratio: "5", favors: "left", step: 5 },
  { ratio: "3", favors: "left", step: 3 },
  { ratio: "1", favors: "equal", step: 1 },
  { ratio: "1/3", favors: "right", step: 3 },
  { ratio: "1/5", favors: "right", step: 5 },
  { ratio: "1/7", favors: "right", step: 7 },
  { ratio: "1/9", favors: "right", step: 9 },
];

const SCALE_RATIOS = new Set(SCALE_CHOICES.map((c) => c.ratio));

// Ratio token for favoring one side by a step: stored value is always
// oriented (left, right), so right-favoring steps become 1/k.
export function ratioFor(favors: "left" | "equal" | "right", step: number): string {
  if (favors === "equal" || step === 1) return "1";
  return favors === "left" ? String(step) : `1/${step}`;
}

export function ratioToNumber(ratio: string): number {
  const trimmed = ratio.trim();
  const slash = trimmed.indexOf("/");
  if (slash < 0) {
    const value = Number(trimmed);
    return Number.isFinite(value) ? value : NaN;
  }
  const p = Number(trimmed.slice(0, slash));
  const q = Number(trimmed.slice(slash + 1));
  if (!Number.isFinite(p) || !Number.isFinite(q) || q === 0) return NaN;
  return p / q;
}

// Reciprocal of a ratio token, exactly, staying in p/q form.
export function invertRatio(ratio: string): string {
  const trimmed = ratio.trim();
  const slash = trimmed.indexOf("/");
  if (slash < 0) return trimmed === "1" ? "1" : `1/${trimmed}`;
  const p = trimmed.slice(0, slash);
  const q = trimmed.slice(slash + 1);
  return p === "1" ? q : `${q}/${p}`;
}

// Free-entry values are accepted when positive and numeric; the engine
// flags off-scale ones with a validation warning the UI surfaces.
export function validateFreeEntry(text: string): { ok: boolean; reason?: string } {
  const value = ratioToNumber(text);
  if (Number.isNaN(value)) return { ok: false, reason: "enter a number or p/q ratio" };
  if (value <= 0) return { ok: false, reason: "ratio must be positive" };
  return { ok: true };
}

export function isOnScale(ratio: string): boolean {
  return SCALE_RATIOS.has(ratio.trim());
}
