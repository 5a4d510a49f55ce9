// Wire types for the /api routes. Ratios travel as exact strings ("3",
// "1/7"); weights are raw floats, rounding happens at render time.

export interface JudgmentDoc {
  left: string;
  right: string;
  value: string;
}

export interface NodeDoc {
  name: string;
  judgments: JudgmentDoc[];
  // Child criteria, or the sentinel "alternatives" for leaf criteria whose
  // judgments compare the model's alternatives.
  children: NodeDoc[] | "alternatives";
}

export interface ModelDoc {
  version: string;
  metadata: { name: string; description: string; author: string };
  alternatives: { name: string; attributes: Record<string, string> }[];
  goal: NodeDoc;
}

export type ConsistencyStatus = "IDEAL" | "ACCEPTABLE" | "INCONSISTENT";

export interface ConsistencyDoc {
  lambda_max: number;
  n: number;
  consistency_index: number;
  random_index: number;
  consistency_ratio: number;
  status: ConsistencyStatus;
}

export interface ResultRowDoc {
  path: string[];
  name: string;
  depth: number;
  local_weight: number;
  global_weight: number;
  per_alternative_weight: Record<string, number>;
  consistency: ConsistencyDoc;
}

export interface AnalysisDoc {
  rows: ResultRowDoc[];
  alternative_totals: Record<string, number>;
  ranking: { alternative: string; weight: number }[];
  overall_consistency: number;
}

export interface DeltaDoc {
  changed: { path: string[]; pair: string[]; old_value: string; new_value: string };
  before: AnalysisDoc;
  after: AnalysisDoc;
  total_shift: Record<string, number>;
}

export interface ValidationIssueDoc {
  path: string[];
  code: string;
  message: string;
}

export interface ValidationReportDoc {
  errors: ValidationIssueDoc[];
  warnings: ValidationIssueDoc[];
}

export interface CatalogEntryDoc {
  usability_dimension: "EFFICIENCY" | "EFFECTIVENESS" | "SATISFACTION";
  category: string;
  attribute: string;
  sources: string[];
  key: string;
}

export interface MetricRecordDoc {
  attribute: string;
  metric_name: string;
  kind: "SUCCESS_RATE" | "RANGE_RATE" | "SCALED_SCORE";
  values: Record<string, { rate?: number; low?: number; high?: number; mean?: number; stddev?: number }>;
}

export interface ApiErrorDoc {
  status: number;
  code: string;
  detail: string;
  span?: { line: number; column: number };
}
