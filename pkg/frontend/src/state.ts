// Session state machine. Holds the working model document and revision,
// pushes every mutation through the API with an optimistic revision check,
// and refreshes consistency badges from re-analysis. What-if never saves:
// a preview either gets committed (promoted to a real edit) or discarded.

import { ApiClient, ApiRequestError } from "./api.js";
import { applyJudgment, scaffoldDoc } from "./model.js";
import type {
  AnalysisDoc,
  CatalogEntryDoc,
  DeltaDoc,
  MetricRecordDoc,
  ModelDoc,
  ValidationReportDoc,
} from "./types.js";

// 409: someone else (another tab) moved the session forward; reload.
export class RevisionConflict extends Error {
  constructor() {
    super("the session has changed in another tab; reload to continue");
  }
}

// 422: the engine rejected the edit; field-level issues for inline display.
export class EditRejected extends Error {
  constructor(readonly report: ValidationReportDoc) {
    super(report.errors.map((e) => `${e.code}: ${e.message}`).join("; "));
  }
}

export interface WhatIfPreview {
  path: string[];
  pair: [string, string];
  candidate: string;
  delta: DeltaDoc;
}

export class SessionStore {
  sessionId = "";
  revision = 0;
  model: ModelDoc | null = null;
  analysis: AnalysisDoc | null = null;
  metrics: MetricRecordDoc[] = [];
  pendingPreview: WhatIfPreview | null = null;

  constructor(readonly api: ApiClient) {}

  async init(): Promise<void> {
    this.sessionId = await this.api.createSession();
    this.revision = 0;
  }

  private translate(error: unknown): never {
    if (error instanceof ApiRequestError) {
      if (error.status === 409 && error.code === "REVISION_MISMATCH") {
        throw new RevisionConflict();
      }
      if (error.status === 422 && error.report) {
        throw new EditRejected(error.report);
      }
    }
    throw error;
  }

  // Load a model file (text) into the session, replacing what is there.
  async loadText(text: string): Promise<ValidationReportDoc> {
    try {
      const response = await this.api.putModelText(this.sessionId, text, this.revision);
      this.revision = response.revision;
      await this.refreshModel();
      await this.refreshAnalysis();
      return response.report;
    } catch (error) {
      this.translate(error);
    }
  }

  async refreshModel(): Promise<void> {
    const response = await this.api.getModel(this.sessionId);
    this.model = response.model;
    this.revision = response.revision;
  }

  async refreshAnalysis(): Promise<void> {
    this.analysis = this.model ? await this.api.analyze(this.sessionId) : null;
  }

  // Save one judgment and refresh consistency badges from a re-analysis.
  async editJudgment(path: string[], pair: [string, string],
                     ratio: string): Promise<AnalysisDoc> {
    if (!this.model) throw new Error("no model in session");
    const edited = applyJudgment(this.model, path, pair, ratio);
    try {
      const response = await this.api.putModelDoc(this.sessionId, edited, this.revision);
      this.revision = response.revision;
      this.model = edited;
      await this.refreshAnalysis();
      return this.analysis as AnalysisDoc;
    } catch (error) {
      this.translate(error);
    }
  }

  // Side-effect-free preview of one judgment change.
  async exploreWhatIf(path: string[], pair: [string, string],
                      candidate: string): Promise<WhatIfPreview> {
    const delta = await this.api.whatif(this.sessionId, path, pair, candidate);
    this.pendingPreview = { path, pair, candidate, delta };
    return this.pendingPreview;
  }

  // Promote the previewed change to a saved judgment.
  async commitPreview(): Promise<AnalysisDoc> {
    const preview = this.pendingPreview;
    if (!preview) throw new Error("nothing previewed");
    const analysis = await this.editJudgment(preview.path, preview.pair, preview.candidate);
    this.pendingPreview = null;
    return analysis;
  }

  discardPreview(): void {
    this.pendingPreview = null;
  }

  // Build a fresh hierarchy from catalog picks and store it in the session.
  async scaffoldFromCatalog(selection: CatalogEntryDoc[], alternatives: string[],
                            name: string): Promise<void> {
    const doc = scaffoldDoc(selection, alternatives, name);
    try {
      const response = await this.api.putModelDoc(this.sessionId, doc, this.revision);
      this.revision = response.revision;
      this.model = doc;
      await this.refreshAnalysis();
    } catch (error) {
      this.translate(error);
    }
  }

  async loadMetrics(records: MetricRecordDoc[]): Promise<void> {
    try {
      this.revision = await this.api.putMetrics(this.sessionId, records, this.revision);
      this.metrics = records;
    } catch (error) {
      this.translate(error);
    }
  }
}
