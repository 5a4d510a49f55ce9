// Session state machine. Holds the working model document and revision,
// pushes every mutation through the API with an optimistic revision check,
// and refreshes consistency badges from re-analysis. What-if never saves:
// a preview either gets committed (promoted to a real edit) or discarded.
import { ApiRequestError } from "./api.js";
import { applyJudgment, scaffoldDoc } from "./model.js";
// 409: someone else (another tab) moved the session forward; reload.
export class RevisionConflict extends Error {
    constructor() {
        super("the session has changed in another tab; reload to continue");
    }
}
// 422: the engine rejected the edit; field-level issues for inline display.
export class EditRejected extends Error {
    constructor(report) {
        super(report.errors.map((e) => `${e.code}: ${e.message}`).join("; "));
        this.report = report;
    }
}
export class SessionStore {
    constructor(api) {
        this.api = api;
        this.sessionId = "";
        this.revision = 0;
        this.model = null;
        this.analysis = null;
        this.metrics = [];
        this.pendingPreview = null;
    }
    async init() {
        this.sessionId = await this.api.createSession();
        this.revision = 0;
    }
    translate(error) {
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
    async loadText(text) {
        try {
            const response = await this.api.putModelText(this.sessionId, text, this.revision);
            this.revision = response.revision;
            await this.refreshModel();
            await this.refreshAnalysis();
            return response.report;
        }
        catch (error) {
            this.translate(error);
        }
    }
    async refreshModel() {
        const response = await this.api.getModel(this.sessionId);
        this.model = response.model;
        this.revision = response.revision;
    }
    async refreshAnalysis() {
        this.analysis = this.model ? await this.api.analyze(this.sessionId) : null;
    }
    // Save one judgment and refresh consistency badges from a re-analysis.
    async editJudgment(path, pair, ratio) {
        if (!this.model)
            throw new Error("no model in session");
        const edited = applyJudgment(this.model, path, pair, ratio);
        try {
            const response = await this.api.putModelDoc(this.sessionId, edited, this.revision);
            this.revision = response.revision;
            this.model = edited;
            await this.refreshAnalysis();
            return this.analysis;
        }
        catch (error) {
            this.translate(error);
        }
    }
    // Side-effect-free preview of one judgment change.
    async exploreWhatIf(path, pair, candidate) {
        const delta = await this.api.whatif(this.sessionId, path, pair, candidate);
        this.pendingPreview = { path, pair, candidate, delta };
        return this.pendingPreview;
    }
    // Promote the previewed change to a saved judgment.
    async commitPreview() {
        const preview = this.pendingPreview;
        if (!preview)
            throw new Error("nothing previewed");
        const analysis = await this.editJudgment(preview.path, preview.pair, preview.candidate);
        this.pendingPreview = null;
        return analysis;
    }
    discardPreview() {
        this.pendingPreview = null;
    }
    // Build a fresh hierarchy from catalog picks and store it in the session.
    async scaffoldFromCatalog(selection, alternatives, name) {
        const doc = scaffoldDoc(selection, alternatives, name);
        try {
            const response = await this.api.putModelDoc(this.sessionId, doc, this.revision);
            this.revision = response.revision;
            this.model = doc;
            await this.refreshAnalysis();
        }
        catch (error) {
            this.translate(error);
        }
    }
    async loadMetrics(records) {
        try {
            this.revision = await this.api.putMetrics(this.sessionId, records, this.revision);
            this.metrics = records;
        }
        catch (error) {
            this.translate(error);
        }
    }
}
