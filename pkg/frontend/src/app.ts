// Browser entry point: wires the session store to the page. Rendering is
// string-template based; all interactive logic lives in the small modules
// this file composes (scale, grid, results, state).

import { ApiClient } from "./api.js";
import { escapeHtml, pct, signedPct } from "./format.js";
import { buildGrid, JudgmentGridView } from "./grid.js";
import { treeEntries } from "./model.js";
import { buildRanking, buildResultsTable, evidenceByAttribute } from "./results.js";
import { isOnScale, SCALE_CHOICES, validateFreeEntry } from "./scale.js";
import { EditRejected, RevisionConflict, SessionStore } from "./state.js";
import type { CatalogEntryDoc } from "./types.js";

const store = new SessionStore(new ApiClient(""));
let selectedPath: string[] = ["Goal"];
let catalogCache: CatalogEntryDoc[] = [];

function el<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

function setStatus(text: string, tone: "info" | "error" = "info"): void {
  const bar = el<HTMLElement>("status");
  bar.textContent = text;
  bar.className = tone === "error" ? "status error" : "status";
}

function describeError(error: unknown): string {
  if (error instanceof RevisionConflict) return error.message;
  if (error instanceof EditRejected) return error.message;
  if (error instanceof Error) return error.message;
  return String(error);
}

function renderHeader(): void {
  el("session-info").textContent = store.sessionId
    ? `session ${store.sessionId.slice(0, 8)} rev ${store.revision}`
    : "no session";
}

function renderTree(): void {
  const host = el("tree");
  if (!store.model) {
    host.innerHTML = '<p class="hint">No model yet. Scaffold one from the catalog or upload a file.</p>';
    return;
  }
  const items = treeEntries(store.model).map((entry) => {
    const key = entry.path.join("/");
    const active = key === selectedPath.join("/") ? " active" : "";
    const label = escapeHtml(entry.name);
    const badge = badgeHtml(entry.path);
    return `<div class="tree-item depth-${entry.depth}${active}" data-path="${escapeHtml(key)}">`
      + `<span>${label}</span>${badge}</div>`;
  });
  host.innerHTML = items.join("");
  for (const item of Array.from(host.querySelectorAll<HTMLElement>(".tree-item"))) {
    item.addEventListener("click", () => {
      selectedPath = (item.dataset.path ?? "Goal").split("/");
      renderTree();
      renderGrid();
    });
  }
}

function badgeHtml(path: string[]): string {
  if (!store.analysis) return "";
  const key = path.join("/");
  const row = store.analysis.rows.find((r) => r.path.join("/") === key);
  if (!row) return "";
  const color = row.consistency.status === "IDEAL" ? "green"
    : row.consistency.status === "ACCEPTABLE" ? "amber" : "red";
  return `<span class="badge ${color}">${pct(row.consistency.consistency_ratio)}</span>`;
}

function scaleRowHtml(grid: JudgmentGridView, index: number): string {
  const pair = grid.pairs[index];
  const buttons = SCALE_CHOICES.map((choice) => {
    const active = pair.ratio === choice.ratio ? " active" : "";
    const label = choice.favors === "left" ? String(choice.step)
      : choice.favors === "equal" ? "1" : `1/${choice.step}`;
    return `<button class="scale${active}" data-index="${index}" `
      + `data-ratio="${choice.ratio}" title="${choice.favors} ${choice.step}">`
      + `${label}</button>`;
  }).join("");
  const offScale = pair.ratio !== null && !isOnScale(pair.ratio)
    ? `<span class="off-scale" title="value off the 1/3/5/7/9 scale">${escapeHtml(pair.ratio)}</span>`
    : "";
  return `<div class="pair-row">
    <span class="pair-name left">${escapeHtml(pair.left)}</span>
    <span class="scale-row">${buttons}</span>
    <span class="pair-name right">${escapeHtml(pair.right)}</span>
    ${offScale}
    <input class="free-entry" data-index="${index}" placeholder="e.g. 2 or 1/6"
           value="" size="6" />
    <button class="preview" data-index="${index}">what-if</button>
  </div>`;
}

function renderGrid(): void {
  const host = el("grid");
  if (!store.model) {
    host.innerHTML = "";
    return;
  }
  let grid: JudgmentGridView;
  try {
    grid = buildGrid(store.model, store.analysis, selectedPath);
  } catch {
    selectedPath = ["Goal"];
    grid = buildGrid(store.model, store.analysis, selectedPath);
  }
  const badge = grid.badge
    ? `<span class="badge ${grid.badge.color}">CR ${grid.badge.text}</span>`
    : "";
  const subtitle = grid.comparesAlternatives
    ? "judging the alternatives under this criterion"
    : "judging the relative importance of the sub-criteria";
  const rows = grid.pairs.map((_pair, index) => scaleRowHtml(grid, index)).join("");
  const evidence = evidenceChipHtml(grid);
  host.innerHTML = `<h2>${escapeHtml(grid.title)} ${badge}</h2>
    <p class="hint">${subtitle}; left buttons favor the left name, right buttons the right one.</p>
    ${evidence}
    ${rows || '<p class="hint">Single member; nothing to judge here.</p>'}`;

  for (const button of Array.from(host.querySelectorAll<HTMLButtonElement>("button.scale"))) {
    button.addEventListener("click", () => {
      const pair = grid.pairs[Number(button.dataset.index)];
      void saveJudgment([pair.left, pair.right], button.dataset.ratio as string);
    });
  }
  for (const input of Array.from(host.querySelectorAll<HTMLInputElement>("input.free-entry"))) {
    input.addEventListener("keydown", (event) => {
      if (event.key !== "Enter") return;
      const pair = grid.pairs[Number(input.dataset.index)];
      const check = validateFreeEntry(input.value);
      if (!check.ok) {
        setStatus(check.reason ?? "invalid ratio", "error");
        return;
      }
      void saveJudgment([pair.left, pair.right], input.value.trim());
    });
  }
  for (const button of Array.from(host.querySelectorAll<HTMLButtonElement>("button.preview"))) {
    button.addEventListener("click", () => {
      const pair = grid.pairs[Number(button.dataset.index)];
      openWhatIf([pair.left, pair.right], pair.ratio ?? "1");
    });
  }
}

function evidenceChipHtml(grid: JudgmentGridView): string {
  if (!grid.comparesAlternatives || store.metrics.length === 0) return "";
  const chips = evidenceByAttribute(store.metrics);
  const name = grid.path[grid.path.length - 1];
  const chip = chips.get(name);
  return chip ? `<p class="evidence" title="measured evidence">${escapeHtml(chip)}</p>` : "";
}

function renderResults(): void {
  const host = el("results");
  if (!store.analysis) {
    host.innerHTML = '<p class="hint">Analyze to see weights and consistency.</p>';
    return;
  }
  const table = buildResultsTable(store.analysis);
  const header = table.header.map((cell) => `<th>${escapeHtml(cell)}</th>`).join("");
  const body = table.cells.map((row, i) => {
    const cells = row.map((cell, column) => {
      if (column === 0) {
        const indent = cell.length - cell.trimStart().length;
        return `<td class="name" style="padding-left:${8 + indent * 8}px">`
          + `${escapeHtml(cell.trim())}</td>`;
      }
      if (column === row.length - 1) {
        return `<td class="num badge-cell ${table.badges[i]}">${cell}</td>`;
      }
      return `<td class="num">${cell}</td>`;
    }).join("");
    return `<tr>${cells}</tr>`;
  }).join("");
  const ranking = buildRanking(store.analysis).map((row) =>
    `<li class="${row.leading ? "leading" : ""}">${row.position}. `
    + `${escapeHtml(row.alternative)} ${row.weight}</li>`).join("");
  host.innerHTML = `<table id="results-table"><thead><tr>${header}</tr></thead>`
    + `<tbody>${body}</tbody></table>`
    + `<ol class="ranking">${ranking}</ol>`;
}

async function saveJudgment(pair: [string, string], ratio: string): Promise<void> {
  try {
    await store.editJudgment(selectedPath, pair, ratio);
    setStatus(`saved ${pair[0]} : ${pair[1]} = ${ratio}`);
    renderAll();
  } catch (error) {
    if (error instanceof RevisionConflict) {
      setStatus(describeError(error), "error");
      el<HTMLButtonElement>("reload").hidden = false;
    } else {
      setStatus(describeError(error), "error");
    }
  }
}

function openWhatIf(pair: [string, string], current: string): void {
  const dialog = el<HTMLDialogElement>("whatif-dialog");
  el("whatif-title").textContent =
    `${selectedPath.join("/")}: ${pair[0]} vs ${pair[1]} (currently ${current})`;
  const input = el<HTMLInputElement>("whatif-value");
  input.value = current;
  el("whatif-result").innerHTML = "";
  el<HTMLButtonElement>("whatif-commit").disabled = true;

  el<HTMLButtonElement>("whatif-run").onclick = async () => {
    const check = validateFreeEntry(input.value);
    if (!check.ok) {
      setStatus(check.reason ?? "invalid ratio", "error");
      return;
    }
    try {
      const preview = await store.exploreWhatIf(selectedPath, pair, input.value.trim());
      const before = preview.delta.before.alternative_totals;
      const after = preview.delta.after.alternative_totals;
      const rows = Object.keys(before).map((name) =>
        `<tr><td>${escapeHtml(name)}</td><td class="num">${pct(before[name])}</td>`
        + `<td class="num">${pct(after[name])}</td>`
        + `<td class="num">${signedPct(preview.delta.total_shift[name])}</td></tr>`).join("");
      const unchanged = Object.values(preview.delta.total_shift).every((v) => v === 0);
      el("whatif-result").innerHTML =
        `<table><thead><tr><th></th><th>before</th><th>after</th><th>shift</th></tr></thead>`
        + `<tbody>${rows}</tbody></table>`
        + (unchanged ? '<p class="hint">Same as the stored value; nothing would change.</p>' : "");
      el<HTMLButtonElement>("whatif-commit").disabled = unchanged;
    } catch (error) {
      setStatus(describeError(error), "error");
    }
  };
  el<HTMLButtonElement>("whatif-commit").onclick = async () => {
    try {
      await store.commitPreview();
      dialog.close();
      setStatus("committed previewed judgment");
      renderAll();
    } catch (error) {
      setStatus(describeError(error), "error");
    }
  };
  el<HTMLButtonElement>("whatif-discard").onclick = () => {
    store.discardPreview();
    dialog.close();
    setStatus("preview discarded; model untouched");
  };
  dialog.showModal();
}

async function openScaffold(): Promise<void> {
  const dialog = el<HTMLDialogElement>("scaffold-dialog");
  if (catalogCache.length === 0) {
    catalogCache = await store.api.catalog();
  }
  const byCategory = new Map<string, CatalogEntryDoc[]>();
  for (const entry of catalogCache) {
    const bucket = byCategory.get(entry.category) ?? [];
    bucket.push(entry);
    byCategory.set(entry.category, bucket);
  }
  const groups = Array.from(byCategory.entries()).map(([category, entries]) => {
    const boxes = entries.map((e) =>
      `<label><input type="checkbox" data-key="${escapeHtml(e.key)}" `
      + `data-category="${escapeHtml(e.category)}" />`
      + `${escapeHtml(e.attribute)}</label>`).join("");
    return `<fieldset><legend>${escapeHtml(category)}</legend>${boxes}</fieldset>`;
  }).join("");
  el("catalog-picker").innerHTML = groups;

  const submit = el<HTMLButtonElement>("scaffold-create");
  const refreshSubmit = () => {
    const picked = dialog.querySelectorAll("input[type=checkbox]:checked").length;
    const alternatives = el<HTMLInputElement>("scaffold-alternatives").value
      .split(",").map((a) => a.trim()).filter((a) => a.length > 0);
    submit.disabled = picked === 0 || alternatives.length < 2;
  };
  for (const box of Array.from(dialog.querySelectorAll("input[type=checkbox]"))) {
    (box as HTMLInputElement).addEventListener("change", refreshSubmit);
  }
  el<HTMLInputElement>("scaffold-alternatives").addEventListener("input", refreshSubmit);
  refreshSubmit();

  submit.onclick = async () => {
    const selection = Array.from(
      dialog.querySelectorAll<HTMLInputElement>("input[type=checkbox]:checked"))
      .map((box) => catalogCache.find(
        (e) => e.key === box.dataset.key && e.category === box.dataset.category))
      .filter((e): e is CatalogEntryDoc => e !== undefined);
    const alternatives = el<HTMLInputElement>("scaffold-alternatives").value
      .split(",").map((a) => a.trim()).filter((a) => a.length > 0);
    const name = el<HTMLInputElement>("scaffold-name").value.trim() || "Quality Assessment";
    try {
      await store.scaffoldFromCatalog(selection, alternatives, name);
      dialog.close();
      selectedPath = ["Goal"];
      setStatus("scaffold stored; judgments are placeholders (1), edit them");
      renderAll();
    } catch (error) {
      setStatus(describeError(error), "error");
    }
  };
  dialog.showModal();
}

function openUpload(): void {
  const dialog = el<HTMLDialogElement>("upload-dialog");
  el<HTMLButtonElement>("upload-submit").onclick = async () => {
    try {
      const report = await store.loadText(el<HTMLTextAreaElement>("upload-text").value);
      dialog.close();
      selectedPath = ["Goal"];
      const warnings = report.warnings.length;
      setStatus(warnings ? `model stored with ${warnings} warning(s)` : "model stored");
      renderAll();
    } catch (error) {
      setStatus(describeError(error), "error");
    }
  };
  dialog.showModal();
}

function renderAll(): void {
  renderHeader();
  renderTree();
  renderGrid();
  renderResults();
}

async function main(): Promise<void> {
  el<HTMLButtonElement>("btn-scaffold").addEventListener("click", () => void openScaffold());
  el<HTMLButtonElement>("btn-upload").addEventListener("click", openUpload);
  el<HTMLButtonElement>("btn-analyze").addEventListener("click", async () => {
    try {
      await store.refreshAnalysis();
      setStatus("analysis refreshed");
      renderAll();
    } catch (error) {
      setStatus(describeError(error), "error");
    }
  });
  el<HTMLButtonElement>("reload").addEventListener("click", () => window.location.reload());

  await store.init();
  setStatus("ready; scaffold a model from the catalog or upload a file");
  renderAll();
}

void main();
