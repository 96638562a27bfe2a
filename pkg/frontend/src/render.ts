/** Pure HTML renderers; the app layer only wires events and swaps innerHTML.
 *
 * Silver verb-patterner spans render red, object-patterner spans blue,
 * mirroring the head/dependent colour convention annotators know from the
 * variant tables.  Japanese tasks concatenate tokens with no separator but
 * every token keeps its own click target.
 */

import type { Report, SilverSpan, Task } from "./types.js";
import { LIKERT_SCALE } from "./types.js";
import type { AnnotationDraft } from "./selection.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

interface TokenRole {
  silverHead: number | null; // index of the silver record, for grouping
  silverDep: number | null;
}

function silverRoles(silver: SilverSpan[]): Map<number, TokenRole> {
  const roles = new Map<number, TokenRole>();
  const role = (id: number): TokenRole => {
    let r = roles.get(id);
    if (!r) {
      r = { silverHead: null, silverDep: null };
      roles.set(id, r);
    }
    return r;
  };
  silver.forEach((span, index) => {
    for (const id of span.head) role(id).silverHead = index;
    for (const dep of span.deps) for (const id of dep) role(id).silverDep = index;
  });
  return roles;
}

export function renderTokens(task: Task, draft: AnnotationDraft): string {
  const roles = silverRoles(task.silver);
  const headSel = new Set(draft.selectedHead());
  const depSel = new Set(draft.selectedDep());
  const inPairs = new Map<number, "head" | "dep">();
  for (const pair of draft.pairs) {
    for (const id of pair.head) inPairs.set(id, "head");
    for (const id of pair.dep) inPairs.set(id, "dep");
  }
  const separator = task.language === "ja" ? "" : " ";
  const parts = task.tokens.map((token) => {
    const classes = ["token"];
    const role = roles.get(token.id);
    if (role?.silverHead !== null && role?.silverHead !== undefined) {
      classes.push("silver-head", `silver-group-${role.silverHead}`);
    }
    if (role?.silverDep !== null && role?.silverDep !== undefined) {
      classes.push("silver-dep", `silver-group-${role.silverDep}`);
    }
    if (headSel.has(token.id)) classes.push("picked-head");
    if (depSel.has(token.id)) classes.push("picked-dep");
    const committed = inPairs.get(token.id);
    if (committed) classes.push(`gold-${committed}`);
    return (
      `<button type="button" class="${classes.join(" ")}" data-token-id="${token.id}"` +
      ` title="${escapeHtml(token.upos)}">${escapeHtml(token.form)}</button>`
    );
  });
  return `<div class="tokens" data-lang="${escapeHtml(task.language)}">${parts.join(separator)}</div>`;
}

export function renderSilverSummary(task: Task): string {
  if (task.silver.length === 0) {
    return `<p class="silver-note">No silver swaps in this sentence.</p>`;
  }
  const byId = new Map(task.tokens.map((t) => [t.id, t.form]));
  const forms = (ids: number[]) =>
    ids.map((id) => escapeHtml(byId.get(id) ?? `#${id}`)).join(" ");
  const items = task.silver.map((span, index) => {
    const deps = span.deps.map((d) => `<span class="dep">${forms(d)}</span>`).join(", ");
    return (
      `<li class="silver-item silver-group-${index}">` +
      `<span class="head">${forms(span.head)}</span> &harr; ${deps}</li>`
    );
  });
  return `<ol class="silver-list">${items.join("")}</ol>`;
}

export function renderGoldPairs(draft: AnnotationDraft, task: Task): string {
  const byId = new Map(task.tokens.map((t) => [t.id, t.form]));
  const forms = (ids: number[]) =>
    ids.map((id) => escapeHtml(byId.get(id) ?? `#${id}`)).join(" ");
  if (draft.pairs.length === 0) {
    return `<p class="gold-empty">No gold pairs yet (a valid answer for swap-free sentences).</p>`;
  }
  const items = draft.pairs.map(
    (pair, index) =>
      `<li>&lt;${forms(pair.head)}, ${forms(pair.dep)}&gt; ` +
      `<button type="button" class="remove-pair" data-pair-index="${index}">remove</button></li>`,
  );
  return `<ol class="gold-list">${items.join("")}</ol>`;
}

export function renderLikert(draft: AnnotationDraft): string {
  const options = LIKERT_SCALE.map(({ value, label }) => {
    const checked = draft.likert === value ? " checked" : "";
    return (
      `<label class="likert-option"><input type="radio" name="likert"` +
      ` value="${value}"${checked}> ${value} &mdash; ${escapeHtml(label)}</label>`
    );
  });
  return `<fieldset class="likert"><legend>Validity</legend>${options.join("")}</fieldset>`;
}

export function renderPhase(draft: AnnotationDraft): string {
  const hint =
    draft.phase === "head"
      ? "Click the head tokens of a pair, then Confirm head."
      : "Now click the dependent tokens, then Add pair.";
  const headBtn = draft.phase === "head" ? "" : " disabled";
  const pairBtn = draft.phase === "dep" ? "" : " disabled";
  return (
    `<p class="phase-hint">${hint}</p>` +
    `<button type="button" id="confirm-head"${headBtn}>Confirm head</button> ` +
    `<button type="button" id="confirm-pair"${pairBtn}>Add pair</button> ` +
    `<button type="button" id="cancel-selection">Clear selection</button>`
  );
}

export function renderReport(report: Report): string {
  const pct = (x: number | null) => (x === null ? "–" : (100 * x).toFixed(1));
  const val = (x: number | null) => (x === null ? "–" : x.toFixed(1));
  return (
    `<table class="report"><tr><th>Pair</th><th>Prec</th><th>Rec</th><th>Val</th></tr>` +
    `<tr><td>${escapeHtml(report.pair_type)}</td><td>${pct(report.precision)}</td>` +
    `<td>${pct(report.recall)}</td><td>${val(report.mean_likert)}</td></tr></table>` +
    `<p class="report-counts">${report.n_correct} correct of ${report.n_silver} silver` +
    ` / ${report.n_gold} gold over ${report.n_sentences} sentences</p>`
  );
}

export function renderProgress(done: number, total: number): string {
  return `<span class="progress">${done} / ${total} sentences annotated</span>`;
}
