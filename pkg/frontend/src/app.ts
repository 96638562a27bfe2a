/** DOM wiring: one task on screen at a time, submissions advance the queue.
 *
 * The draft only leaves the page through a 200-acknowledged POST; on a 409
 * the conflict is surfaced and the queue moves on; when the backend is
 * unreachable a retry banner appears and the in-progress draft is kept.
 */

import { ApiClient, ApiError } from "./api.js";
import { AnnotationDraft } from "./selection.js";
import {
  renderGoldPairs,
  renderLikert,
  renderPhase,
  renderProgress,
  renderReport,
  renderSilverSummary,
  renderTokens,
} from "./render.js";
import type { Task } from "./types.js";

interface Elements {
  tokens: HTMLElement;
  silver: HTMLElement;
  pairs: HTMLElement;
  controls: HTMLElement;
  likert: HTMLElement;
  status: HTMLElement;
  progress: HTMLElement;
  report: HTMLElement;
  submit: HTMLButtonElement;
}

export class App {
  private draft: AnnotationDraft | null = null;
  private task: Task | null = null;
  private annotated = 0;

  constructor(
    private readonly client: ApiClient,
    private readonly annotator: string,
    private readonly el: Elements,
  ) {}

  async start(): Promise<void> {
    this.bindEvents();
    await this.refreshReport();
    await this.loadNext();
  }

  private bindEvents(): void {
    this.el.tokens.addEventListener("click", (event) => {
      const target = (event.target as HTMLElement).closest("[data-token-id]");
      if (!target || !this.draft) return;
      this.draft.toggleToken(Number(target.getAttribute("data-token-id")));
      this.paintTask();
    });
    this.el.controls.addEventListener("click", (event) => {
      const id = (event.target as HTMLElement).id;
      if (!this.draft) return;
      if (id === "confirm-head") this.draft.confirmHead();
      else if (id === "confirm-pair") this.draft.confirmPair();
      else if (id === "cancel-selection") this.draft.cancelSelection();
      this.paintTask();
    });
    this.el.pairs.addEventListener("click", (event) => {
      const target = (event.target as HTMLElement).closest("[data-pair-index]");
      if (!target || !this.draft) return;
      this.draft.removePair(Number(target.getAttribute("data-pair-index")));
      this.paintTask();
    });
    this.el.likert.addEventListener("change", (event) => {
      const input = event.target as HTMLInputElement;
      if (this.draft && input.name === "likert") {
        this.draft.setLikert(Number(input.value));
        this.paintSubmit();
      }
    });
    this.el.submit.addEventListener("click", () => void this.submit());
  }

  private async loadNext(): Promise<void> {
    try {
      const next = await this.client.nextTask(this.annotator);
      if (next.done || !next.task) {
        this.task = null;
        this.draft = null;
        this.el.tokens.innerHTML = "<p>All sentences annotated. Thank you!</p>";
        this.el.silver.innerHTML = "";
        this.el.controls.innerHTML = "";
        this.el.likert.innerHTML = "";
        this.el.pairs.innerHTML = "";
        this.paintSubmit();
        return;
      }
      this.task = next.task;
      this.draft = new AnnotationDraft(next.task.sent_id, this.annotator);
      this.setStatus("");
      this.paintTask();
    } catch (error) {
      this.setStatus(`Backend unreachable, retrying… (${String(error)})`, true);
      setTimeout(() => void this.loadNext(), 2000);
    }
  }

  private async submit(): Promise<void> {
    if (!this.draft || !this.draft.canSubmit()) return;
    const payload = this.draft.payload();
    try {
      await this.client.submitAnnotation(payload);
      this.annotated += 1;
      await this.refreshReport();
      await this.loadNext();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.setStatus("Already annotated by you; skipping forward.", true);
        await this.loadNext();
      } else if (error instanceof ApiError) {
        this.setStatus(`Rejected: ${error.message}`, true);
      } else {
        // network failure: keep the draft, offer retry
        this.setStatus("Backend unreachable; your entry is kept. Retry submit.", true);
      }
    }
  }

  private async refreshReport(): Promise<void> {
    try {
      const [report, progress] = await Promise.all([
        this.client.report(),
        this.client.progress(),
      ]);
      this.el.report.innerHTML = renderReport(report);
      this.el.progress.innerHTML = renderProgress(progress.annotated, progress.total);
    } catch {
      // report pane is advisory; task flow handles connectivity
    }
  }

  private paintTask(): void {
    if (!this.task || !this.draft) return;
    this.el.tokens.innerHTML = renderTokens(this.task, this.draft);
    this.el.silver.innerHTML = renderSilverSummary(this.task);
    this.el.pairs.innerHTML = renderGoldPairs(this.draft, this.task);
    this.el.controls.innerHTML = renderPhase(this.draft);
    this.el.likert.innerHTML = renderLikert(this.draft);
    this.paintSubmit();
  }

  private paintSubmit(): void {
    this.el.submit.disabled = !this.draft || !this.draft.canSubmit();
  }

  private setStatus(message: string, warn = false): void {
    this.el.status.textContent = message;
    this.el.status.className = warn ? "status warn" : "status";
  }
}

export function mount(): void {
  const query = new URLSearchParams(window.location.search);
  const annotator = query.get("annotator") ?? "anon";
  const base = query.get("backend") ?? "";
  const byId = (id: string) => {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
  };
  const app = new App(new ApiClient(base), annotator, {
    tokens: byId("tokens"),
    silver: byId("silver"),
    pairs: byId("pairs"),
    controls: byId("controls"),
    likert: byId("likert"),
    status: byId("status"),
    progress: byId("progress"),
    report: byId("report"),
    submit: byId("submit") as HTMLButtonElement,
  });
  void app.start();
}

if (typeof document !== "undefined" && document.getElementById("tokens")) {
  mount();
}
