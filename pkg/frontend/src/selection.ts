/** Gold-pair composition state.
 *
 * Pairs are entered by clicking tokens: first the head tokens, confirm,
 * then the dependent tokens, confirm again to commit the pair.  Ids stay
 * token-exact so the backend can score by set equality, no fuzzy matching.
 * The Likert score is mandatory; an empty gold list is a legitimate answer
 * (the sentence had nothing to swap).
 */

import type { AnnotationPayload, GoldPair } from "./types.js";

export type Phase = "head" | "dep";

export class AnnotationDraft {
  readonly pairs: GoldPair[] = [];
  phase: Phase = "head";
  likert: number | null = null;
  private headIds = new Set<number>();
  private depIds = new Set<number>();

  constructor(
    readonly sentId: string,
    readonly annotator: string,
  ) {}

  selectedHead(): number[] {
    return [...this.headIds].sort((a, b) => a - b);
  }

  selectedDep(): number[] {
    return [...this.depIds].sort((a, b) => a - b);
  }

  /** Toggle a token in the active selection; a token cannot sit on both
   * sides of the pair being built. */
  toggleToken(id: number): void {
    const active = this.phase === "head" ? this.headIds : this.depIds;
    const other = this.phase === "head" ? this.depIds : this.headIds;
    if (active.has(id)) {
      active.delete(id);
    } else {
      other.delete(id);
      active.add(id);
    }
  }

  /** Head chosen; start collecting the dependent side. */
  confirmHead(): boolean {
    if (this.phase !== "head" || this.headIds.size === 0) return false;
    this.phase = "dep";
    return true;
  }

  /** Commit the pair under construction and reset for the next one. */
  confirmPair(): boolean {
    if (this.phase !== "dep" || this.depIds.size === 0) return false;
    this.pairs.push({ head: this.selectedHead(), dep: this.selectedDep() });
    this.headIds.clear();
    this.depIds.clear();
    this.phase = "head";
    return true;
  }

  cancelSelection(): void {
    this.headIds.clear();
    this.depIds.clear();
    this.phase = "head";
  }

  removePair(index: number): void {
    if (index >= 0 && index < this.pairs.length) this.pairs.splice(index, 1);
  }

  /** Only the five scale values are accepted. */
  setLikert(value: number): boolean {
    if (!Number.isInteger(value) || value < 1 || value > 5) return false;
    this.likert = value;
    return true;
  }

  canSubmit(): boolean {
    return this.likert !== null;
  }

  payload(): AnnotationPayload {
    if (this.likert === null) {
      throw new Error("cannot build a payload without a Likert score");
    }
    return {
      sent_id: this.sentId,
      annotator: this.annotator,
      gold_pairs: this.pairs.map((p) => ({ head: [...p.head], dep: [...p.dep] })),
      likert: this.likert,
    };
  }
}
