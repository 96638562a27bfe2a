/** Wire types mirroring the backend's task and annotation schemas. */

export interface TaskToken {
  id: number;
  form: string;
  upos: string;
}

/** One silver swap record: verb-patterner span + object-patterner spans. */
export interface SilverSpan {
  head: number[];
  deps: number[][];
}

export interface Task {
  sent_id: string;
  pair_type: string;
  language: string;
  tokens: TaskToken[];
  text: string;
  silver: SilverSpan[];
}

export interface NextTaskResponse {
  task: Task | null;
  done: boolean;
}

export interface GoldPair {
  head: number[];
  dep: number[];
}

export interface AnnotationPayload {
  sent_id: string;
  annotator: string;
  gold_pairs: GoldPair[];
  likert: number;
  comment?: string;
}

export interface Report {
  pair_type: string;
  weighting: string;
  precision: number | null;
  recall: number | null;
  mean_likert: number | null;
  n_sentences: number;
  n_silver: number;
  n_gold: number;
  n_correct: number;
}

export interface Progress {
  total: number;
  annotated: number;
  remaining: number;
  per_annotator: Record<string, number>;
}

/** The five-point validity scale shown next to the radio buttons. */
export const LIKERT_SCALE: ReadonlyArray<{ value: number; label: string }> = [
  { value: 1, label: "All or most swaps have serious errors" },
  { value: 2, label: "A few serious errors or several small errors" },
  { value: 3, label: "A few small errors" },
  { value: 4, label: "A minor error or less likely but valid changes" },
  { value: 5, label: "Perfect" },
];
