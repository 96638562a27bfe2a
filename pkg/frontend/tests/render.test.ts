import { describe, expect, it } from "vitest";

import { AnnotationDraft } from "../src/selection.js";
import {
  renderGoldPairs,
  renderLikert,
  renderSilverSummary,
  renderTokens,
} from "../src/render.js";
import { LIKERT_SCALE, type Task } from "../src/types.js";

const EN_TASK: Task = {
  sent_id: "s1",
  pair_type: "adp-np",
  language: "en",
  tokens: [
    { id: 1, form: "season", upos: "NOUN" },
    { id: 2, form: "of", upos: "ADP" },
    { id: 3, form: "strawberries", upos: "NOUN" },
    { id: 4, form: "from", upos: "ADP" },
    { id: 5, form: "july", upos: "PROPN" },
    { id: 6, form: "to", upos: "ADP" },
    { id: 7, form: "august", upos: "PROPN" },
  ],
  text: "season of strawberries from july to august",
  silver: [
    { head: [2], deps: [[3]] },
    { head: [4], deps: [[5]] },
    { head: [6], deps: [[7]] },
  ],
};

const JA_TASK: Task = {
  sent_id: "j1",
  pair_type: "aux-v",
  language: "ja",
  tokens: [
    { id: 1, form: "tsudui", upos: "VERB" },
    { id: 2, form: "teiru", upos: "AUX" },
  ],
  text: "tsuduiteiru",
  silver: [],
};

describe("renderTokens", () => {
  it("highlights one head/dep group per silver pair", () => {
    const html = renderTokens(EN_TASK, new AnnotationDraft("s1", "a1"));
    expect(html.match(/silver-head/g)).toHaveLength(3);
    expect(html.match(/silver-dep/g)).toHaveLength(3);
    for (const group of ["silver-group-0", "silver-group-1", "silver-group-2"]) {
      expect(html.match(new RegExp(group, "g"))).toHaveLength(2);
    }
  });

  it("marks the in-progress selection", () => {
    const draft = new AnnotationDraft("s1", "a1");
    draft.toggleToken(2);
    draft.confirmHead();
    draft.toggleToken(3);
    const html = renderTokens(EN_TASK, draft);
    expect(html).toContain("picked-head");
    expect(html).toContain("picked-dep");
  });

  it("keeps per-token click targets with no separator for Japanese", () => {
    const html = renderTokens(JA_TASK, new AnnotationDraft("j1", "a1"));
    expect(html.match(/data-token-id/g)).toHaveLength(2);
    expect(html).toContain("</button><button"); // concatenated, no space
  });

  it("separates English tokens with spaces", () => {
    const html = renderTokens(EN_TASK, new AnnotationDraft("s1", "a1"));
    expect(html).toContain("</button> <button");
  });

  it("escapes token forms", () => {
    const task: Task = {
      ...JA_TASK,
      tokens: [{ id: 1, form: "<b>", upos: "X" }],
      silver: [],
    };
    const html = renderTokens(task, new AnnotationDraft("j1", "a1"));
    expect(html).toContain("&lt;b&gt;");
    expect(html).not.toContain("<b>");
  });
});

describe("renderSilverSummary", () => {
  it("lists each silver pair with its surface forms", () => {
    const html = renderSilverSummary(EN_TASK);
    expect(html.match(/<li/g)).toHaveLength(3);
    expect(html).toContain("of");
    expect(html).toContain("strawberries");
  });

  it("says so when there is nothing silver", () => {
    expect(renderSilverSummary(JA_TASK)).toContain("No silver swaps");
  });
});

describe("renderLikert", () => {
  it("renders exactly the five scale values with their descriptions", () => {
    const html = renderLikert(new AnnotationDraft("s1", "a1"));
    expect(html.match(/type="radio"/g)).toHaveLength(5);
    for (const { label } of LIKERT_SCALE) {
      expect(html).toContain(label);
    }
    expect(html).not.toContain('value="6"');
  });

  it("checks the chosen value", () => {
    const draft = new AnnotationDraft("s1", "a1");
    draft.setLikert(3);
    const html = renderLikert(draft);
    expect(html).toContain('value="3" checked');
  });
});

describe("renderGoldPairs", () => {
  it("shows committed pairs with remove buttons", () => {
    const draft = new AnnotationDraft("s1", "a1");
    draft.toggleToken(2);
    draft.confirmHead();
    draft.toggleToken(3);
    draft.confirmPair();
    const html = renderGoldPairs(draft, EN_TASK);
    expect(html).toContain("&lt;of, strawberries&gt;");
    expect(html).toContain('data-pair-index="0"');
  });

  it("notes that an empty list is valid", () => {
    const html = renderGoldPairs(new AnnotationDraft("s1", "a1"), EN_TASK);
    expect(html).toContain("valid answer");
  });
});
