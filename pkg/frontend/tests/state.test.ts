import { describe, expect, it } from "vitest";
import {
  FACET_NAMES,
  controlOf,
  freshDraft,
  freshSession,
  isJudgeable,
  judgmentBody,
  sessionComplete,
} from "../src/state.js";
import type { SessionState } from "../src/state.js";
import type { PanelPayload } from "../src/types.js";

function blindPanel(): PanelPayload {
  return {
    input: "seed",
    recommended: [
      { film: "alpha", score: 0.9 },
      { film: "bravo", score: 0.8 },
      { film: "delta", score: 0.7 },
      { film: "echo", score: 0.6 },
    ],
    presented: ["alpha", "bravo", "charlie", "delta", "echo"],
    explanations: {},
  };
}

function sessionWith(panel: PanelPayload | null): SessionState {
  const state = freshSession("s01");
  state.seed = panel ? panel.input : null;
  state.panel = panel;
  return state;
}

describe("controlOf", () => {
  it("prefers the explicit control of an unblinded panel", () => {
    const panel = { ...blindPanel(), control: "charlie" };
    expect(controlOf(panel)).toBe("charlie");
  });

  it("derives the control from a blinded panel by elimination", () => {
    expect(controlOf(blindPanel())).toBe("charlie");
  });

  it("returns null when every presented film is ranked", () => {
    const panel = blindPanel();
    panel.presented = panel.recommended.map((r) => r.film);
    expect(controlOf(panel)).toBeNull();
  });
});

describe("isJudgeable", () => {
  it("accepts an unjudged film of the current panel", () => {
    expect(isJudgeable(sessionWith(blindPanel()), "bravo")).toBe(true);
  });

  it("rejects films outside the current panel", () => {
    expect(isJudgeable(sessionWith(blindPanel()), "zulu")).toBe(false);
    expect(isJudgeable(sessionWith(blindPanel()), "seed")).toBe(false);
  });

  it("rejects films already judged or in flight", () => {
    const state = sessionWith(blindPanel());
    state.verdicts["alpha"] = "coherent";
    state.pending["bravo"] = "incoherent";
    expect(isJudgeable(state, "alpha")).toBe(false);
    expect(isJudgeable(state, "bravo")).toBe(false);
    expect(isJudgeable(state, "charlie")).toBe(true);
  });

  it("rejects everything without a panel", () => {
    expect(isJudgeable(sessionWith(null), "alpha")).toBe(false);
  });
});

describe("sessionComplete", () => {
  it("is false while any presented film lacks a verdict", () => {
    const state = sessionWith(blindPanel());
    for (const id of ["alpha", "bravo", "charlie", "delta"]) {
      state.verdicts[id] = "coherent";
    }
    expect(sessionComplete(state)).toBe(false);
  });

  it("is true once all five verdicts are recorded", () => {
    const state = sessionWith(blindPanel());
    for (const id of state.panel!.presented) state.verdicts[id] = "coherent";
    expect(sessionComplete(state)).toBe(true);
  });

  it("pending verdicts do not count", () => {
    const state = sessionWith(blindPanel());
    for (const id of state.panel!.presented) state.pending[id] = "coherent";
    expect(sessionComplete(state)).toBe(false);
  });
});

describe("judgmentBody", () => {
  it("marks the derived control even on a blinded panel", () => {
    const state = sessionWith(blindPanel());
    const body = judgmentBody(state, "charlie", "incoherent", "key-7");
    expect(body.is_control).toBe(true);
    expect(body.input).toBe("seed");
    expect(body.output).toBe("charlie");
    expect(body.verdict).toBe("incoherent");
    expect(body.idempotency_key).toBe("key-7");
    expect(body.note).toBeNull();
  });

  it("marks ranked films as non-control", () => {
    const state = sessionWith(blindPanel());
    expect(judgmentBody(state, "alpha", "coherent", "k").is_control).toBe(false);
  });

  it("carries the session subscriber", () => {
    const state = sessionWith(blindPanel());
    state.subscriber = "reviewer-9";
    expect(judgmentBody(state, "alpha", "coherent", "k").subscriber).toBe("reviewer-9");
  });

  it("refuses to build a body without a panel", () => {
    expect(() => judgmentBody(sessionWith(null), "alpha", "coherent", "k")).toThrow();
  });
});

describe("weight draft", () => {
  it("starts with all six facets at 1.0", () => {
    const draft = freshDraft();
    expect(Object.keys(draft.facet_weights).sort()).toEqual([...FACET_NAMES].sort());
    for (const facet of FACET_NAMES) expect(draft.facet_weights[facet]).toBe(1.0);
    expect(draft.metric).toBe("cosine");
    expect(draft.ancestor_decay).toBe(0.5);
    expect(draft.max_depth).toBeNull();
  });

  it("editing the draft leaves the session config untouched until applied", () => {
    const state = freshSession("s01");
    state.draft.facet_weights.audience = 3;
    expect(freshDraft().facet_weights.audience).toBe(1.0);
  });
});
