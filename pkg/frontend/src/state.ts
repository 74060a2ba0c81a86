import type {
  FacetName,
  JudgmentBody,
  PanelPayload,
  Verdict,
  WeightsConfig,
} from "./types.js";

export const FACET_NAMES: readonly FacetName[] = [
  "filming_person",
  "filmed_person",
  "filmed_situation",
  "filmic_materials",
  "filmic_text",
  "audience",
];

export interface Banner {
  message: string;
  retryable: boolean;
}

/**
 * Everything one navigation session holds between renders: the seed film,
 * the panel currently on screen, verdicts already accepted by the server,
 * verdicts still in flight, and the weight draft the sliders edit.
 */
export interface SessionState {
  subscriber: string;
  seed: string | null;
  panel: PanelPayload | null;
  /** id -> display title for every film in the current panel */
  titles: Record<string, string>;
  researcherMode: boolean;
  verdicts: Record<string, Verdict>;
  pending: Record<string, Verdict>;
  draft: WeightsConfig;
  banner: Banner | null;
  notice: string | null;
}

export function freshDraft(): WeightsConfig {
  const weights = {} as Record<FacetName, number>;
  for (const facet of FACET_NAMES) weights[facet] = 1.0;
  return {
    metric: "cosine",
    ancestor_decay: 0.5,
    max_depth: null,
    facet_weights: weights,
  };
}

export function freshSession(subscriber: string): SessionState {
  return {
    subscriber,
    seed: null,
    panel: null,
    titles: {},
    researcherMode: false,
    verdicts: {},
    pending: {},
    draft: freshDraft(),
    banner: null,
    notice: null,
  };
}

/**
 * Identify the control entry. Unblinded panels name it outright; blinded
 * ones still carry the recommended ids, so the control is the one
 * presented film that is not among them.
 */
export function controlOf(panel: PanelPayload): string | null {
  if (panel.control !== undefined) return panel.control;
  const ranked = new Set(panel.recommended.map((r) => r.film));
  for (const id of panel.presented) {
    if (!ranked.has(id)) return id;
  }
  return null;
}

/** A verdict button is live only for unjudged films of the current panel. */
export function isJudgeable(state: SessionState, filmId: string): boolean {
  if (state.panel === null) return false;
  if (!state.panel.presented.includes(filmId)) return false;
  return !(filmId in state.verdicts) && !(filmId in state.pending);
}

export function sessionComplete(state: SessionState): boolean {
  if (state.panel === null) return false;
  return state.panel.presented.every((id) => id in state.verdicts);
}

export function judgmentBody(
  state: SessionState,
  filmId: string,
  verdict: Verdict,
  idempotencyKey: string,
): JudgmentBody {
  if (state.panel === null || state.seed === null) {
    throw new Error("no panel on screen");
  }
  return {
    subscriber: state.subscriber,
    input: state.seed,
    output: filmId,
    verdict,
    is_control: controlOf(state.panel) === filmId,
    note: null,
    idempotency_key: idempotencyKey,
  };
}
