export const FACET_NAMES = [
    "filming_person",
    "filmed_person",
    "filmed_situation",
    "filmic_materials",
    "filmic_text",
    "audience",
];
export function freshDraft() {
    const weights = {};
    for (const facet of FACET_NAMES)
        weights[facet] = 1.0;
    return {
        metric: "cosine",
        ancestor_decay: 0.5,
        max_depth: null,
        facet_weights: weights,
    };
}
export function freshSession(subscriber) {
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
export function controlOf(panel) {
    if (panel.control !== undefined)
        return panel.control;
    const ranked = new Set(panel.recommended.map((r) => r.film));
    for (const id of panel.presented) {
        if (!ranked.has(id))
            return id;
    }
    return null;
}
/** A verdict button is live only for unjudged films of the current panel. */
export function isJudgeable(state, filmId) {
    if (state.panel === null)
        return false;
    if (!state.panel.presented.includes(filmId))
        return false;
    return !(filmId in state.verdicts) && !(filmId in state.pending);
}
export function sessionComplete(state) {
    if (state.panel === null)
        return false;
    return state.panel.presented.every((id) => id in state.verdicts);
}
export function judgmentBody(state, filmId, verdict, idempotencyKey) {
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
