import { ApiError, createApi } from "./api.js";
import { createRequestGate } from "./gate.js";
import { controlOf, freshSession, isJudgeable, judgmentBody, sessionComplete, } from "./state.js";
import { renderBanner, renderExplanation, renderExplanationError, renderFilmList, renderPanel, renderReport, renderWeights, } from "./render.js";
const api = createApi();
const panelGate = createRequestGate();
const searchGate = createRequestGate();
let state = freshSession("subscriber-1");
let retryAction = null;
// =============================================================
// element refs
// =============================================================
function el(id) {
    const node = document.getElementById(id);
    if (node === null)
        throw new Error(`missing element #${id}`);
    return node;
}
const searchInput = el("search");
const subscriberInput = el("subscriber");
const researcherToggle = el("researcher");
const bannerBox = el("banner");
const filmListBox = el("film-list");
const panelBox = el("panel");
const explanationBox = el("explanation");
const reportBox = el("report");
const weightsBox = el("weights");
// =============================================================
// rendering
// =============================================================
function paintBanner() {
    bannerBox.innerHTML = renderBanner(state.banner, state.notice);
}
function paintPanel() {
    panelBox.innerHTML = renderPanel(state);
}
function paintWeights() {
    weightsBox.innerHTML = renderWeights(state);
}
function showError(message, retry) {
    state.banner = { message, retryable: retry !== null };
    retryAction = retry;
    paintBanner();
}
function showNotice(message) {
    state.notice = message;
    paintBanner();
}
function clearBanner() {
    state.banner = null;
    state.notice = null;
    retryAction = null;
    paintBanner();
}
// =============================================================
// data flows
// =============================================================
async function refreshFilmList() {
    const query = searchInput.value.trim();
    const ticket = searchGate.issue();
    try {
        const page = await api.listFilms(query);
        if (!searchGate.isCurrent(ticket))
            return;
        filmListBox.innerHTML = renderFilmList(page.films, query);
    }
    catch (exc) {
        if (!searchGate.isCurrent(ticket))
            return;
        showError(describe(exc), refreshFilmList);
    }
}
async function refreshReport() {
    try {
        reportBox.innerHTML = renderReport(await api.getReport());
    }
    catch (exc) {
        showError(describe(exc), refreshReport);
    }
}
/** Fetch the panel for the current seed, dropping stale replies. */
async function loadPanel() {
    const seed = state.seed;
    if (seed === null)
        return;
    const ticket = panelGate.issue();
    try {
        const panel = await api.getPanel(seed, state.researcherMode);
        const ids = [panel.input, ...panel.presented];
        const details = await Promise.all(ids.map((id) => api.getFilm(id)));
        if (!panelGate.isCurrent(ticket))
            return;
        state.panel = panel;
        state.titles = {};
        for (const film of details)
            state.titles[film.id] = film.title;
        explanationBox.innerHTML = "";
        paintPanel();
    }
    catch (exc) {
        if (!panelGate.isCurrent(ticket))
            return;
        showError(describe(exc), loadPanel);
    }
}
async function selectSeed(filmId) {
    state.seed = filmId;
    state.verdicts = {};
    state.pending = {};
    clearBanner();
    await loadPanel();
}
async function submitVerdict(filmId, verdict) {
    if (!isJudgeable(state, filmId))
        return;
    const body = judgmentBody(state, filmId, verdict, crypto.randomUUID());
    // optimistic: mark in flight now, settle or roll back on reply
    state.pending[filmId] = verdict;
    paintPanel();
    try {
        await api.postJudgment(body);
        delete state.pending[filmId];
        state.verdicts[filmId] = verdict;
    }
    catch (exc) {
        delete state.pending[filmId];
        if (exc instanceof ApiError && exc.code === "duplicate_judgment") {
            state.verdicts[filmId] = verdict;
            showNotice("verdict was already recorded, nothing sent");
        }
        else {
            showError(describe(exc), null);
        }
    }
    paintPanel();
    if (sessionComplete(state))
        await refreshReport();
}
async function showExplanation(filmId) {
    if (state.seed === null)
        return;
    const title = state.titles[filmId] ?? filmId;
    try {
        const payload = await api.getExplanation(state.seed, filmId);
        explanationBox.innerHTML = renderExplanation(title, payload);
    }
    catch (exc) {
        if (exc instanceof ApiError &&
            exc.code === "no_control" &&
            state.panel !== null &&
            controlOf(state.panel) === filmId) {
            explanationBox.innerHTML = renderExplanation(title, {
                input: state.seed,
                output: filmId,
                shared: [],
                score: 0,
            });
            return;
        }
        explanationBox.innerHTML = renderExplanationError(describe(exc));
    }
}
async function applyWeights() {
    try {
        await api.putWeights(state.draft);
        clearBanner();
        await loadPanel();
    }
    catch (exc) {
        showError(describe(exc), null);
    }
}
function describe(exc) {
    if (exc instanceof ApiError)
        return `${exc.message} [${exc.code}]`;
    if (exc instanceof Error)
        return `service unreachable: ${exc.message}`;
    return String(exc);
}
// =============================================================
// event wiring
// =============================================================
function onClick(event) {
    const target = event.target.closest("[data-action]");
    if (target === null)
        return;
    const film = target.dataset.film ?? "";
    switch (target.dataset.action) {
        case "select":
            void selectSeed(film);
            break;
        case "judge":
            void submitVerdict(film, target.dataset.verdict);
            break;
        case "explain":
            void showExplanation(film);
            break;
        case "apply-weights":
            void applyWeights();
            break;
        case "retry": {
            const action = retryAction;
            clearBanner();
            if (action !== null)
                void action();
            break;
        }
        case "dismiss":
            clearBanner();
            break;
    }
}
function onInput(event) {
    const target = event.target;
    if (target === searchInput) {
        void refreshFilmList();
        return;
    }
    if (target.dataset.action === "weight") {
        const input = target;
        const facet = input.dataset.facet;
        state.draft.facet_weights[facet] = Number(input.value);
        const label = input.parentElement?.querySelector(".weight-value");
        if (label)
            label.textContent = Number(input.value).toFixed(2);
    }
}
function init() {
    document.addEventListener("click", onClick);
    document.addEventListener("input", onInput);
    subscriberInput.addEventListener("change", () => {
        state.subscriber = subscriberInput.value.trim() || "subscriber-1";
    });
    researcherToggle.addEventListener("change", () => {
        state.researcherMode = researcherToggle.checked;
        explanationBox.innerHTML = "";
        if (state.seed !== null)
            void loadPanel();
        else
            paintPanel();
    });
    paintPanel();
    paintWeights();
    void refreshFilmList();
    void refreshReport();
}
init();
