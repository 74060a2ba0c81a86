import { ApiError, createApi } from "./api.js";
import { createRequestGate } from "./gate.js";
import {
  controlOf,
  freshSession,
  isJudgeable,
  judgmentBody,
  sessionComplete,
} from "./state.js";
import type { SessionState } from "./state.js";
import type { Verdict } from "./types.js";
import {
  renderBanner,
  renderExplanation,
  renderExplanationError,
  renderFilmList,
  renderPanel,
  renderReport,
  renderWeights,
} from "./render.js";

const api = createApi();
const panelGate = createRequestGate();
const searchGate = createRequestGate();

let state: SessionState = freshSession("subscriber-1");
let retryAction: (() => Promise<void>) | null = null;

// =============================================================
// element refs
// =============================================================

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

const searchInput = el<HTMLInputElement>("search");
const subscriberInput = el<HTMLInputElement>("subscriber");
const researcherToggle = el<HTMLInputElement>("researcher");
const bannerBox = el<HTMLElement>("banner");
const filmListBox = el<HTMLElement>("film-list");
const panelBox = el<HTMLElement>("panel");
const explanationBox = el<HTMLElement>("explanation");
const reportBox = el<HTMLElement>("report");
const weightsBox = el<HTMLElement>("weights");

// =============================================================
// rendering
// =============================================================

function paintBanner(): void {
  bannerBox.innerHTML = renderBanner(state.banner, state.notice);
}

function paintPanel(): void {
  panelBox.innerHTML = renderPanel(state);
}

function paintWeights(): void {
  weightsBox.innerHTML = renderWeights(state);
}

function showError(message: string, retry: (() => Promise<void>) | null): void {
  state.banner = { message, retryable: retry !== null };
  retryAction = retry;
  paintBanner();
}

function showNotice(message: string): void {
  state.notice = message;
  paintBanner();
}

function clearBanner(): void {
  state.banner = null;
  state.notice = null;
  retryAction = null;
  paintBanner();
}

// =============================================================
// data flows
// =============================================================

async function refreshFilmList(): Promise<void> {
  const query = searchInput.value.trim();
  const ticket = searchGate.issue();
  try {
    const page = await api.listFilms(query);
    if (!searchGate.isCurrent(ticket)) return;
    filmListBox.innerHTML = renderFilmList(page.films, query);
  } catch (exc) {
    if (!searchGate.isCurrent(ticket)) return;
    showError(describe(exc), refreshFilmList);
  }
}

async function refreshReport(): Promise<void> {
  try {
    reportBox.innerHTML = renderReport(await api.getReport());
  } catch (exc) {
    showError(describe(exc), refreshReport);
  }
}

/** Fetch the panel for the current seed, dropping stale replies. */
async function loadPanel(): Promise<void> {
  const seed = state.seed;
  if (seed === null) return;
  const ticket = panelGate.issue();
  try {
    const panel = await api.getPanel(seed, state.researcherMode);
    const ids = [panel.input, ...panel.presented];
    const details = await Promise.all(ids.map((id) => api.getFilm(id)));
    if (!panelGate.isCurrent(ticket)) return;
    state.panel = panel;
    state.titles = {};
    for (const film of details) state.titles[film.id] = film.title;
    explanationBox.innerHTML = "";
    paintPanel();
  } catch (exc) {
    if (!panelGate.isCurrent(ticket)) return;
    showError(describe(exc), loadPanel);
  }
}

async function selectSeed(filmId: string): Promise<void> {
  state.seed = filmId;
  state.verdicts = {};
  state.pending = {};
  clearBanner();
  await loadPanel();
}

async function submitVerdict(filmId: string, verdict: Verdict): Promise<void> {
  if (!isJudgeable(state, filmId)) return;
  const body = judgmentBody(state, filmId, verdict, crypto.randomUUID());
  // optimistic: mark in flight now, settle or roll back on reply
  state.pending[filmId] = verdict;
  paintPanel();
  try {
    await api.postJudgment(body);
    delete state.pending[filmId];
    state.verdicts[filmId] = verdict;
  } catch (exc) {
    delete state.pending[filmId];
    if (exc instanceof ApiError && exc.code === "duplicate_judgment") {
      state.verdicts[filmId] = verdict;
      showNotice("verdict was already recorded, nothing sent");
    } else {
      showError(describe(exc), null);
    }
  }
  paintPanel();
  if (sessionComplete(state)) await refreshReport();
}

async function showExplanation(filmId: string): Promise<void> {
  if (state.seed === null) return;
  const title = state.titles[filmId] ?? filmId;
  try {
    const payload = await api.getExplanation(state.seed, filmId);
    explanationBox.innerHTML = renderExplanation(title, payload);
  } catch (exc) {
    if (
      exc instanceof ApiError &&
      exc.code === "no_control" &&
      state.panel !== null &&
      controlOf(state.panel) === filmId
    ) {
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

async function applyWeights(): Promise<void> {
  try {
    await api.putWeights(state.draft);
    clearBanner();
    await loadPanel();
  } catch (exc) {
    showError(describe(exc), null);
  }
}

function describe(exc: unknown): string {
  if (exc instanceof ApiError) return `${exc.message} [${exc.code}]`;
  if (exc instanceof Error) return `service unreachable: ${exc.message}`;
  return String(exc);
}

// =============================================================
// event wiring
// =============================================================

function onClick(event: Event): void {
  const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
  if (target === null) return;
  const film = target.dataset.film ?? "";
  switch (target.dataset.action) {
    case "select":
      void selectSeed(film);
      break;
    case "judge":
      void submitVerdict(film, target.dataset.verdict as Verdict);
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
      if (action !== null) void action();
      break;
    }
    case "dismiss":
      clearBanner();
      break;
  }
}

function onInput(event: Event): void {
  const target = event.target as HTMLElement;
  if (target === searchInput) {
    void refreshFilmList();
    return;
  }
  if (target.dataset.action === "weight") {
    const input = target as HTMLInputElement;
    const facet = input.dataset.facet as keyof typeof state.draft.facet_weights;
    state.draft.facet_weights[facet] = Number(input.value);
    const label = input.parentElement?.querySelector(".weight-value");
    if (label) label.textContent = Number(input.value).toFixed(2);
  }
}

function init(): void {
  document.addEventListener("click", onClick);
  document.addEventListener("input", onInput);
  subscriberInput.addEventListener("change", () => {
    state.subscriber = subscriberInput.value.trim() || "subscriber-1";
  });
  researcherToggle.addEventListener("change", () => {
    state.researcherMode = researcherToggle.checked;
    explanationBox.innerHTML = "";
    if (state.seed !== null) void loadPanel();
    else paintPanel();
  });
  paintPanel();
  paintWeights();
  void refreshFilmList();
  void refreshReport();
}

init();
