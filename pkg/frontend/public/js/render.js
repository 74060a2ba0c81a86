import { FACET_NAMES, isJudgeable, sessionComplete } from "./state.js";
// Every function here turns state into an HTML string. Nothing in this
// module talks to the network or reads the DOM, so the whole surface can
// be asserted on as text.
export const FACET_COLORS = {
    filming_person: "#6750a4",
    filmed_person: "#0b6e4f",
    filmed_situation: "#b3541e",
    filmic_materials: "#1565c0",
    filmic_text: "#8e244d",
    audience: "#5d4037",
};
export function escapeHtml(text) {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;")
        .replace(/'/g, "&#39;");
}
// ── catalog search ──────────────────────────────────────────────
export function renderFilmList(films, query) {
    if (films.length === 0) {
        const hint = query
            ? `no films match ${escapeHtml(JSON.stringify(query))}`
            : "no films in the catalog";
        return `<p class="empty">${hint}</p>`;
    }
    const rows = films
        .map((f) => `
  <li>
    <button type="button" data-action="select" data-film="${escapeHtml(f.id)}">
      <span class="film-title">${escapeHtml(f.title)}</span>
      <span class="film-meta">${escapeHtml(f.director)}, ${f.year}</span>
    </button>
  </li>`)
        .join("");
    return `<ul class="film-list">${rows}\n</ul>`;
}
// ── panel ───────────────────────────────────────────────────────
function verdictCell(state, filmId) {
    const recorded = state.verdicts[filmId];
    if (recorded !== undefined) {
        return `<span class="verdict verdict-${recorded}">${recorded}</span>`;
    }
    if (filmId in state.pending) {
        return `<span class="verdict verdict-pending">saving&hellip;</span>`;
    }
    const live = isJudgeable(state, filmId);
    const disabled = live ? "" : " disabled";
    return (`<button type="button" data-action="judge" data-film="${escapeHtml(filmId)}"` +
        ` data-verdict="coherent"${disabled}>coherent</button>` +
        `<button type="button" data-action="judge" data-film="${escapeHtml(filmId)}"` +
        ` data-verdict="incoherent"${disabled}>incoherent</button>`);
}
function panelRow(state, filmId) {
    const panel = state.panel;
    const title = state.titles[filmId] ?? filmId;
    // researcher extras: score or control marker, plus explanation access.
    // Blind rows carry none of them, so all five look alike.
    let extras = "";
    if (state.researcherMode) {
        const ranked = panel.recommended.find((r) => r.film === filmId);
        const marker = ranked
            ? `<span class="panel-score">${ranked.score.toFixed(3)}</span>`
            : `<span class="panel-tag">control</span>`;
        extras =
            marker +
                `<button type="button" data-action="explain" data-film="${escapeHtml(filmId)}">why?</button>`;
    }
    return (`\n  <li class="panel-row" data-film="${escapeHtml(filmId)}">` +
        `<span class="panel-title">${escapeHtml(title)}</span>` +
        extras +
        `<span class="panel-actions">${verdictCell(state, filmId)}</span>` +
        `</li>`);
}
export function renderPanel(state) {
    if (state.panel === null) {
        return `<p class="empty">pick a seed film to receive a panel</p>`;
    }
    const seedTitle = state.titles[state.panel.input] ?? state.panel.input;
    const rows = state.panel.presented
        .map((id) => panelRow(state, id))
        .join("");
    const summary = sessionComplete(state)
        ? `\n<p class="session-complete">session complete: all ${state.panel.presented.length} verdicts recorded</p>`
        : "";
    return (`<h3>panel for ${escapeHtml(seedTitle)}</h3>` +
        `<ol class="panel">${rows}\n</ol>` +
        summary);
}
// ── explanation ─────────────────────────────────────────────────
function facetBadge(facet) {
    const color = FACET_COLORS[facet] ?? "#444";
    return `<span class="facet-badge" style="background:${color}">${escapeHtml(facet)}</span>`;
}
export function renderExplanation(title, payload) {
    const heading = `<h3>shared with ${escapeHtml(title)}</h3>`;
    if (payload.shared.length === 0) {
        return `${heading}<p class="empty">no shared descriptors</p>`;
    }
    const items = payload.shared
        .map((c) => `
  <li>
    ${facetBadge(c.facet)}
    <strong>${escapeHtml(c.label)}</strong>
    <span class="definition">${escapeHtml(c.definition)}</span>
  </li>`)
        .join("");
    return (heading +
        `<p class="explain-score">similarity ${payload.score.toFixed(3)}</p>` +
        `<ul class="shared-concepts">${items}\n</ul>`);
}
export function renderExplanationError(message) {
    return `<p class="inline-error">could not load explanation: ${escapeHtml(message)}</p>`;
}
// ── reception report ────────────────────────────────────────────
export function renderReport(report) {
    if (report === null) {
        return `<p class="empty">no report yet</p>`;
    }
    const rate = report.coherence_display === null
        ? "n/a"
        : escapeHtml(report.coherence_display);
    const detection = report.control_detection_display === null
        ? "n/a"
        : escapeHtml(report.control_detection_display);
    return `<dl class="report">
  <dt>non-control judged</dt><dd data-field="n_judged">${report.n_judged}</dd>
  <dt>coherent</dt><dd data-field="n_coherent">${report.n_coherent}</dd>
  <dt>coherence rate</dt><dd data-field="coherence">${rate}</dd>
  <dt>control judged</dt><dd data-field="n_control">${report.n_control}</dd>
  <dt>control spotted</dt><dd data-field="detection">${detection}</dd>
</dl>`;
}
// ── weight sliders ──────────────────────────────────────────────
export function renderWeights(state) {
    const rows = FACET_NAMES.map((facet) => {
        const value = state.draft.facet_weights[facet];
        return `
  <label class="weight-row">
    <span>${escapeHtml(facet)}</span>
    <input type="range" min="0" max="3" step="0.25" value="${value}"
      data-action="weight" data-facet="${facet}">
    <span class="weight-value">${value.toFixed(2)}</span>
  </label>`;
    }).join("");
    return (`<div class="weights">${rows}\n</div>` +
        `<button type="button" data-action="apply-weights">apply weights</button>`);
}
// ── banners and notices ─────────────────────────────────────────
export function renderBanner(banner, notice) {
    if (banner !== null) {
        const retry = banner.retryable
            ? `<button type="button" data-action="retry">retry</button>`
            : "";
        return (`<div class="banner banner-error">${escapeHtml(banner.message)}${retry}` +
            `<button type="button" data-action="dismiss">dismiss</button></div>`);
    }
    if (notice !== null) {
        return `<div class="banner banner-notice">${escapeHtml(notice)}<button type="button" data-action="dismiss">dismiss</button></div>`;
    }
    return "";
}
