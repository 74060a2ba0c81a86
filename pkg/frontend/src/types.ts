/** Shapes exchanged with the recommendation service, mirrored field for field. */

export type FacetName =
  | "filming_person"
  | "filmed_person"
  | "filmed_situation"
  | "filmic_materials"
  | "filmic_text"
  | "audience";

export type Verdict = "coherent" | "incoherent";

export interface FilmSummary {
  id: string;
  title: string;
  director: string;
  year: number;
}

export interface FilmsPage {
  films: FilmSummary[];
  total: number;
  page: number;
  page_size: number;
}

export interface FilmDetail extends FilmSummary {
  duration_min: number;
  synopsis: string;
  descriptors: string[];
}

export interface SharedConcept {
  id: string;
  label: string;
  definition: string;
  facet: FacetName;
}

export interface Explanation {
  shared: SharedConcept[];
  score: number;
}

export interface RankedFilm {
  film: string;
  score: number;
}

/**
 * One panel as served. `control` and its explanation entry are present
 * only when the panel was requested unblinded.
 */
export interface PanelPayload {
  input: string;
  recommended: RankedFilm[];
  control?: string;
  presented: string[];
  explanations: Record<string, Explanation>;
}

export interface ExplainPayload {
  input: string;
  output: string;
  shared: SharedConcept[];
  score: number;
}

export interface SubscriberLine {
  n_judged: number;
  n_coherent: number;
  coherence_rate: number;
}

/** Rates are null until at least one qualifying judgment exists. */
export interface CoherenceReport {
  n_judged: number;
  n_coherent: number;
  coherence_rate: number | null;
  coherence_display: string | null;
  n_control: number;
  n_control_incoherent: number;
  control_detection: number | null;
  control_detection_display: string | null;
  per_subscriber: Record<string, SubscriberLine>;
}

export interface WeightsConfig {
  metric: "cosine" | "jaccard";
  ancestor_decay: number;
  max_depth: number | null;
  facet_weights: Record<FacetName, number>;
}

export interface JudgmentBody {
  subscriber: string;
  input: string;
  output: string;
  verdict: Verdict;
  is_control: boolean;
  note: string | null;
  idempotency_key: string;
}
