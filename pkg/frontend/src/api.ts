import type {
  CoherenceReport,
  ExplainPayload,
  FilmDetail,
  FilmsPage,
  JudgmentBody,
  PanelPayload,
  WeightsConfig,
} from "./types.js";

/** Error raised for any non-2xx reply, carrying the service's error code. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (response.ok) {
    return (await response.json()) as T;
  }
  // error envelope: {"error": {"code": ..., "message": ...}}
  let code = "error";
  let message = `request failed with status ${response.status}`;
  try {
    const body = await response.json();
    if (body && typeof body === "object" && body.error) {
      code = String(body.error.code ?? code);
      message = String(body.error.message ?? message);
    }
  } catch {
    // non-JSON error body, keep the fallback message
  }
  throw new ApiError(response.status, code, message);
}

/**
 * Client for the recommendation service. All similarity work happens on
 * the server; this module only moves JSON back and forth.
 */
export function createApi(base = "") {
  return {
    listFilms(query = "", page = 1, pageSize = 50): Promise<FilmsPage> {
      const params = new URLSearchParams({
        query,
        page: String(page),
        page_size: String(pageSize),
      });
      return request<FilmsPage>(`${base}/api/films?${params}`);
    },

    getFilm(id: string): Promise<FilmDetail> {
      return request<FilmDetail>(`${base}/api/films/${encodeURIComponent(id)}`);
    },

    getPanel(id: string, unblind = false, k?: number): Promise<PanelPayload> {
      const params = new URLSearchParams();
      if (unblind) params.set("unblind", "true");
      if (k !== undefined) params.set("k", String(k));
      const suffix = params.size > 0 ? `?${params}` : "";
      return request<PanelPayload>(
        `${base}/api/films/${encodeURIComponent(id)}/panel${suffix}`,
      );
    },

    getExplanation(inputId: string, outputId: string): Promise<ExplainPayload> {
      return request<ExplainPayload>(
        `${base}/api/films/${encodeURIComponent(inputId)}/explain/${encodeURIComponent(outputId)}`,
      );
    },

    postJudgment(body: JudgmentBody): Promise<{ id: string }> {
      return request<{ id: string }>(`${base}/api/judgments`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    },

    getReport(): Promise<CoherenceReport> {
      return request<CoherenceReport>(`${base}/api/reports/coherence`);
    },

    putWeights(config: WeightsConfig): Promise<WeightsConfig> {
      return request<WeightsConfig>(`${base}/api/config/weights`, {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(config),
      });
    },
  };
}

export type Api = ReturnType<typeof createApi>;
