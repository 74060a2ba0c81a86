/** Error raised for any non-2xx reply, carrying the service's error code. */
export class ApiError extends Error {
    constructor(status, code, message) {
        super(message);
        this.name = "ApiError";
        this.status = status;
        this.code = code;
    }
}
async function request(url, init) {
    const response = await fetch(url, init);
    if (response.ok) {
        return (await response.json());
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
    }
    catch {
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
        listFilms(query = "", page = 1, pageSize = 50) {
            const params = new URLSearchParams({
                query,
                page: String(page),
                page_size: String(pageSize),
            });
            return request(`${base}/api/films?${params}`);
        },
        getFilm(id) {
            return request(`${base}/api/films/${encodeURIComponent(id)}`);
        },
        getPanel(id, unblind = false, k) {
            const params = new URLSearchParams();
            if (unblind)
                params.set("unblind", "true");
            if (k !== undefined)
                params.set("k", String(k));
            const suffix = params.size > 0 ? `?${params}` : "";
            return request(`${base}/api/films/${encodeURIComponent(id)}/panel${suffix}`);
        },
        getExplanation(inputId, outputId) {
            return request(`${base}/api/films/${encodeURIComponent(inputId)}/explain/${encodeURIComponent(outputId)}`);
        },
        postJudgment(body) {
            return request(`${base}/api/judgments`, {
                method: "POST",
                headers: { "content-type": "application/json" },
                body: JSON.stringify(body),
            });
        },
        getReport() {
            return request(`${base}/api/reports/coherence`);
        },
        putWeights(config) {
            return request(`${base}/api/config/weights`, {
                method: "PUT",
                headers: { "content-type": "application/json" },
                body: JSON.stringify(config),
            });
        },
    };
}
