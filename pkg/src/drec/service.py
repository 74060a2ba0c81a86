"""HTTP face of the engine: catalog browsing, panels, explanations,
judgment recording, reports, weight configuration.

State is an immutable thesaurus + catalog loaded at startup, one mutable
weighting config swapped atomically, and an append-only judgment store
persisted as JSON-lines (the same format the evaluation module reads).
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError

from .catalog import Catalog, WeightingConfig, ingest_catalog
from .errors import (
    ConfigError,
    DrecError,
    DuplicateJudgmentError,
    NoControlError,
    NotFoundError,
    ParseError,
    ValidationError,
)
from .evaluation import (
    CoherenceJudgment,
    coherence_report_dict,
    judgment_to_dict,
    parse_judgment_obj,
)
from .recommender import compose_panel_list, explain, explanation_to_dict, panel_json
from .thesaurus import Thesaurus, parse_thesaurus

DEFAULT_PORT = 8080

_STATUS_BY_ERROR = (
    (NotFoundError, 404),
    (NoControlError, 409),
    (DuplicateJudgmentError, 409),
    (DrecError, 400),  # validation, parse, config, capacity
)


def _error_response(code: str, message: str, status: int) -> Response:
    body = json.dumps({"error": {"code": code, "message": message}},
                      ensure_ascii=False, separators=(",", ":"))
    return Response(content=body, status_code=status, media_type="application/json")


def _json_response(payload: dict | list, status: int = 200) -> Response:
    body = json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return Response(content=body, status_code=status, media_type="application/json")


class ServiceState:
    """Shared request-handler state.

    Judgment writes are serialized behind one lock; the active config is
    replaced by a single attribute assignment so a request never sees a
    torn config.
    """

    def __init__(self, thesaurus: Thesaurus, catalog: Catalog,
                 judgments_path: Path | None = None,
                 config: WeightingConfig | None = None):
        self.thesaurus = thesaurus
        self.catalog = catalog
        self.judgments_path = judgments_path
        self._config = config or WeightingConfig()
        self._write_lock = threading.Lock()
        self._judgments: list[CoherenceJudgment] = []
        self._seen_keys: set[str] = set()
        if judgments_path is not None and judgments_path.exists():
            self._load_store(judgments_path)

    def _load_store(self, path: Path) -> None:
        text = path.read_text(encoding="utf-8")
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            obj = json.loads(line)
            judgment, key = parse_judgment_obj(obj, locator=f"{path}:{line_no}")
            self._judgments.append(judgment)
            if key is not None:
                self._seen_keys.add(key)

    @property
    def config(self) -> WeightingConfig:
        return self._config

    def set_config(self, config: WeightingConfig) -> None:
        self._config = config

    def record_judgment(self, judgment: CoherenceJudgment, key: str) -> None:
        with self._write_lock:
            if key in self._seen_keys:
                raise DuplicateJudgmentError(f"idempotency key {key!r} already stored")
            if self.judgments_path is not None:
                line = json.dumps(judgment_to_dict(judgment, idempotency_key=key),
                                  ensure_ascii=False, separators=(",", ":"))
                with self.judgments_path.open("a", encoding="utf-8") as fh:
                    fh.write(line + "\n")
            self._judgments.append(judgment)
            self._seen_keys.add(key)

    def snapshot_judgments(self) -> list[CoherenceJudgment]:
        with self._write_lock:
            return list(self._judgments)


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="drec", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(DrecError)
    async def domain_error(request: Request, exc: DrecError) -> Response:
        for cls, status in _STATUS_BY_ERROR:
            if isinstance(exc, cls):
                return _error_response(exc.code, exc.message, status)
        return _error_response(exc.code, exc.message, 400)  # pragma: no cover

    @app.exception_handler(RequestValidationError)
    async def request_error(request: Request, exc: RequestValidationError) -> Response:
        return _error_response("validation_error", "invalid request parameters", 400)

    @app.get("/api/films")
    def list_films(query: str = "", page: int = 1, page_size: int = 50) -> Response:
        if page < 1 or page_size < 1:
            raise ValidationError("page and page_size must be positive")
        needle = query.casefold()
        hits = [
            f for f in state.catalog
            if needle in f.title.casefold() or needle in f.director.casefold()
        ]
        hits.sort(key=lambda f: (f.title.casefold(), f.title, f.id))
        start = (page - 1) * page_size
        summaries = [
            {"id": f.id, "title": f.title, "director": f.director, "year": f.year}
            for f in hits[start:start + page_size]
        ]
        return _json_response({
            "films": summaries,
            "total": len(hits),
            "page": page,
            "page_size": page_size,
        })

    @app.get("/api/films/{film_id}/panel")
    def get_panel(film_id: str, k: int = 4, unblind: bool = False) -> Response:
        if k < 1:
            raise ValidationError("k must be positive")
        panel = compose_panel_list(state.catalog, film_id, k, state.config)
        return Response(content=panel_json(panel, blind=not unblind),
                        media_type="application/json")

    @app.get("/api/films/{film_a}/explain/{film_b}")
    def get_explanation(film_a: str, film_b: str) -> Response:
        explanation = explain(state.catalog, film_a, film_b, state.config)
        payload = {"input": film_a, "output": film_b}
        payload.update(explanation_to_dict(explanation))
        return _json_response(payload)

    @app.get("/api/films/{film_id}")
    def get_film(film_id: str) -> Response:
        f = state.catalog.get(film_id)
        return _json_response({
            "id": f.id,
            "title": f.title,
            "director": f.director,
            "year": f.year,
            "duration_min": f.duration_min,
            "synopsis": f.synopsis,
            "descriptors": list(f.descriptors),
        })

    @app.post("/api/judgments")
    async def post_judgment(request: Request) -> Response:
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON body: {exc.msg}") from None
        judgment, key = parse_judgment_obj(body, locator="body")
        if key is None or not key:
            raise ValidationError("missing 'idempotency_key'")
        for fid in (judgment.input_film, judgment.output_film):
            if fid not in state.catalog:
                raise ValidationError(f"judgment references unknown film {fid!r}")
        state.record_judgment(judgment, key)
        return _json_response({"id": key}, status=201)

    @app.get("/api/reports/coherence")
    def get_report() -> Response:
        return _json_response(coherence_report_dict(state.snapshot_judgments()))

    @app.put("/api/config/weights")
    async def put_config(request: Request) -> Response:
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON body: {exc.msg}") from None
        config = WeightingConfig.from_dict(body)
        state.set_config(config)
        return _json_response(config.to_dict())

    ui_dir = os.environ.get("DREC_UI_DIR")
    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def state_from_env() -> ServiceState:
    """Build service state from DREC_THESAURUS / DREC_CATALOG /
    DREC_JUDGMENTS."""
    thesaurus_path = os.environ.get("DREC_THESAURUS")
    catalog_path = os.environ.get("DREC_CATALOG")
    if not thesaurus_path or not catalog_path:
        raise ConfigError("DREC_THESAURUS and DREC_CATALOG must be set")
    return build_state(Path(thesaurus_path), Path(catalog_path),
                       Path(os.environ["DREC_JUDGMENTS"])
                       if os.environ.get("DREC_JUDGMENTS") else None)


def build_state(thesaurus_path: Path, catalog_path: Path,
                judgments_path: Path | None = None,
                config: WeightingConfig | None = None) -> ServiceState:
    thesaurus = parse_thesaurus(thesaurus_path.read_bytes())
    catalog = ingest_catalog(catalog_path.read_bytes(), thesaurus)
    return ServiceState(thesaurus, catalog, judgments_path, config)


def main() -> None:  # pragma: no cover
    import uvicorn

    state = state_from_env()
    port = int(os.environ.get("DREC_PORT", DEFAULT_PORT))
    uvicorn.run(create_app(state), host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
