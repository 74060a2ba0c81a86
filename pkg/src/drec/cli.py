"""Command-line front end: validate, recommend, explain, evaluate,
matrix export, serve.

Exit statuses: 0 success, 1 validation or domain failure, 2 usage error
(click's own), 3 I/O error. Data goes to stdout, diagnostics to stderr.
``--json`` output is byte-identical to the HTTP service payloads.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from pathlib import Path

import click

from .catalog import Catalog, WeightingConfig, ingest_catalog
from .errors import DrecError, UndefinedRateError
from .evaluation import coherence_rate, load_judgments
from .recommender import (
    compose_panel_list,
    explain,
    explanation_to_dict,
    panel_json,
)
from .similarity import matrix_csv, pairwise_matrix
from .thesaurus import FACETS, Thesaurus, parse_thesaurus, validate_thesaurus

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_IO = 3


def guarded(f):
    """Map failures to the exit-status contract."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except DrecError as exc:
            click.echo(f"error [{exc.code}]: {exc.message}", err=True)
            sys.exit(EXIT_DOMAIN)
        except BrokenPipeError:
            # consumer closed stdout (head, a dying pager); park the fd on
            # /dev/null so the interpreter's exit flush stays quiet
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
            sys.exit(EXIT_IO)
        except OSError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO)

    return wrapper


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _load_config(path: str | None) -> WeightingConfig:
    if path is None:
        return WeightingConfig()
    return WeightingConfig.from_json(_read(path))


def _load_corpus(thesaurus_path: str, catalog_path: str) -> Catalog:
    thesaurus = parse_thesaurus(_read(thesaurus_path))
    return ingest_catalog(_read(catalog_path), thesaurus)


def _emit_json(payload: bytes) -> None:
    sys.stdout.buffer.write(payload)
    sys.stdout.buffer.flush()


@click.group()
def main() -> None:
    """Dispositif-based documentary recommendation toolkit."""


@main.command("validate")
@click.option("--thesaurus", "thesaurus_path", required=True, type=click.Path())
@click.option("--catalog", "catalog_path", type=click.Path(), default=None)
@click.option("--json", "as_json", is_flag=True, default=False)
@guarded
def cmd_validate(thesaurus_path: str, catalog_path: str | None, as_json: bool) -> None:
    """Check a thesaurus (and optionally a catalog) against every
    structural invariant."""
    thesaurus = parse_thesaurus(_read(thesaurus_path))
    violations = validate_thesaurus(thesaurus)
    report: dict = {
        "thesaurus": {
            "ok": not violations,
            "concepts": len(thesaurus),
            "facets": len(FACETS),
            "roots": len(thesaurus.roots),
            "violations": [
                {"code": v.code, "message": v.message, "concepts": list(v.concept_ids)}
                for v in violations
            ],
        }
    }
    catalog = None
    if catalog_path is not None:
        catalog = ingest_catalog(_read(catalog_path), thesaurus)
        report["catalog"] = {"ok": True, "films": len(catalog)}
    if as_json:
        _emit_json(json.dumps(report, ensure_ascii=False,
                              separators=(",", ":")).encode("utf-8"))
    else:
        status = "OK" if not violations else f"{len(violations)} violation(s)"
        click.echo(f"thesaurus: {status} ({len(thesaurus)} concepts, "
                   f"{len(thesaurus.roots)} roots)")
        for v in violations:
            click.echo(f"  {v.code}: {v.message}")
        if catalog is not None:
            click.echo(f"catalog: OK ({len(catalog)} films)")
    if violations:
        sys.exit(EXIT_DOMAIN)


@main.command("recommend")
@click.option("--thesaurus", "thesaurus_path", required=True, type=click.Path())
@click.option("--catalog", "catalog_path", required=True, type=click.Path())
@click.option("--film", "film_id", required=True)
@click.option("-k", "k", type=int, default=4, show_default=True)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--unblind", is_flag=True, default=False)
@click.option("--json", "as_json", is_flag=True, default=False)
@guarded
def cmd_recommend(thesaurus_path: str, catalog_path: str, film_id: str, k: int,
                  config_path: str | None, unblind: bool, as_json: bool) -> None:
    """Compose the k+1 panel list (k nearest dispositifs plus one
    zero-overlap control), presented alphabetically by title."""
    catalog = _load_corpus(thesaurus_path, catalog_path)
    config = _load_config(config_path)
    panel = compose_panel_list(catalog, film_id, k, config)
    if as_json:
        _emit_json(panel_json(panel, blind=not unblind))
        return
    scores = dict(panel.recommended)
    for fid in panel.presented:
        film = catalog.get(fid)
        if not unblind:
            click.echo(film.title)
            continue
        parts = [film.title]
        if fid == panel.control:
            parts.append("control")
        else:
            parts.append(f"score={scores[fid]:.9f}")
        shared = ",".join(panel.explanations[fid].shared_ids)
        parts.append(f"shared=[{shared}]")
        click.echo("  ".join(parts))


@main.command("explain")
@click.option("--thesaurus", "thesaurus_path", required=True, type=click.Path())
@click.option("--catalog", "catalog_path", required=True, type=click.Path())
@click.option("--film", "film_id", required=True)
@click.option("--other", "other_id", required=True)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--json", "as_json", is_flag=True, default=False)
@guarded
def cmd_explain(thesaurus_path: str, catalog_path: str, film_id: str,
                other_id: str, config_path: str | None, as_json: bool) -> None:
    """Show the shared descriptors and similarity score for one pair."""
    catalog = _load_corpus(thesaurus_path, catalog_path)
    config = _load_config(config_path)
    explanation = explain(catalog, film_id, other_id, config)
    if as_json:
        payload = {"input": film_id, "output": other_id}
        payload.update(explanation_to_dict(explanation))
        _emit_json(json.dumps(payload, ensure_ascii=False,
                              separators=(",", ":")).encode("utf-8"))
        return
    click.echo(f"score: {explanation.score:.9f}")
    if not explanation.shared:
        click.echo("no shared descriptors")
    for concept in explanation.shared:
        click.echo(f"  {concept.id} [{concept.facet.value}] {concept.pref_label}: "
                   f"{concept.definition}")


@main.command("evaluate")
@click.option("--judgments", "judgments_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True, default=False)
@click.option("--out", "out_path", type=click.Path(), default=None)
@guarded
def cmd_evaluate(judgments_path: str, as_json: bool, out_path: str | None) -> None:
    """Aggregate panel judgments into the reception report."""
    judgments = load_judgments(_read(judgments_path))
    try:
        report = coherence_rate(judgments)
    except UndefinedRateError:
        click.echo("error [undefined_rate]: no judgments", err=True)
        sys.exit(EXIT_DOMAIN)
    payload = json.dumps(report.to_dict(), ensure_ascii=False,
                         separators=(",", ":")).encode("utf-8")
    if out_path is not None:
        Path(out_path).write_bytes(payload)
    if as_json:
        _emit_json(payload)
        return
    click.echo(f"non-control judged: {report.n_judged}")
    click.echo(f"coherent: {report.n_coherent}")
    click.echo(f"coherence rate: {report.coherence_rate} ({report.coherence_display})")
    click.echo(f"control judged: {report.n_control}")
    if report.control_detection is not None:
        click.echo(f"control judged incoherent: {report.n_control_incoherent} "
                   f"({report.control_detection_display})")


@main.command("matrix")
@click.option("--thesaurus", "thesaurus_path", required=True, type=click.Path())
@click.option("--catalog", "catalog_path", required=True, type=click.Path())
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--out", "out_path", type=click.Path(), default=None)
@guarded
def cmd_matrix(thesaurus_path: str, catalog_path: str, config_path: str | None,
               out_path: str | None) -> None:
    """Export the all-pairs similarity matrix as CSV."""
    catalog = _load_corpus(thesaurus_path, catalog_path)
    config = _load_config(config_path)
    csv_text = matrix_csv(catalog.film_ids, pairwise_matrix(catalog, config))
    if out_path is not None:
        Path(out_path).write_text(csv_text, encoding="utf-8")
    else:
        click.echo(csv_text, nl=False)


@main.command("serve")
@click.option("--thesaurus", "thesaurus_path", required=True, type=click.Path(),
              envvar="DREC_THESAURUS")
@click.option("--catalog", "catalog_path", required=True, type=click.Path(),
              envvar="DREC_CATALOG")
@click.option("--judgments", "judgments_path", type=click.Path(), default=None,
              envvar="DREC_JUDGMENTS")
@click.option("--port", type=int, default=8080, show_default=True, envvar="DREC_PORT")
@click.option("--host", default="127.0.0.1", show_default=True)
@guarded
def cmd_serve(thesaurus_path: str, catalog_path: str, judgments_path: str | None,
              port: int, host: str) -> None:  # pragma: no cover
    """Run the HTTP service."""
    import uvicorn

    from .service import build_state, create_app

    state = build_state(Path(thesaurus_path), Path(catalog_path),
                        Path(judgments_path) if judgments_path else None)
    uvicorn.run(create_app(state), host=host, port=port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
