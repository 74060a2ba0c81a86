"""Film corpus ingestion and descriptor-vector construction.

The catalog file is UTF-8 JSON-lines, one film per line, validated
against a bound thesaurus: every descriptor must resolve, descriptor
counts must stay within [1, 16], and the canonical corpus value of 10
descriptors per film is encouraged with a warning (never an error).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import ConfigError, FilmNotFoundError, ParseError, ValidationError
from .similarity import METRICS, DescriptorVector
from .thesaurus import Facet, Thesaurus

logger = logging.getLogger(__name__)

CANONICAL_DESCRIPTOR_COUNT = 10
MIN_DESCRIPTORS = 1
MAX_DESCRIPTORS = 16

_FILM_FIELDS = {"id", "title", "director", "year", "duration_min", "synopsis", "descriptors"}
_CONFIG_FIELDS = {"metric", "ancestor_decay", "max_depth", "facet_weights"}


@dataclass(frozen=True)
class FilmRecord:
    """One indexed documentary; ``descriptors`` keeps file order but the
    order carries no weight."""

    id: str
    title: str
    director: str
    year: int
    duration_min: int
    synopsis: str
    descriptors: tuple[str, ...]


@dataclass(frozen=True)
class WeightingConfig:
    """Knobs for vector expansion and scoring.

    Each descriptor contributes ``facet_weight`` at itself and
    ``facet_weight * ancestor_decay**d`` at its depth-``d`` ancestor,
    cut off at ``max_depth`` when set. Overlapping contributions keep
    the maximum.
    """

    metric: str = "cosine"
    ancestor_decay: float = 0.5
    max_depth: int | None = None
    facet_weights: Mapping[Facet, float] = field(default_factory=dict)

    def facet_weight(self, facet: Facet) -> float:
        return self.facet_weights.get(facet, 1.0)

    @classmethod
    def from_dict(cls, data: Mapping) -> "WeightingConfig":
        if not isinstance(data, Mapping):
            raise ConfigError("weighting config must be a JSON object")
        unknown = set(data) - _CONFIG_FIELDS
        if unknown:
            raise ConfigError(f"unknown config field {sorted(unknown)[0]!r}")
        metric = data.get("metric", "cosine")
        if metric not in METRICS:
            raise ConfigError(f"unknown metric {metric!r}")
        decay = data.get("ancestor_decay", 0.5)
        if not isinstance(decay, (int, float)) or isinstance(decay, bool) \
                or not 0.0 <= float(decay) <= 1.0:
            raise ConfigError("ancestor_decay must lie in [0, 1]")
        max_depth = data.get("max_depth")
        if max_depth is not None and (not isinstance(max_depth, int)
                                      or isinstance(max_depth, bool) or max_depth < 0):
            raise ConfigError("max_depth must be a non-negative integer or null")
        raw_weights = data.get("facet_weights", {})
        if not isinstance(raw_weights, Mapping):
            raise ConfigError("facet_weights must be an object")
        weights: dict[Facet, float] = {}
        for name, value in raw_weights.items():
            try:
                facet = Facet(name)
            except ValueError:
                raise ConfigError(f"unknown facet {name!r}") from None
            if not isinstance(value, (int, float)) or isinstance(value, bool) \
                    or not float(value) > 0.0:
                raise ConfigError(f"facet weight for {name!r} must be positive")
            weights[facet] = float(value)
        return cls(metric=metric, ancestor_decay=float(decay),
                   max_depth=max_depth, facet_weights=weights)

    @classmethod
    def from_json(cls, source: bytes | str) -> "WeightingConfig":
        text = source.decode("utf-8") if isinstance(source, bytes) else source
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid config JSON: {exc.msg}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "ancestor_decay": self.ancestor_decay,
            "max_depth": self.max_depth,
            "facet_weights": {f.value: self.facet_weight(f) for f in Facet},
        }


def _validate_film(film: FilmRecord, t: Thesaurus) -> None:
    if not film.id:
        raise ValidationError("film with empty id")
    if not film.title:
        raise ValidationError(f"film {film.id!r} has an empty title")
    if len(set(film.descriptors)) != len(film.descriptors):
        raise ValidationError(f"film {film.id!r} repeats a descriptor")
    count = len(film.descriptors)
    if not MIN_DESCRIPTORS <= count <= MAX_DESCRIPTORS:
        raise ValidationError(
            f"film {film.id!r} has {count} descriptors, "
            f"expected between {MIN_DESCRIPTORS} and {MAX_DESCRIPTORS}"
        )
    if count != CANONICAL_DESCRIPTOR_COUNT:
        logger.warning("film %r has %d descriptors (canonical corpus uses %d)",
                       film.id, count, CANONICAL_DESCRIPTOR_COUNT)
    for did in film.descriptors:
        if did not in t:
            raise ValidationError(
                f"film {film.id!r} references unknown descriptor {did!r}"
            )


class Catalog:
    """Immutable film collection bound to the thesaurus it was indexed
    against. Iteration follows catalog file order."""

    def __init__(self, films: list[FilmRecord], thesaurus: Thesaurus):
        self._films: dict[str, FilmRecord] = {}
        self.thesaurus = thesaurus
        for film in films:
            if film.id in self._films:
                raise ValidationError(f"duplicate film id {film.id!r}")
            _validate_film(film, thesaurus)
            self._films[film.id] = film

    def __len__(self) -> int:
        return len(self._films)

    def __contains__(self, film_id: str) -> bool:
        return film_id in self._films

    def __iter__(self) -> Iterator[FilmRecord]:
        return iter(self._films.values())

    @property
    def film_ids(self) -> list[str]:
        return list(self._films)

    def get(self, film_id: str) -> FilmRecord:
        try:
            return self._films[film_id]
        except KeyError:
            raise FilmNotFoundError(f"unknown film {film_id!r}") from None


def _parse_film_line(obj: dict, line_no: int) -> FilmRecord:
    loc = f"line {line_no}"
    unknown = set(obj) - _FILM_FIELDS
    if unknown:
        raise ParseError(f"unknown field {sorted(unknown)[0]!r}", locator=loc)
    for key in ("id", "title", "director", "synopsis"):
        if not isinstance(obj.get(key), str):
            raise ParseError(f"missing or non-string {key!r}", locator=loc)
    for key in ("year", "duration_min"):
        if not isinstance(obj.get(key), int) or isinstance(obj.get(key), bool):
            raise ParseError(f"missing or non-integer {key!r}", locator=loc)
    if obj["duration_min"] <= 0:
        raise ParseError("'duration_min' must be positive", locator=loc)
    descriptors = obj.get("descriptors")
    if not isinstance(descriptors, list) or not all(isinstance(d, str) for d in descriptors):
        raise ParseError("'descriptors' must be an array of concept ids", locator=loc)
    return FilmRecord(
        id=obj["id"],
        title=obj["title"],
        director=obj["director"],
        year=obj["year"],
        duration_min=obj["duration_min"],
        synopsis=obj["synopsis"],
        descriptors=tuple(descriptors),
    )


def ingest_catalog(source: bytes | str, t: Thesaurus) -> Catalog:
    """Parse a JSON-lines catalog document against a thesaurus.

    Films are kept in file order. Parse errors carry the 1-based line
    number; validation errors name the offending film (and descriptor).
    """
    text = source.decode("utf-8") if isinstance(source, bytes) else source
    films: list[FilmRecord] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, locator=f"line {line_no}") from None
        if not isinstance(obj, dict):
            raise ParseError("film entry must be an object", locator=f"line {line_no}")
        films.append(_parse_film_line(obj, line_no))
    return Catalog(films, t)


def descriptor_vector(f: FilmRecord, t: Thesaurus, w: WeightingConfig) -> DescriptorVector:
    """Hierarchy-expand a film's descriptors into a sparse weight map.

    Pure function: the result depends only on the arguments, and the
    max-merge makes it independent of descriptor order. Zero
    contributions (decay 0) never enter the support.
    """
    weights: dict[str, float] = {}

    def bump(concept_id: str, value: float) -> None:
        if value > weights.get(concept_id, 0.0):
            weights[concept_id] = value

    for did in f.descriptors:
        concept = t.get(did)
        base = w.facet_weight(concept.facet)
        bump(did, base)
        if w.ancestor_decay == 0.0:
            continue
        for ancestor_id, depth in t.ancestors(did):
            if w.max_depth is not None and depth > w.max_depth:
                break
            bump(ancestor_id, base * w.ancestor_decay ** depth)
    return DescriptorVector(weights=weights, raw=frozenset(f.descriptors))
