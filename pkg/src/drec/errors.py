"""Exception hierarchy shared by every layer (library, CLI, HTTP service).

Each error carries a short machine-readable ``code`` so the CLI and the
service can map failures to exit statuses / HTTP payloads without string
matching.
"""

from __future__ import annotations


class DrecError(Exception):
    """Base class for all domain failures."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(DrecError):
    """Malformed input document; ``locator`` points at the offending spot
    (line number for JSON-lines, field path for JSON objects)."""

    code = "parse_error"

    def __init__(self, message: str, locator: str | None = None):
        super().__init__(f"{locator}: {message}" if locator else message)
        self.locator = locator


class ValidationError(DrecError):
    """Input is syntactically fine but breaks a domain invariant."""

    code = "validation_error"

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = violations or []


class NotFoundError(DrecError):
    code = "not_found"


class FilmNotFoundError(NotFoundError):
    code = "film_not_found"


class ConceptNotFoundError(NotFoundError):
    code = "concept_not_found"


class NoControlError(DrecError):
    """No candidate film shares zero descriptors with the seed."""

    code = "no_control"


class CapacityError(DrecError):
    """Catalog too small for the requested recommendation size."""

    code = "catalog_too_small"


class EmptyVectorError(DrecError):
    code = "empty_vector"


class UndefinedRateError(DrecError):
    """Coherence rate is undefined over zero non-control judgments."""

    code = "undefined_rate"


class ConfigError(DrecError):
    code = "invalid_config"


class DuplicateJudgmentError(DrecError):
    code = "duplicate_judgment"
