"""Reception evaluation: panel judgments and their aggregate statistics.

The headline coherence rate covers non-control judgments only; control
judgments feed a separate detection figure. Display strings truncate
toward zero at integer percent (28 coherent of 44 judged prints as
"63 %"); the raw fraction is always reported alongside.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import FilmRecord
from .errors import ParseError, UndefinedRateError, ValidationError

VERDICTS = ("coherent", "incoherent")
CONVERGENCE_THRESHOLD = 0.5  # inclusive

_JUDGMENT_FIELDS = {"subscriber", "input", "output", "verdict", "is_control", "note"}
# idempotency_key rides along in the service's append-only store; the
# loader tolerates and discards it
_TOLERATED_FIELDS = _JUDGMENT_FIELDS | {"idempotency_key"}


@dataclass(frozen=True)
class CoherenceJudgment:
    """One panelist verdict on one recommended (or control) film."""

    subscriber: str
    input_film: str
    output_film: str
    verdict: str
    is_control: bool
    note: str | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValidationError(f"unknown verdict {self.verdict!r}")
        if self.input_film == self.output_film:
            raise ValidationError(
                f"judgment on {self.input_film!r} compares the film to itself"
            )

    @property
    def coherent(self) -> bool:
        return self.verdict == "coherent"


@dataclass(frozen=True)
class SubscriberStats:
    n_judged: int
    n_coherent: int
    coherence_rate: float


@dataclass(frozen=True)
class EvaluationReport:
    """Aggregate reception statistics over one judgment set."""

    n_judged: int  # non-control judgments only
    n_coherent: int
    coherence_rate: float
    coherence_display: str
    n_control: int
    n_control_incoherent: int
    control_detection: float | None
    control_detection_display: str | None
    per_subscriber: dict[str, SubscriberStats]

    def to_dict(self) -> dict:
        return {
            "n_judged": self.n_judged,
            "n_coherent": self.n_coherent,
            "coherence_rate": self.coherence_rate,
            "coherence_display": self.coherence_display,
            "n_control": self.n_control,
            "n_control_incoherent": self.n_control_incoherent,
            "control_detection": self.control_detection,
            "control_detection_display": self.control_detection_display,
            "per_subscriber": {
                sid: {
                    "n_judged": stats.n_judged,
                    "n_coherent": stats.n_coherent,
                    "coherence_rate": stats.coherence_rate,
                }
                for sid, stats in sorted(self.per_subscriber.items())
            },
        }


@dataclass(frozen=True)
class ConvergenceRecord:
    """How much of a film's indexation a viewer spontaneously evoked."""

    film_id: str
    indexed: tuple[str, ...]
    evoked: tuple[str, ...]
    convergence: float
    passed: bool


def display_percent(numerator: int, denominator: int) -> str:
    """Integer percent truncated toward zero, e.g. 28/44 -> "63 %"."""
    return f"{numerator * 100 // denominator} %"


def coherence_rate(judgments: list[CoherenceJudgment]) -> EvaluationReport:
    """Aggregate a judgment set; raises when no non-control judgment
    exists (the headline rate would be 0/0)."""
    regular = [j for j in judgments if not j.is_control]
    controls = [j for j in judgments if j.is_control]
    if not regular:
        raise UndefinedRateError("no non-control judgments, coherence rate undefined")
    n_coherent = sum(1 for j in regular if j.coherent)
    n_control_incoherent = sum(1 for j in controls if not j.coherent)
    per_subscriber: dict[str, SubscriberStats] = {}
    for sid in sorted({j.subscriber for j in regular}):
        own = [j for j in regular if j.subscriber == sid]
        coherent = sum(1 for j in own if j.coherent)
        per_subscriber[sid] = SubscriberStats(
            n_judged=len(own),
            n_coherent=coherent,
            coherence_rate=coherent / len(own),
        )
    return EvaluationReport(
        n_judged=len(regular),
        n_coherent=n_coherent,
        coherence_rate=n_coherent / len(regular),
        coherence_display=display_percent(n_coherent, len(regular)),
        n_control=len(controls),
        n_control_incoherent=n_control_incoherent,
        control_detection=(n_control_incoherent / len(controls)) if controls else None,
        control_detection_display=(
            display_percent(n_control_incoherent, len(controls)) if controls else None
        ),
        per_subscriber=per_subscriber,
    )


def coherence_report_dict(judgments: list[CoherenceJudgment]) -> dict:
    """Report as a JSON-ready dict; degrades to null rates instead of
    raising, for callers (the HTTP report route) where an empty store is
    a valid state rather than an error."""
    try:
        return coherence_rate(judgments).to_dict()
    except UndefinedRateError:
        controls = [j for j in judgments if j.is_control]
        n_detected = sum(1 for j in controls if not j.coherent)
        return {
            "n_judged": 0,
            "n_coherent": 0,
            "coherence_rate": None,
            "coherence_display": None,
            "n_control": len(controls),
            "n_control_incoherent": n_detected,
            "control_detection": (n_detected / len(controls)) if controls else None,
            "control_detection_display": (
                display_percent(n_detected, len(controls)) if controls else None
            ),
            "per_subscriber": {},
        }


def indexing_convergence(film: FilmRecord, evoked: set[str]) -> ConvergenceRecord:
    """Fraction of the film's indexed descriptors present in ``evoked``;
    passes at one half, inclusive."""
    indexed = set(film.descriptors)
    stray = evoked - indexed
    if stray:
        raise ValidationError(
            f"evoked concepts not in the indexation of {film.id!r}: {sorted(stray)}"
        )
    convergence = len(evoked) / len(indexed)
    return ConvergenceRecord(
        film_id=film.id,
        indexed=tuple(film.descriptors),
        evoked=tuple(sorted(evoked)),
        convergence=convergence,
        passed=convergence >= CONVERGENCE_THRESHOLD,
    )


def parse_judgment_obj(obj: dict, locator: str) -> tuple[CoherenceJudgment, str | None]:
    """Validate one judgment object; returns the judgment and the
    optional idempotency key found alongside it."""
    if not isinstance(obj, dict):
        raise ParseError("judgment entry must be an object", locator=locator)
    unknown = set(obj) - _TOLERATED_FIELDS
    if unknown:
        raise ParseError(f"unknown field {sorted(unknown)[0]!r}", locator=locator)
    for key in ("subscriber", "input", "output"):
        if not isinstance(obj.get(key), str) or not obj.get(key):
            raise ParseError(f"missing or empty {key!r}", locator=locator)
    if not isinstance(obj.get("verdict"), str):
        raise ParseError("missing or non-string 'verdict'", locator=locator)
    if not isinstance(obj.get("is_control"), bool):
        raise ParseError("missing or non-boolean 'is_control'", locator=locator)
    note = obj.get("note")
    if note is not None and not isinstance(note, str):
        raise ParseError("'note' must be a string or null", locator=locator)
    key = obj.get("idempotency_key")
    if key is not None and not isinstance(key, str):
        raise ParseError("'idempotency_key' must be a string", locator=locator)
    judgment = CoherenceJudgment(
        subscriber=obj["subscriber"],
        input_film=obj["input"],
        output_film=obj["output"],
        verdict=obj["verdict"],
        is_control=obj["is_control"],
        note=note,
    )
    return judgment, key


def load_judgments(source: bytes | str) -> list[CoherenceJudgment]:
    """Parse a UTF-8 JSON-lines judgment document in file order."""
    text = source.decode("utf-8") if isinstance(source, bytes) else source
    judgments: list[CoherenceJudgment] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, locator=f"line {line_no}") from None
        judgment, _ = parse_judgment_obj(obj, locator=f"line {line_no}")
        judgments.append(judgment)
    return judgments


def judgment_to_dict(j: CoherenceJudgment, idempotency_key: str | None = None) -> dict:
    out = {
        "subscriber": j.subscriber,
        "input": j.input_film,
        "output": j.output_film,
        "verdict": j.verdict,
        "is_control": j.is_control,
        "note": j.note,
    }
    if idempotency_key is not None:
        out["idempotency_key"] = idempotency_key
    return out
