"""Faceted controlled vocabulary for documentary filmmaking dispositifs.

The vocabulary is a mono-hierarchy (single optional ``broader`` parent per
concept) rooted in six fixed facets. Symmetric ``related`` links are kept
for display in explanations only; they never enter similarity.

File format: one UTF-8 JSON object ``{"concepts": [...]}``; see
``parse_thesaurus`` for the per-concept fields. Parsing is strict: unknown
fields are rejected so indexing typos surface immediately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .errors import ConceptNotFoundError, ParseError, ValidationError


class Facet(str, Enum):
    """The six entities a dispositif descriptor can belong to."""

    FILMING_PERSON = "filming_person"
    FILMED_PERSON = "filmed_person"
    FILMED_SITUATION = "filmed_situation"
    FILMIC_MATERIALS = "filmic_materials"
    FILMIC_TEXT = "filmic_text"
    AUDIENCE = "audience"


FACETS: tuple[Facet, ...] = tuple(Facet)

_CONCEPT_FIELDS = {"id", "pref_label", "definition", "facet", "broader", "related"}


@dataclass(frozen=True)
class Concept:
    """One controlled-vocabulary entry. ``facet`` is always resolved
    (inherited from the parent when the source document omitted it)."""

    id: str
    pref_label: str
    definition: str
    facet: Facet
    broader: str | None = None
    related: frozenset[str] = field(default_factory=frozenset)

    @property
    def is_root(self) -> bool:
        return self.broader is None


@dataclass(frozen=True)
class Violation:
    """One invariant breach found by ``validate_thesaurus``."""

    code: str
    message: str
    concept_ids: tuple[str, ...]


class Thesaurus:
    """Immutable concept graph with a materialized narrower index.

    Construction is tolerant (dangling parents are simply absent from the
    narrower index) so that ``validate_thesaurus`` can inspect broken
    graphs; ``parse_thesaurus`` is the strict entry point.
    """

    def __init__(self, concepts: dict[str, Concept]):
        self._concepts = dict(concepts)
        narrower: dict[str, set[str]] = {cid: set() for cid in self._concepts}
        for concept in self._concepts.values():
            if concept.broader is not None and concept.broader in narrower:
                narrower[concept.broader].add(concept.id)
        self._narrower = {cid: frozenset(kids) for cid, kids in narrower.items()}

    @property
    def concepts(self) -> dict[str, Concept]:
        return self._concepts

    def __len__(self) -> int:
        return len(self._concepts)

    def __contains__(self, concept_id: str) -> bool:
        return concept_id in self._concepts

    def __iter__(self) -> Iterator[Concept]:
        return iter(self._concepts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Thesaurus):
            return NotImplemented
        return self._concepts == other._concepts

    def get(self, concept_id: str) -> Concept:
        try:
            return self._concepts[concept_id]
        except KeyError:
            raise ConceptNotFoundError(f"unknown concept {concept_id!r}") from None

    def narrower(self, concept_id: str) -> frozenset[str]:
        self.get(concept_id)
        return self._narrower.get(concept_id, frozenset())

    @property
    def roots(self) -> list[Concept]:
        return [c for c in self._concepts.values() if c.is_root]

    def ancestors(self, concept_id: str) -> list[tuple[str, int]]:
        """Chain of (ancestor id, hop count) following broader links,
        nearest first, facet root last. Empty for roots."""
        concept = self.get(concept_id)
        chain: list[tuple[str, int]] = []
        seen = {concept_id}
        depth = 0
        while concept.broader is not None:
            parent_id = concept.broader
            if parent_id in seen or parent_id not in self._concepts:
                # broken graph (cycle or dangling parent); validate_thesaurus
                # reports it, here we just stop walking
                break
            depth += 1
            chain.append((parent_id, depth))
            seen.add(parent_id)
            concept = self._concepts[parent_id]
        return chain

    def depth(self, concept_id: str) -> int:
        return len(self.ancestors(concept_id))


def _field_error(index: int, message: str) -> ParseError:
    return ParseError(message, locator=f"concepts[{index}]")


def parse_thesaurus(source: bytes | str) -> Thesaurus:
    """Parse and fully validate a thesaurus document.

    Raises ParseError for malformed syntax or unknown/mistyped fields and
    ValidationError for referential breaches (duplicate id, dangling link,
    broader cycle, facet mismatch, missing root facet, self-related).
    One-sided related links are accepted and symmetrized.
    """
    text = source.decode("utf-8") if isinstance(source, bytes) else source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, locator=f"line {exc.lineno}") from None

    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(doc) - {"concepts"}
    if unknown:
        raise ParseError(f"unknown field {sorted(unknown)[0]!r}", locator="$")
    if "concepts" not in doc or not isinstance(doc["concepts"], list):
        raise ParseError("missing or non-array 'concepts' field", locator="$")

    raw: list[dict] = []
    for i, entry in enumerate(doc["concepts"]):
        if not isinstance(entry, dict):
            raise _field_error(i, "concept entry must be an object")
        unknown = set(entry) - _CONCEPT_FIELDS
        if unknown:
            raise _field_error(i, f"unknown field {sorted(unknown)[0]!r}")
        for key in ("id", "pref_label", "definition"):
            if not isinstance(entry.get(key), str):
                raise _field_error(i, f"missing or non-string {key!r}")
        if not entry["id"]:
            raise _field_error(i, "empty concept id")
        if entry.get("broader") is not None and not isinstance(entry["broader"], str):
            raise _field_error(i, "'broader' must be a string or null")
        facet = entry.get("facet")
        if facet is not None:
            try:
                Facet(facet)
            except ValueError:
                raise _field_error(i, f"unknown facet {facet!r}") from None
        elif entry.get("broader") is None:
            raise _field_error(i, "root concept must declare a facet")
        related = entry.get("related", [])
        if not isinstance(related, list) or not all(isinstance(r, str) for r in related):
            raise _field_error(i, "'related' must be an array of ids")
        raw.append(entry)

    ids = [entry["id"] for entry in raw]
    seen: set[str] = set()
    for cid in ids:
        if cid in seen:
            raise ValidationError(f"duplicate concept id {cid!r}")
        seen.add(cid)

    by_id = {entry["id"]: entry for entry in raw}
    for entry in raw:
        broader = entry.get("broader")
        if broader is not None and broader not in by_id:
            raise ValidationError(
                f"concept {entry['id']!r} has dangling broader reference {broader!r}"
            )
        for rid in entry.get("related", []):
            if rid not in by_id:
                raise ValidationError(
                    f"concept {entry['id']!r} has dangling related reference {rid!r}"
                )
            if rid == entry["id"]:
                raise ValidationError(f"concept {entry['id']!r} is related to itself")

    # cycle check before facet resolution: inheritance needs a rooted chain
    state: dict[str, int] = {}  # 0 in progress, 1 done
    for start in ids:
        if start in state:
            continue
        path = []
        cid: str | None = start
        while cid is not None and state.get(cid) != 1:
            if state.get(cid) == 0:
                raise ValidationError(
                    f"broader cycle detected at concept {cid!r}"
                )
            state[cid] = 0
            path.append(cid)
            cid = by_id[cid].get("broader")
        for visited in path:
            state[visited] = 1

    resolved: dict[str, Facet] = {}

    def resolve_facet(cid: str) -> Facet:
        if cid in resolved:
            return resolved[cid]
        entry = by_id[cid]
        broader = entry.get("broader")
        declared = Facet(entry["facet"]) if entry.get("facet") is not None else None
        if broader is None:
            facet = declared  # presence enforced during field checks
        else:
            facet = resolve_facet(broader)
            if declared is not None and declared != facet:
                raise ValidationError(
                    f"concept {cid!r} declares facet {declared.value!r} "
                    f"but its broader concept has facet {facet.value!r}"
                )
        assert facet is not None
        resolved[cid] = facet
        return facet

    related_sets: dict[str, set[str]] = {cid: set(by_id[cid].get("related", [])) for cid in ids}
    for cid, partners in list(related_sets.items()):
        for rid in partners:
            related_sets[rid].add(cid)

    concepts = {
        entry["id"]: Concept(
            id=entry["id"],
            pref_label=entry["pref_label"],
            definition=entry["definition"],
            facet=resolve_facet(entry["id"]),
            broader=entry.get("broader"),
            related=frozenset(related_sets[entry["id"]]),
        )
        for entry in raw
    }
    return Thesaurus(concepts)


def serialize_thesaurus(t: Thesaurus) -> bytes:
    """Inverse of ``parse_thesaurus``: parse(serialize(t)) == t.

    Concepts are emitted sorted by id with every facet explicit, so the
    output is canonical regardless of source-document ordering.
    """
    entries = [
        {
            "id": c.id,
            "pref_label": c.pref_label,
            "definition": c.definition,
            "facet": c.facet.value,
            "broader": c.broader,
            "related": sorted(c.related),
        }
        for c in sorted(t, key=lambda c: c.id)
    ]
    return json.dumps({"concepts": entries}, ensure_ascii=False, indent=2).encode("utf-8")


def validate_thesaurus(t: Thesaurus) -> list[Violation]:
    """Enumerate invariant breaches; an empty report means a valid graph.

    Checks are local where possible so one injected fault yields one
    violation: a broader cycle is reported once (its lexicographically
    smallest member named first) rather than once per affected concept.
    """
    violations: list[Violation] = []
    concepts = t.concepts

    for concept in concepts.values():
        if not concept.id:
            violations.append(Violation("empty-id", "concept with empty id", (concept.id,)))
        if concept.broader is not None and concept.broader not in concepts:
            violations.append(
                Violation(
                    "dangling-broader",
                    f"concept {concept.id!r} references missing broader {concept.broader!r}",
                    (concept.id, concept.broader),
                )
            )
        for rid in sorted(concept.related):
            if rid == concept.id:
                violations.append(
                    Violation("self-related", f"concept {concept.id!r} is related to itself",
                              (concept.id,))
                )
            elif rid not in concepts:
                violations.append(
                    Violation(
                        "dangling-related",
                        f"concept {concept.id!r} references missing related {rid!r}",
                        (concept.id, rid),
                    )
                )
            elif concept.id not in concepts[rid].related:
                violations.append(
                    Violation(
                        "asymmetric-related",
                        f"concept {concept.id!r} is related to {rid!r} but not vice versa",
                        (concept.id, rid),
                    )
                )

    # one violation per broader cycle
    state: dict[str, int] = {}
    cycles: list[tuple[str, ...]] = []
    for start in concepts:
        if start in state:
            continue
        path: list[str] = []
        index: dict[str, int] = {}
        cid: str | None = start
        while cid is not None and cid in concepts and state.get(cid) != 1:
            if cid in index:
                cycles.append(tuple(path[index[cid]:]))
                break
            if state.get(cid) == 0:
                break
            state[cid] = 0
            index[cid] = len(path)
            path.append(cid)
            cid = concepts[cid].broader
        for visited in path:
            state[visited] = 1
    for cycle in cycles:
        anchor = min(cycle)
        violations.append(
            Violation(
                "broader-cycle",
                f"broader cycle through concept {anchor!r}",
                tuple(sorted(cycle)),
            )
        )
    cycle_members = {cid for cycle in cycles for cid in cycle}

    for concept in concepts.values():
        if concept.is_root:
            continue
        parent = concepts.get(concept.broader or "")
        if parent is not None and concept.facet != parent.facet:
            violations.append(
                Violation(
                    "facet-mismatch",
                    f"concept {concept.id!r} has facet {concept.facet.value!r} "
                    f"but its broader {parent.id!r} has {parent.facet.value!r}",
                    (concept.id, parent.id),
                )
            )

    # root reachability is implied by acyclicity + no dangling broader;
    # only re-check concepts untouched by those reports
    for concept in concepts.values():
        if concept.id in cycle_members or concept.is_root:
            continue
        chain = t.ancestors(concept.id)
        if not chain:
            continue
        last = concepts[chain[-1][0]]
        if not last.is_root and last.id not in cycle_members \
                and last.broader in concepts:
            violations.append(
                Violation(
                    "no-root",
                    f"concept {concept.id!r} does not reach a facet root",
                    (concept.id,),
                )
            )
    return violations
