"""The panel protocol: top-k nearest dispositifs, one zero-overlap
control, alphabetical presentation, per-pair explanations.

Everything here is deterministic: score ties break on ascending film id,
the presented order sorts titles case-insensitively, and the JSON
serialization is canonical so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import Catalog, WeightingConfig, descriptor_vector
from .errors import CapacityError, NoControlError
from .similarity import DescriptorVector, shared_descriptors, similarity
from .thesaurus import Concept

DEFAULT_K = 4


@dataclass(frozen=True)
class Explanation:
    """Why two films sit together: their shared descriptors (with
    thesaurus labels) and the similarity score."""

    shared: tuple[Concept, ...]  # sorted by concept id
    score: float

    @property
    def shared_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.shared)


@dataclass(frozen=True)
class PanelList:
    """One experiment round: k recommendations plus a hidden control,
    presented alphabetically by title."""

    input_film: str
    recommended: tuple[tuple[str, float], ...]
    control: str
    presented: tuple[str, ...]
    explanations: dict[str, Explanation]


def _vectors(c: Catalog, w: WeightingConfig) -> dict[str, DescriptorVector]:
    return {f.id: descriptor_vector(f, c.thesaurus, w) for f in c}


def recommend(c: Catalog, input_film: str, k: int = DEFAULT_K,
              w: WeightingConfig = WeightingConfig()) -> list[tuple[str, float]]:
    """The k films most similar to the seed, seed excluded.

    Sorted by score descending, ties by ascending film id.
    """
    seed = c.get(input_film)
    if len(c) <= k:
        raise CapacityError(f"catalog holds {len(c)} films, need more than {k}")
    seed_vec = descriptor_vector(seed, c.thesaurus, w)
    scored = [
        (other.id, similarity(seed_vec, descriptor_vector(other, c.thesaurus, w), w.metric))
        for other in c
        if other.id != input_film
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]


def select_control(c: Catalog, input_film: str,
                   w: WeightingConfig = WeightingConfig(),
                   exclude: frozenset[str] | set[str] = frozenset(),
                   relax: bool = False) -> str:
    """Pick the control film: zero raw-descriptor overlap with the seed
    and minimal similarity, ties by ascending film id.

    With ``relax=True`` the zero-overlap requirement degrades to
    minimal-overlap when no fully disjoint candidate exists.
    """
    seed = c.get(input_film)
    seed_vec = descriptor_vector(seed, c.thesaurus, w)
    candidates: list[tuple[int, float, str]] = []
    for other in c:
        if other.id == input_film or other.id in exclude:
            continue
        overlap = len(shared_descriptors(seed, other))
        score = similarity(seed_vec, descriptor_vector(other, c.thesaurus, w), w.metric)
        candidates.append((overlap, score, other.id))
    disjoint = [cand for cand in candidates if cand[0] == 0]
    if disjoint:
        return min(disjoint, key=lambda cand: (cand[1], cand[2]))[2]
    if relax and candidates:
        return min(candidates)[2]
    raise NoControlError(
        f"no film shares zero descriptors with {input_film!r}"
    )


def explain(c: Catalog, input_film: str, output_film: str,
            w: WeightingConfig = WeightingConfig()) -> Explanation:
    """Shared descriptors (with labels, definitions, facets) plus the
    similarity score for one input/output pair."""
    a = c.get(input_film)
    b = c.get(output_film)
    shared_ids = sorted(shared_descriptors(a, b))
    score = similarity(
        descriptor_vector(a, c.thesaurus, w),
        descriptor_vector(b, c.thesaurus, w),
        w.metric,
    )
    return Explanation(
        shared=tuple(c.thesaurus.get(cid) for cid in shared_ids),
        score=score,
    )


def compose_panel_list(c: Catalog, input_film: str, k: int = DEFAULT_K,
                       w: WeightingConfig = WeightingConfig()) -> PanelList:
    """Assemble the full experiment list for one seed film.

    The control is chosen outside the recommended set, so the PanelList
    invariants (control not recommended, zero overlap with the seed)
    hold by construction.
    """
    recommended = recommend(c, input_film, k, w)
    recommended_ids = {fid for fid, _ in recommended}
    control = select_control(c, input_film, w, exclude=recommended_ids)
    members = [fid for fid, _ in recommended] + [control]
    explanations = {fid: explain(c, input_film, fid, w) for fid in members}
    presented = sorted(
        members,
        key=lambda fid: (c.get(fid).title.casefold(), c.get(fid).title, fid),
    )
    return PanelList(
        input_film=input_film,
        recommended=tuple(recommended),
        control=control,
        presented=tuple(presented),
        explanations=explanations,
    )


def explanation_to_dict(e: Explanation) -> dict:
    return {
        "shared": [
            {
                "id": concept.id,
                "label": concept.pref_label,
                "definition": concept.definition,
                "facet": concept.facet.value,
            }
            for concept in e.shared
        ],
        "score": round(e.score, 9),
    }


def panel_to_dict(panel: PanelList, blind: bool = False) -> dict:
    """Wire form of a PanelList. Blind mode drops the control id and the
    control's explanation; everything else is unchanged."""
    out: dict = {
        "input": panel.input_film,
        "recommended": [
            {"film": fid, "score": round(score, 9)} for fid, score in panel.recommended
        ],
    }
    if not blind:
        out["control"] = panel.control
    out["presented"] = list(panel.presented)
    out["explanations"] = {
        fid: explanation_to_dict(panel.explanations[fid])
        for fid in sorted(panel.explanations)
        if not (blind and fid == panel.control)
    }
    return out


def panel_json(panel: PanelList, blind: bool = False) -> bytes:
    """Canonical UTF-8 JSON bytes; the CLI and the HTTP service both emit
    exactly these, which is what makes them byte-for-byte comparable."""
    return json.dumps(panel_to_dict(panel, blind=blind),
                      ensure_ascii=False, separators=(",", ":")).encode("utf-8")
