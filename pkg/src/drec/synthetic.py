"""Deterministic synthetic thesauri and catalogs for experiments and
property suites. Same seed, same output, always."""

from __future__ import annotations

import random

from .catalog import Catalog, FilmRecord
from .thesaurus import FACETS, Concept, Thesaurus


def synthetic_thesaurus(n_concepts: int = 292, seed: int = 0, max_depth: int = 5,
                        related_pairs: int = 0) -> Thesaurus:
    """Random mono-hierarchy over the six facets, ``n_concepts`` total
    (facet roots included), every concept at depth <= ``max_depth``.
    """
    if n_concepts < len(FACETS):
        raise ValueError(f"need at least {len(FACETS)} concepts for the facet roots")
    rng = random.Random(seed)
    concepts: dict[str, Concept] = {}
    depths: dict[str, int] = {}
    for facet in FACETS:
        root_id = f"facet-{facet.value.replace('_', '-')}"
        concepts[root_id] = Concept(
            id=root_id,
            pref_label=facet.value.replace("_", " ").title(),
            definition=f"Facet root for {facet.value.replace('_', ' ')} concepts.",
            facet=facet,
        )
        depths[root_id] = 0
    attachable = [cid for cid, d in depths.items() if d < max_depth]
    for i in range(n_concepts - len(FACETS)):
        cid = f"c{i:04d}"
        parent_id = rng.choice(attachable)
        parent = concepts[parent_id]
        concepts[cid] = Concept(
            id=cid,
            pref_label=f"Concept {i:04d}",
            definition=f"Synthetic concept {i:04d} under {parent_id}.",
            facet=parent.facet,
            broader=parent_id,
        )
        depths[cid] = depths[parent_id] + 1
        if depths[cid] < max_depth:
            attachable.append(cid)

    if related_pairs:
        ids = sorted(concepts)
        related: dict[str, set[str]] = {cid: set() for cid in ids}
        for _ in range(related_pairs):
            a, b = rng.sample(ids, 2)
            related[a].add(b)
            related[b].add(a)
        concepts = {
            cid: Concept(
                id=c.id, pref_label=c.pref_label, definition=c.definition,
                facet=c.facet, broader=c.broader, related=frozenset(related[cid]),
            )
            for cid, c in concepts.items()
        }
    return Thesaurus(concepts)


def synthetic_catalog(t: Thesaurus, n_films: int = 50, seed: int = 0,
                      descriptors_per_film: int = 10) -> Catalog:
    """Random catalog over a thesaurus; descriptors drawn without
    replacement from the full concept inventory."""
    rng = random.Random(seed)
    pool = sorted(t.concepts)
    k = min(descriptors_per_film, len(pool))
    films = [
        FilmRecord(
            id=f"film-{i:03d}",
            title=f"Film {i:03d}",
            director=f"Director {i % 7}",
            year=1950 + (i * 13) % 73,
            duration_min=45 + (i * 7) % 90,
            synopsis=f"Synthetic documentary number {i}.",
            descriptors=tuple(rng.sample(pool, k)),
        )
        for i in range(n_films)
    ]
    return Catalog(films, t)
