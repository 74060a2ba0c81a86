"""Pairwise similarity between films over their descriptor vectors.

Two metrics are supported:

* ``cosine`` over hierarchy-expanded sparse vectors (the default), and
* ``jaccard`` over the raw descriptor id sets, kept as the auditable
  baseline that ignores the hierarchy entirely.

Scores are similarities in [0, 1]. Summations iterate concept ids in
sorted order so every score is bit-stable across runs and exactly
symmetric in its two arguments.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .errors import EmptyVectorError

if TYPE_CHECKING:  # pragma: no cover
    from .catalog import Catalog, FilmRecord, WeightingConfig

METRICS = ("cosine", "jaccard")


@dataclass(frozen=True)
class DescriptorVector:
    """Sparse concept-id -> weight map after hierarchy expansion.

    ``raw`` keeps the film's un-expanded descriptor ids; the jaccard
    baseline and control selection operate on those.
    """

    weights: dict[str, float]
    raw: frozenset[str] = field(default_factory=frozenset)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.weights)

    def norm(self) -> float:
        return math.sqrt(sum(self.weights[k] ** 2 for k in sorted(self.weights)))


def similarity(a: DescriptorVector, b: DescriptorVector, metric: str = "cosine") -> float:
    """Similarity score in [0, 1]; exactly 1.0 when the inputs coincide.

    Exact symmetry holds because the dot product iterates the shared
    support in sorted order and float multiplication commutes.
    """
    if metric == "cosine":
        if not a.weights or not b.weights:
            raise EmptyVectorError("cosine similarity needs non-empty vectors")
        if a.weights == b.weights:
            return 1.0
        common = sorted(set(a.weights) & set(b.weights))
        dot = sum(a.weights[k] * b.weights[k] for k in common)
        if dot == 0.0:
            return 0.0
        value = dot / (a.norm() * b.norm())
        return min(1.0, max(0.0, value))
    if metric == "jaccard":
        if not a.raw or not b.raw:
            raise EmptyVectorError("jaccard similarity needs non-empty descriptor sets")
        return len(a.raw & b.raw) / len(a.raw | b.raw)
    raise ValueError(f"unknown metric {metric!r}")


def shared_descriptors(a: "FilmRecord", b: "FilmRecord") -> set[str]:
    """Raw descriptor intersection, no hierarchy expansion. This is the
    quantity the control film must zero out."""
    return set(a.descriptors) & set(b.descriptors)


def pairwise_matrix(c: "Catalog", w: "WeightingConfig") -> list[list[float]]:
    """All-pairs similarity, rows/columns in catalog file order.

    The matrix is symmetric with a unit diagonal; cells are filled once
    and mirrored.
    """
    from .catalog import descriptor_vector

    films = list(c)
    vectors = [descriptor_vector(f, c.thesaurus, w) for f in films]
    n = len(films)
    matrix = [[0.0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = 1.0
        for j in range(i + 1, n):
            s = similarity(vectors[i], vectors[j], w.metric)
            matrix[i][j] = s
            matrix[j][i] = s
    return matrix


def matrix_csv(film_ids: Iterable[str], matrix: list[list[float]]) -> str:
    """CSV export with an id header row/column and 9-decimal values."""
    ids = list(film_ids)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + ids)
    for fid, row in zip(ids, matrix):
        writer.writerow([fid] + [f"{v:.9f}" for v in row])
    return out.getvalue()
