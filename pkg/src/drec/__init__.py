"""Dispositif-based recommendation engine for documentary films."""

from .catalog import (
    Catalog,
    FilmRecord,
    WeightingConfig,
    descriptor_vector,
    ingest_catalog,
)
from .errors import DrecError
from .evaluation import (
    CoherenceJudgment,
    ConvergenceRecord,
    EvaluationReport,
    coherence_rate,
    indexing_convergence,
    load_judgments,
)
from .recommender import (
    Explanation,
    PanelList,
    compose_panel_list,
    explain,
    recommend,
    select_control,
)
from .similarity import (
    DescriptorVector,
    pairwise_matrix,
    shared_descriptors,
    similarity,
)
from .thesaurus import (
    Concept,
    Facet,
    Thesaurus,
    parse_thesaurus,
    serialize_thesaurus,
    validate_thesaurus,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "CoherenceJudgment",
    "Concept",
    "ConvergenceRecord",
    "DescriptorVector",
    "DrecError",
    "EvaluationReport",
    "Explanation",
    "Facet",
    "FilmRecord",
    "PanelList",
    "Thesaurus",
    "WeightingConfig",
    "coherence_rate",
    "compose_panel_list",
    "descriptor_vector",
    "explain",
    "indexing_convergence",
    "ingest_catalog",
    "load_judgments",
    "pairwise_matrix",
    "parse_thesaurus",
    "recommend",
    "select_control",
    "serialize_thesaurus",
    "shared_descriptors",
    "similarity",
    "validate_thesaurus",
]
