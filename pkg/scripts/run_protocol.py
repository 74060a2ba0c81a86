"""Run the full panel protocol on the fixture corpus and print what the
experiment room would see: the blind list, the researcher view, a decay
sweep, the metric comparison, and the reception report.

Usage: python scripts/run_protocol.py [--film FILM_ID]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from drec import (
    WeightingConfig,
    coherence_rate,
    compose_panel_list,
    ingest_catalog,
    load_judgments,
    parse_thesaurus,
    recommend,
)

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--film", default="lift-isaacs-2001")
    parser.add_argument("--thesaurus", default=str(FIXTURES / "thesaurus.json"))
    parser.add_argument("--catalog", default=str(FIXTURES / "catalog.jsonl"))
    parser.add_argument("--judgments", default=str(FIXTURES / "judgments.jsonl"))
    args = parser.parse_args()

    thesaurus = parse_thesaurus(Path(args.thesaurus).read_bytes())
    catalog = ingest_catalog(Path(args.catalog).read_bytes(), thesaurus)
    seed = catalog.get(args.film)

    print(f"seed: {seed.title} ({seed.director}, {seed.year})")
    print(f"descriptors: {', '.join(seed.descriptors)}")
    print()

    panel = compose_panel_list(catalog, args.film)
    print("panel list (what a panelist sees, control unmarked):")
    for fid in panel.presented:
        print(f"  {catalog.get(fid).title}")
    print()

    print("researcher view:")
    scores = dict(panel.recommended)
    for fid in panel.presented:
        film = catalog.get(fid)
        tag = "control" if fid == panel.control else f"{scores[fid]:.4f}"
        shared = panel.explanations[fid].shared_ids
        print(f"  {film.title:<46} {tag:>8}  shared: {len(shared)}")
    print()

    print("ancestor-decay sweep (ranking by film id):")
    for decay in (0.0, 0.25, 0.5, 0.75, 1.0):
        config = WeightingConfig(ancestor_decay=decay)
        ranked = [fid for fid, _ in recommend(catalog, args.film, 4, config)]
        print(f"  decay={decay:<5} {ranked}")
    print()

    print("metric comparison:")
    for metric in ("cosine", "jaccard"):
        config = WeightingConfig(metric=metric)
        ranked = recommend(catalog, args.film, 4, config)
        pairs = ", ".join(f"{fid}={score:.4f}" for fid, score in ranked)
        print(f"  {metric:<8} {pairs}")
    print()

    report = coherence_rate(load_judgments(Path(args.judgments).read_bytes()))
    print("reception report:")
    print(f"  non-control judged: {report.n_judged}, coherent: {report.n_coherent} "
          f"({report.coherence_display})")
    print(f"  controls judged: {report.n_control}, detected incoherent: "
          f"{report.n_control_incoherent} ({report.control_detection_display})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
