from __future__ import annotations

import json
from pathlib import Path

import pytest

from drec import Catalog, ingest_catalog, load_judgments, parse_thesaurus

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# a hand-computable two-facet vocabulary used across the unit tests:
# fp -> mid -> {leaf-a, leaf-b}, fx -> leaf-c
TINY_THESAURUS = {
    "concepts": [
        {"id": "fp", "pref_label": "Filming root", "definition": "Root.",
         "facet": "filming_person"},
        {"id": "mid", "pref_label": "Mid", "definition": "Middle.",
         "broader": "fp"},
        {"id": "leaf-a", "pref_label": "Leaf A", "definition": "A.",
         "broader": "mid"},
        {"id": "leaf-b", "pref_label": "Leaf B", "definition": "B.",
         "broader": "mid"},
        {"id": "fx", "pref_label": "Text root", "definition": "Root.",
         "facet": "filmic_text"},
        {"id": "leaf-c", "pref_label": "Leaf C", "definition": "C.",
         "broader": "fx"},
    ]
}


def tiny_thesaurus_json(**overrides) -> str:
    doc = json.loads(json.dumps(TINY_THESAURUS))
    doc.update(overrides)
    return json.dumps(doc)


def film_obj(fid: str, descriptors: list[str], title: str | None = None,
             **overrides) -> dict:
    obj = {
        "id": fid,
        "title": title or fid.replace("-", " ").title(),
        "director": "Test Director",
        "year": 2000,
        "duration_min": 60,
        "synopsis": "A test film.",
        "descriptors": descriptors,
    }
    obj.update(overrides)
    return obj


def catalog_text(films: list[dict]) -> str:
    return "\n".join(json.dumps(f) for f in films) + "\n"


@pytest.fixture(scope="session")
def tiny_thesaurus():
    return parse_thesaurus(tiny_thesaurus_json())


@pytest.fixture(scope="session")
def fixture_thesaurus():
    return parse_thesaurus((FIXTURES / "thesaurus.json").read_bytes())


@pytest.fixture(scope="session")
def fixture_catalog(fixture_thesaurus) -> Catalog:
    return ingest_catalog((FIXTURES / "catalog.jsonl").read_bytes(),
                          fixture_thesaurus)


@pytest.fixture(scope="session")
def fixture_judgments():
    return load_judgments((FIXTURES / "judgments.jsonl").read_bytes())
