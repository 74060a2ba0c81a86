from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drec import Facet, Thesaurus, parse_thesaurus, serialize_thesaurus, validate_thesaurus
from drec.errors import ConceptNotFoundError, ParseError, ValidationError
from drec.synthetic import synthetic_thesaurus
from drec.thesaurus import FACETS, Concept

from .conftest import TINY_THESAURUS, tiny_thesaurus_json
from .oracles import naive_ancestors


def concepts_json(entries: list[dict]) -> str:
    return json.dumps({"concepts": entries})


def replace(concept: Concept, **changes) -> Concept:
    fields = {
        "id": concept.id, "pref_label": concept.pref_label,
        "definition": concept.definition, "facet": concept.facet,
        "broader": concept.broader, "related": concept.related,
    }
    fields.update(changes)
    return Concept(**fields)


class TestFacets:
    def test_exactly_six(self):
        assert len(FACETS) == 6

    def test_values(self):
        assert {f.value for f in Facet} == {
            "filming_person", "filmed_person", "filmed_situation",
            "filmic_materials", "filmic_text", "audience",
        }


class TestParse:
    def test_tiny_document(self, tiny_thesaurus):
        assert len(tiny_thesaurus) == 6
        assert {c.id for c in tiny_thesaurus.roots} == {"fp", "fx"}

    def test_facet_inheritance(self, tiny_thesaurus):
        assert tiny_thesaurus.get("leaf-a").facet is Facet.FILMING_PERSON
        assert tiny_thesaurus.get("leaf-c").facet is Facet.FILMIC_TEXT

    def test_accepts_bytes(self):
        t = parse_thesaurus(tiny_thesaurus_json().encode("utf-8"))
        assert len(t) == 6

    def test_explicit_matching_facet_ok(self):
        doc = json.loads(tiny_thesaurus_json())
        doc["concepts"][2]["facet"] = "filming_person"
        t = parse_thesaurus(json.dumps(doc))
        assert t.get("leaf-a").facet is Facet.FILMING_PERSON

    def test_one_sided_related_symmetrized(self):
        doc = json.loads(tiny_thesaurus_json())
        doc["concepts"][2]["related"] = ["leaf-c"]
        t = parse_thesaurus(json.dumps(doc))
        assert "leaf-c" in t.get("leaf-a").related
        assert "leaf-a" in t.get("leaf-c").related

    def test_invalid_json_names_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_thesaurus('{"concepts": [\n  {"id": }\n]}')

    def test_top_level_array_rejected(self):
        with pytest.raises(ParseError, match="object"):
            parse_thesaurus("[]")

    def test_unknown_top_level_field(self):
        with pytest.raises(ParseError, match="extra"):
            parse_thesaurus('{"concepts": [], "extra": 1}')

    def test_missing_concepts_field(self):
        with pytest.raises(ParseError, match="concepts"):
            parse_thesaurus("{}")

    def test_entry_must_be_object(self):
        with pytest.raises(ParseError, match=r"concepts\[0\]"):
            parse_thesaurus('{"concepts": [42]}')

    def test_unknown_concept_field_carries_index(self):
        entries = [
            {"id": "a", "pref_label": "A", "definition": "d",
             "facet": "audience"},
            {"id": "b", "pref_label": "B", "definition": "d",
             "facet": "audience", "color": "red"},
        ]
        with pytest.raises(ParseError, match=r"concepts\[1\].*color"):
            parse_thesaurus(concepts_json(entries))

    @pytest.mark.parametrize("missing", ["id", "pref_label", "definition"])
    def test_missing_string_field(self, missing):
        entry = {"id": "a", "pref_label": "A", "definition": "d",
                 "facet": "audience"}
        del entry[missing]
        with pytest.raises(ParseError, match=missing):
            parse_thesaurus(concepts_json([entry]))

    def test_empty_id_rejected(self):
        entry = {"id": "", "pref_label": "A", "definition": "d",
                 "facet": "audience"}
        with pytest.raises(ParseError, match="empty"):
            parse_thesaurus(concepts_json([entry]))

    def test_unknown_facet(self):
        entry = {"id": "a", "pref_label": "A", "definition": "d",
                 "facet": "mood"}
        with pytest.raises(ParseError, match="mood"):
            parse_thesaurus(concepts_json([entry]))

    def test_root_requires_facet(self):
        entry = {"id": "a", "pref_label": "A", "definition": "d"}
        with pytest.raises(ParseError, match="facet"):
            parse_thesaurus(concepts_json([entry]))

    def test_related_must_be_string_array(self):
        entry = {"id": "a", "pref_label": "A", "definition": "d",
                 "facet": "audience", "related": [1]}
        with pytest.raises(ParseError, match="related"):
            parse_thesaurus(concepts_json([entry]))

    def test_duplicate_id(self):
        entry = {"id": "a", "pref_label": "A", "definition": "d",
                 "facet": "audience"}
        with pytest.raises(ValidationError, match="duplicate"):
            parse_thesaurus(concepts_json([entry, dict(entry)]))

    def test_dangling_broader(self):
        entries = [{"id": "a", "pref_label": "A", "definition": "d",
                    "broader": "ghost"}]
        with pytest.raises(ValidationError, match="ghost"):
            parse_thesaurus(concepts_json(entries))

    def test_dangling_related(self):
        entries = [{"id": "a", "pref_label": "A", "definition": "d",
                    "facet": "audience", "related": ["ghost"]}]
        with pytest.raises(ValidationError, match="ghost"):
            parse_thesaurus(concepts_json(entries))

    def test_self_related(self):
        entries = [{"id": "a", "pref_label": "A", "definition": "d",
                    "facet": "audience", "related": ["a"]}]
        with pytest.raises(ValidationError, match="itself"):
            parse_thesaurus(concepts_json(entries))

    def test_broader_cycle(self):
        entries = [
            {"id": "a", "pref_label": "A", "definition": "d", "broader": "b"},
            {"id": "b", "pref_label": "B", "definition": "d", "broader": "a"},
        ]
        with pytest.raises(ValidationError, match="cycle"):
            parse_thesaurus(concepts_json(entries))

    def test_facet_mismatch_against_parent(self):
        doc = json.loads(tiny_thesaurus_json())
        doc["concepts"][2]["facet"] = "audience"
        with pytest.raises(ValidationError, match="audience"):
            parse_thesaurus(json.dumps(doc))


class TestGraphQueries:
    def test_ancestors_nearest_first(self, tiny_thesaurus):
        assert tiny_thesaurus.ancestors("leaf-a") == [("mid", 1), ("fp", 2)]

    def test_root_has_no_ancestors(self, tiny_thesaurus):
        assert tiny_thesaurus.ancestors("fp") == []

    def test_depth(self, tiny_thesaurus):
        assert tiny_thesaurus.depth("fp") == 0
        assert tiny_thesaurus.depth("leaf-a") == 2

    def test_unknown_concept(self, tiny_thesaurus):
        with pytest.raises(ConceptNotFoundError):
            tiny_thesaurus.get("nope")
        with pytest.raises(ConceptNotFoundError):
            tiny_thesaurus.ancestors("nope")

    def test_narrower_index(self, tiny_thesaurus):
        assert tiny_thesaurus.narrower("mid") == {"leaf-a", "leaf-b"}
        assert tiny_thesaurus.narrower("leaf-a") == frozenset()

    def test_contains_and_iter(self, tiny_thesaurus):
        assert "mid" in tiny_thesaurus
        assert "nope" not in tiny_thesaurus
        assert {c.id for c in tiny_thesaurus} == set(tiny_thesaurus.concepts)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10_000), size=st.integers(6, 120))
    def test_ancestors_match_naive_walk(self, seed, size):
        t = synthetic_thesaurus(n_concepts=size, seed=seed, max_depth=5)
        for cid in sorted(t.concepts):
            assert t.ancestors(cid) == naive_ancestors(t, cid)
            assert t.depth(cid) <= 5


class TestSerialize:
    def test_roundtrip_identity(self, tiny_thesaurus):
        assert parse_thesaurus(serialize_thesaurus(tiny_thesaurus)) == tiny_thesaurus

    def test_roundtrip_fixture(self, fixture_thesaurus):
        again = parse_thesaurus(serialize_thesaurus(fixture_thesaurus))
        assert again == fixture_thesaurus

    def test_roundtrip_with_related(self):
        t = synthetic_thesaurus(n_concepts=40, seed=3, related_pairs=5)
        assert parse_thesaurus(serialize_thesaurus(t)) == t

    def test_canonical_bytes_stable(self, tiny_thesaurus):
        assert serialize_thesaurus(tiny_thesaurus) == serialize_thesaurus(tiny_thesaurus)

    def test_source_order_irrelevant(self):
        doc = json.loads(tiny_thesaurus_json())
        shuffled = {"concepts": list(reversed(doc["concepts"]))}
        a = parse_thesaurus(json.dumps(doc))
        b = parse_thesaurus(json.dumps(shuffled))
        assert serialize_thesaurus(a) == serialize_thesaurus(b)


def find_leaf(t: Thesaurus, min_depth: int = 2) -> Concept:
    for cid in sorted(t.concepts):
        if not t.narrower(cid) and t.depth(cid) >= min_depth:
            return t.get(cid)
    raise AssertionError("no suitable leaf in synthetic thesaurus")


class TestValidate:
    def test_valid_graph_empty_report(self, fixture_thesaurus):
        assert validate_thesaurus(fixture_thesaurus) == []

    def test_synthetic_clean(self):
        t = synthetic_thesaurus(n_concepts=100, seed=7, related_pairs=10)
        assert validate_thesaurus(t) == []

    def test_injected_cycle_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        parent = t.get(leaf.broader)
        assert not parent.is_root
        concepts = dict(t.concepts)
        concepts[parent.id] = replace(parent, broader=leaf.id)
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["broader-cycle"]
        assert set(violations[0].concept_ids) == {leaf.id, parent.id}

    def test_injected_dangling_broader_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, broader="missing-parent")
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["dangling-broader"]
        assert leaf.id in violations[0].concept_ids

    def test_injected_facet_mismatch_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        wrong = next(f for f in Facet if f is not leaf.facet)
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, facet=wrong)
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["facet-mismatch"]
        assert leaf.id in violations[0].concept_ids

    def test_injected_asymmetric_related_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        other = next(cid for cid in sorted(t.concepts) if cid != leaf.id)
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, related=frozenset({other}))
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["asymmetric-related"]
        assert set(violations[0].concept_ids) == {leaf.id, other}

    def test_injected_dangling_related_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, related=frozenset({"missing"}))
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["dangling-related"]

    def test_self_related_single_violation(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, related=frozenset({leaf.id}))
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["self-related"]

    def test_two_faults_two_violations(self):
        t = synthetic_thesaurus(n_concepts=60, seed=1)
        leaf = find_leaf(t)
        another = find_leaf(
            Thesaurus({cid: c for cid, c in t.concepts.items() if cid != leaf.id}))
        concepts = dict(t.concepts)
        concepts[leaf.id] = replace(leaf, broader="missing-parent")
        wrong = next(f for f in Facet if f is not another.facet)
        concepts[another.id] = replace(another, facet=wrong)
        codes = sorted(v.code for v in validate_thesaurus(Thesaurus(concepts)))
        assert codes == ["dangling-broader", "facet-mismatch"]

    def test_empty_id_reported(self, tiny_thesaurus):
        concepts = dict(tiny_thesaurus.concepts)
        concepts[""] = Concept(id="", pref_label="X", definition="x",
                               facet=Facet.AUDIENCE)
        violations = validate_thesaurus(Thesaurus(concepts))
        assert [v.code for v in violations] == ["empty-id"]
