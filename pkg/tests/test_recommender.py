from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drec import (
    WeightingConfig,
    compose_panel_list,
    descriptor_vector,
    explain,
    ingest_catalog,
    recommend,
    select_control,
    similarity,
)
from drec.errors import CapacityError, FilmNotFoundError, NoControlError
from drec.recommender import panel_json, panel_to_dict
from drec.synthetic import synthetic_catalog, synthetic_thesaurus

from .conftest import catalog_text, film_obj
from .oracles import naive_control, naive_ranking

LIFT = "lift-isaacs-2001"
TOP4 = [
    "secteur-545-creton-2004",
    "oumoun-ghammam-2017",
    "le-village-simon-2019",
    "les-glaneurs-et-la-glaneuse-deux-ans-apres-varda-2002",
]
CONTROL = "the-dam-koniarz-2018"


def score_fn(catalog, config=WeightingConfig()):
    def fn(a, b):
        return similarity(descriptor_vector(a, catalog.thesaurus, config),
                          descriptor_vector(b, catalog.thesaurus, config),
                          config.metric)
    return fn


class TestRecommend:
    def test_fixture_ranking(self, fixture_catalog):
        ranked = recommend(fixture_catalog, LIFT)
        assert [fid for fid, _ in ranked] == TOP4
        scores = [s for _, s in ranked]
        assert scores == sorted(scores, reverse=True)
        assert LIFT not in {fid for fid, _ in ranked}

    def test_matches_naive_scan(self, fixture_catalog):
        expected = naive_ranking(fixture_catalog, LIFT,
                                 score_fn(fixture_catalog))[:4]
        assert recommend(fixture_catalog, LIFT) == expected

    def test_score_tie_breaks_on_id(self, tiny_thesaurus):
        films = [
            film_obj("seed", ["leaf-a", "leaf-b"]),
            film_obj("twin-b", ["leaf-a"]),
            film_obj("twin-a", ["leaf-a"]),
            film_obj("off-topic", ["leaf-c"]),
        ]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        ranked = recommend(catalog, "seed", k=3)
        assert ranked[0][1] == ranked[1][1]
        assert [fid for fid, _ in ranked[:2]] == ["twin-a", "twin-b"]

    def test_catalog_too_small(self, tiny_thesaurus):
        films = [film_obj(f"f{i}", ["leaf-a"]) for i in range(4)]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        with pytest.raises(CapacityError):
            recommend(catalog, "f0", k=4)
        assert len(recommend(catalog, "f0", k=3)) == 3

    def test_unknown_seed(self, fixture_catalog):
        with pytest.raises(FilmNotFoundError):
            recommend(fixture_catalog, "ghost")

    @settings(max_examples=30, deadline=None)
    @given(t_seed=st.integers(0, 5000), c_seed=st.integers(0, 5000),
           n_films=st.integers(6, 16), k=st.integers(1, 5))
    def test_random_corpora_match_naive_scan(self, t_seed, c_seed, n_films, k):
        t = synthetic_thesaurus(n_concepts=40, seed=t_seed, max_depth=4)
        catalog = synthetic_catalog(t, n_films=n_films, seed=c_seed,
                                    descriptors_per_film=5)
        seed_film = catalog.film_ids[c_seed % n_films]
        expected = naive_ranking(catalog, seed_film, score_fn(catalog))[:k]
        assert recommend(catalog, seed_film, k=k) == expected


class TestSelectControl:
    def test_fixture_control(self, fixture_catalog):
        assert select_control(fixture_catalog, LIFT) == CONTROL

    def test_matches_naive_scan(self, fixture_catalog):
        assert select_control(fixture_catalog, LIFT) == naive_control(
            fixture_catalog, LIFT, score_fn(fixture_catalog))

    def test_no_disjoint_candidate(self, tiny_thesaurus):
        films = [
            film_obj("seed", ["leaf-a"]),
            film_obj("close", ["leaf-a", "leaf-b"]),
        ]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        with pytest.raises(NoControlError):
            select_control(catalog, "seed")

    def test_relax_degrades_to_minimal_overlap(self, tiny_thesaurus):
        films = [
            film_obj("seed", ["leaf-a", "leaf-b", "leaf-c"]),
            film_obj("two-shared", ["leaf-a", "leaf-b"]),
            film_obj("one-shared", ["leaf-c", "mid"]),
        ]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        assert select_control(catalog, "seed", relax=True) == "one-shared"

    def test_exclusion_is_honored(self, fixture_catalog):
        with pytest.raises(NoControlError):
            select_control(fixture_catalog, LIFT, exclude={CONTROL})

    def test_tie_breaks_on_id(self, tiny_thesaurus):
        films = [
            film_obj("seed", ["leaf-a"]),
            film_obj("z-far", ["leaf-c"]),
            film_obj("a-far", ["leaf-c"]),
        ]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        assert select_control(catalog, "seed") == "a-far"


class TestExplain:
    def test_fixture_pair(self, fixture_catalog):
        explanation = explain(fixture_catalog, LIFT, TOP4[0])
        assert len(explanation.shared) == 8
        assert list(explanation.shared_ids) == sorted(explanation.shared_ids)
        expected = score_fn(fixture_catalog)(fixture_catalog.get(LIFT),
                                             fixture_catalog.get(TOP4[0]))
        assert explanation.score == expected

    def test_control_pair_is_empty(self, fixture_catalog):
        explanation = explain(fixture_catalog, LIFT, CONTROL)
        assert explanation.shared == ()

    def test_concepts_carry_labels(self, fixture_catalog):
        explanation = explain(fixture_catalog, LIFT, TOP4[1])
        by_id = {c.id: c for c in explanation.shared}
        assert by_id["huis-clos"].pref_label == "huis clos"
        assert by_id["huis-clos"].definition.startswith("Le film est composé")

    def test_unknown_film(self, fixture_catalog):
        with pytest.raises(FilmNotFoundError):
            explain(fixture_catalog, LIFT, "ghost")


class TestComposePanel:
    def test_fixture_panel_invariants(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        recommended_ids = [fid for fid, _ in panel.recommended]
        assert recommended_ids == TOP4
        assert panel.control == CONTROL
        assert panel.control not in recommended_ids
        titles = [fixture_catalog.get(fid).title for fid in panel.presented]
        assert titles == sorted(titles, key=str.casefold)
        assert set(panel.explanations) == set(recommended_ids) | {CONTROL}
        assert not panel.explanations[CONTROL].shared

    def test_no_control_propagates(self, tiny_thesaurus):
        films = [film_obj(f"f{i}", ["leaf-a", "leaf-b"]) for i in range(6)]
        catalog = ingest_catalog(catalog_text(films), tiny_thesaurus)
        with pytest.raises(NoControlError):
            compose_panel_list(catalog, "f0", k=4)

    def test_k_parameter(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT, k=2)
        assert len(panel.recommended) == 2
        assert len(panel.presented) == 3


class TestWireFormat:
    def test_unblind_payload(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        payload = panel_to_dict(panel, blind=False)
        assert list(payload) == ["input", "recommended", "control",
                                 "presented", "explanations"]
        assert payload["control"] == CONTROL
        assert payload["explanations"][CONTROL]["shared"] == []
        assert [r["film"] for r in payload["recommended"]] == TOP4

    def test_blind_payload_hides_control_only(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        blind = panel_to_dict(panel, blind=True)
        unblind = panel_to_dict(panel, blind=False)
        assert "control" not in blind
        assert CONTROL not in blind["explanations"]
        assert blind["presented"] == unblind["presented"]
        assert blind["recommended"] == unblind["recommended"]
        assert set(unblind["explanations"]) - set(blind["explanations"]) == {CONTROL}

    def test_scores_rounded_to_nine_places(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        payload = panel_to_dict(panel)
        for entry in payload["recommended"]:
            assert entry["score"] == round(entry["score"], 9)

    def test_json_bytes_stable_and_utf8(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        blob = panel_json(panel, blind=False)
        assert blob == panel_json(panel, blind=False)
        text = blob.decode("utf-8")
        assert "caméra" in text  # ensure_ascii is off
        assert json.loads(text)["input"] == LIFT

    def test_shared_entries_carry_facets(self, fixture_catalog):
        panel = compose_panel_list(fixture_catalog, LIFT)
        payload = panel_to_dict(panel)
        entry = payload["explanations"][TOP4[0]]["shared"][0]
        assert set(entry) == {"id", "label", "definition", "facet"}
