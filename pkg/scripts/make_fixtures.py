"""Regenerate the shipped fixture corpus deterministically.

Builds a 53-concept French mini-thesaurus over the six facets, a 30-film
catalog seeded around Lift (Isaacs, 2001), and a 55-line judgment file
(11 panelists, 4 recommendations plus 1 control each, 28 of the 44
non-control links judged coherent).

Every intended property of the corpus is asserted against the real
engine before anything is written: the top-4 ranking for Lift, the
uniqueness of the zero-overlap control, the alphabetical presentation,
and the judgment tallies. Descriptor picks for the background films are
drawn from a fixed-seed RNG, so reruns are byte-identical.
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from drec import (
    Catalog,
    WeightingConfig,
    compose_panel_list,
    ingest_catalog,
    load_judgments,
    parse_thesaurus,
    serialize_thesaurus,
    shared_descriptors,
    validate_thesaurus,
)

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# (id, label, definition, facet or None, broader or None)
CONCEPTS: list[tuple[str, str, str, str | None, str | None]] = [
    ("personne-filmant", "personne filmant",
     "Caractérise la posture et le rôle de la personne qui filme.",
     "filming_person", None),
    ("presence-du-filmant", "présence du filmant",
     "Manière dont la personne filmant est présente dans le film.",
     None, "personne-filmant"),
    ("filmant-in", "filmant in",
     "La personne filmant apparaît à l'image dans le champ de la caméra.",
     None, "presence-du-filmant"),
    ("filmant-off", "filmant off",
     "La personne filmant manifeste sa présence physique hors du champ de la "
     "caméra sur le lieu et le temps du tournage.",
     None, "presence-du-filmant"),
    ("filmant-en-performance", "filmant en performance",
     "La personne filmant met en scène ses propres actions dans le but de "
     "provoquer une situation.",
     None, "presence-du-filmant"),
    ("relation-filmant-filme", "relation filmant-filmé",
     "Nature de la relation entre la personne filmant et les personnes filmées.",
     None, "personne-filmant"),
    ("filmant-complice", "filmant complice",
     "La personne filmant entretient une relation de complicité avec les "
     "personnes filmées.",
     None, "relation-filmant-filme"),
    ("filmant-observateur", "filmant observateur",
     "La personne filmant observe la situation sans intervenir dans son "
     "déroulement.",
     None, "relation-filmant-filme"),
    ("dialogue-filmant-filme", "dialogue filmant-filmé",
     "La personne filmant et la personne filmée dialoguent ensemble.",
     None, "relation-filmant-filme"),
    ("role-technique-du-filmant", "rôle technique du filmant",
     "Part que prend la personne filmant dans la fabrication technique des "
     "images.",
     None, "personne-filmant"),
    ("filmant-operateur", "filmant opérateur",
     "La personne filmant tourne elle-même des images du film.",
     None, "role-technique-du-filmant"),

    ("personne-filmee", "personne filmée",
     "Caractérise les personnes qui apparaissent à l'écran.",
     "filmed_person", None),
    ("configuration-des-filmes", "configuration des filmés",
     "Nombre et organisation des personnes filmées.",
     None, "personne-filmee"),
    ("protagoniste-unique", "protagoniste unique",
     "Le film suit un protagoniste principal unique.",
     None, "configuration-des-filmes"),
    ("protagoniste-multiple", "protagoniste multiple",
     "Le film compte plusieurs protagonistes qui ne forment pas un groupe en "
     "dehors du film.",
     None, "configuration-des-filmes"),
    ("groupe-constitue", "groupe constitué",
     "Les personnes filmées forment un groupe qui existe en dehors du film.",
     None, "configuration-des-filmes"),
    ("attitude-du-filme", "attitude du filmé",
     "Attitude des personnes filmées envers la caméra.",
     None, "personne-filmee"),
    ("regard-camera-du-filme", "regard caméra du filmé",
     "La personne filmée regarde la caméra et, à travers elle, la personne "
     "filmant autant que le public.",
     None, "attitude-du-filme"),
    ("filme-indifferent", "filmé indifférent",
     "La personne filmée poursuit son activité sans prêter attention à la "
     "caméra.",
     None, "attitude-du-filme"),

    ("situation-filmee", "situation filmée",
     "Caractérise le lieu et le temps de la situation de tournage.",
     "filmed_situation", None),
    ("lieu-de-tournage", "lieu de tournage",
     "Type de lieu où se déroule le tournage.",
     None, "situation-filmee"),
    ("huis-clos", "huis clos",
     "Le film est composé de plans tournés dans un seul et même lieu fermé.",
     None, "lieu-de-tournage"),
    ("tournage-en-exterieur", "tournage en extérieur",
     "Le film est tourné principalement en extérieur.",
     None, "lieu-de-tournage"),
    ("lieu-de-travail", "lieu de travail",
     "Le tournage se déroule sur le lieu de travail des personnes filmées.",
     None, "lieu-de-tournage"),
    ("temporalite-du-tournage", "temporalité du tournage",
     "Durée et rythme du tournage.",
     None, "situation-filmee"),
    ("tournage-au-long-cours", "tournage au long cours",
     "Le tournage s'étend sur une longue période, parfois plusieurs années.",
     None, "temporalite-du-tournage"),
    ("instant-unique", "instant unique",
     "Le film capte un événement unique dans sa durée propre.",
     None, "temporalite-du-tournage"),

    ("matieres-filmiques", "matières filmiques",
     "Caractérise les matières visuelles et sonores employées par le film.",
     "filmic_materials", None),
    ("prise-de-vue", "prise de vue",
     "Dispositif technique de captation des images.",
     None, "matieres-filmiques"),
    ("camera-portee", "caméra portée",
     "Un dispositif de prise de vue utilise la caméra comme un prolongement "
     "du corps.",
     None, "prise-de-vue"),
    ("camera-fixe", "caméra fixe",
     "La caméra est posée sur pied et ne bouge pas pendant les plans.",
     None, "prise-de-vue"),
    ("plan-sequence", "plan séquence",
     "Le film privilégie des plans longs sans coupe.",
     None, "prise-de-vue"),
    ("matiere-sonore", "matière sonore",
     "Composition de la bande sonore.",
     None, "matieres-filmiques"),
    ("son-direct", "son direct",
     "La bande sonore provient du son enregistré pendant le tournage.",
     None, "matiere-sonore"),
    ("musique-originale", "musique originale",
     "Une musique composée pour le film accompagne les images.",
     None, "matiere-sonore"),
    ("sources-des-images", "sources des images",
     "Origine des images montées dans le film.",
     None, "matieres-filmiques"),
    ("images-d-archives", "images d'archives",
     "Le film remonte des images préexistantes au tournage.",
     None, "sources-des-images"),
    ("animation-image-par-image", "animation image par image",
     "Des séquences sont fabriquées en animation image par image.",
     None, "sources-des-images"),

    ("texte-filmique", "texte filmique",
     "Caractérise la construction du film au montage et son commentaire.",
     "filmic_text", None),
    ("structure-du-recit", "structure du récit",
     "Organisation du récit au montage.",
     None, "texte-filmique"),
    ("recit-chronologique", "récit chronologique",
     "Le montage suit l'ordre chronologique des événements.",
     None, "structure-du-recit"),
    ("montage-fragmentaire", "montage fragmentaire",
     "Le montage juxtapose des fragments sans continuité narrative.",
     None, "structure-du-recit"),
    ("coherence-formelle", "cohérence formelle",
     "Les plans qui composent le film sont liés par des similarités formelles "
     "(répétition d'un motif).",
     None, "structure-du-recit"),
    ("registre-du-commentaire", "registre du commentaire",
     "Place et ton du commentaire dans le film.",
     None, "texte-filmique"),
    ("voix-off-litteraire", "voix off littéraire",
     "Une voix off au registre littéraire accompagne les images.",
     None, "registre-du-commentaire"),
    ("absence-de-commentaire", "absence de commentaire",
     "Aucun commentaire ne vient expliquer les images.",
     None, "registre-du-commentaire"),

    ("public", "public",
     "Caractérise la relation que le film institue avec son public.",
     "audience", None),
    ("mode-d-adresse", "mode d'adresse",
     "Manière dont le film s'adresse à son public.",
     None, "public"),
    ("adresse-directe-au-public", "adresse directe au public",
     "Le film s'adresse explicitement au public, par la parole ou le regard.",
     None, "mode-d-adresse"),
    ("immersion-sans-mediation", "immersion sans médiation",
     "Le film plonge le public dans la situation sans médiation explicite.",
     None, "mode-d-adresse"),
    ("experience-proposee", "expérience proposée",
     "Type d'expérience que le film propose au public.",
     None, "public"),
    ("experience-contemplative", "expérience contemplative",
     "Le film propose une expérience d'observation prolongée et contemplative.",
     None, "experience-proposee"),
    ("dispositif-ludique", "dispositif ludique",
     "Le film joue avec son public par des ruses et des détours.",
     None, "experience-proposee"),
]

RELATED_PAIRS = [
    ("regard-camera-du-filme", "adresse-directe-au-public"),
    ("filmant-observateur", "filme-indifferent"),
]

LIFT_DESCRIPTORS = [
    "filmant-en-performance",
    "huis-clos",
    "coherence-formelle",
    "protagoniste-multiple",
    "regard-camera-du-filme",
    "filmant-off",
    "filmant-complice",
    "dialogue-filmant-filme",
    "filmant-operateur",
    "camera-portee",
]

LIFT_ID = "lift-isaacs-2001"
CONTROL_ID = "the-dam-koniarz-2018"
EXPECTED_TOP4 = [
    "secteur-545-creton-2004",
    "oumoun-ghammam-2017",
    "le-village-simon-2019",
    "les-glaneurs-et-la-glaneuse-deux-ans-apres-varda-2002",
]

# (id, title, director, year, duration_min, synopsis, descriptors or n_shared)
NAMED_FILMS = [
    (LIFT_ID, "Lift", "Marc Isaacs", 2001, 24,
     "Le cinéaste s'installe avec sa caméra dans l'ascenseur d'une tour de "
     "logements londonienne et filme, jour après jour, ses habitants.",
     LIFT_DESCRIPTORS),
    ("secteur-545-creton-2004", "Secteur 545", "Pierre Creton", 2004, 105,
     "Peseur de lait dans le pays de Caux, le cinéaste filme les éleveurs "
     "qu'il visite et interroge sa propre place parmi eux.",
     ["filmant-off", "filmant-complice", "dialogue-filmant-filme",
      "filmant-operateur", "camera-portee", "protagoniste-multiple",
      "regard-camera-du-filme", "coherence-formelle",
      "lieu-de-travail", "tournage-au-long-cours"]),
    ("oumoun-ghammam-2017", "Oumoun", "Fairouz Ghammam", 2017, 28,
     "Dans la cuisine familiale, la cinéaste filme sa mère et recompose avec "
     "elle les gestes et les paroles d'une transmission.",
     ["huis-clos", "filmant-complice", "dialogue-filmant-filme",
      "filmant-operateur", "camera-portee", "protagoniste-multiple",
      "filmant-off", "son-direct", "musique-originale", "instant-unique"]),
    ("le-village-simon-2019", "Le Village", "Claire Simon", 2019, 45,
     "Chronique au long cours d'un village ardéchois où s'invente une "
     "plateforme dédiée au cinéma documentaire.",
     ["protagoniste-multiple", "filmant-complice", "filmant-operateur",
      "dialogue-filmant-filme", "coherence-formelle", "camera-portee",
      "tournage-au-long-cours", "lieu-de-travail", "recit-chronologique",
      "son-direct"]),
    ("les-glaneurs-et-la-glaneuse-deux-ans-apres-varda-2002",
     "Les Glaneurs et la Glaneuse : deux ans après", "Agnès Varda", 2002, 64,
     "La cinéaste retourne voir les glaneurs rencontrés deux ans plus tôt et "
     "poursuit, caméra en main, son propre glanage d'images.",
     ["filmant-off", "filmant-operateur", "camera-portee",
      "dialogue-filmant-filme", "protagoniste-multiple",
      "voix-off-litteraire", "musique-originale", "tournage-en-exterieur",
      "adresse-directe-au-public", "recit-chronologique"]),
    (CONTROL_ID, "The Dam", "Natalia Koniarz", 2018, 20,
     "Sur un barrage, des ouvriers répètent les mêmes gestes face à une "
     "caméra qui se tient à distance.",
     ["tournage-en-exterieur", "camera-fixe", "son-direct",
      "absence-de-commentaire", "experience-contemplative",
      "protagoniste-unique", "filmant-observateur", "recit-chronologique",
      "lieu-de-travail", "tournage-au-long-cours"]),
]

# Background films: share 1 to 3 descriptors with Lift, never zero.
BACKGROUND_FILMS = [
    ("chris-the-swiss-kofmel-2018", "Chris the Swiss", "Anja Kofmel", 2018, 90,
     "La réalisatrice enquête sur la mort de son cousin journaliste pendant "
     "la guerre en ex-Yougoslavie, entre archives et animation."),
    ("carre-35-caravaca-2017", "Carré 35", "Éric Caravaca", 2017, 67,
     "Le réalisateur exhume l'histoire d'une sœur morte avant sa naissance "
     "et interroge les silences de sa famille."),
    ("countdown-stonys-2004", "Countdown", "Audrius Stonys", 2004, 45,
     "Un compte à rebours contemplatif dans les paysages baltes."),
    ("maguy-marin-mambouch-2018", "Maguy Marin", "David Mambouch", 2018, 108,
     "Portrait de la chorégraphe et de la violence politique de son œuvre."),
    ("terrestres-rajotte-2020", "Terrestres", "Nicolas Rajotte", 2020, 75,
     "Des corps au travail dans les paysages agricoles du Québec."),
    ("le-plein-pays-boutet-2009", "Le Plein pays", "Antoine Boutet", 2009, 58,
     "Un homme creuse seul des galeries dans la forêt et grave des présages."),
    ("scheme-birds-fiske-2019", "Scheme Birds", "Ellen Fiske", 2019, 86,
     "Dans une cité écossaise, une adolescente grandit entre pigeons et "
     "bagarres."),
    ("bab-sebta-maroufi-2019", "Bab Sebta", "Randa Maroufi", 2019, 19,
     "Reconstitution chorégraphiée des trafics à la frontière de Ceuta."),
    ("et-la-vie-gheerbrant-1990", "Et la vie", "Denis Gheerbrant", 1990, 90,
     "Le cinéaste traverse la France et recueille des paroles de vie."),
    ("fremd-fassbender-2011", "Fremd", "Miriam Fassbender", 2011, 91,
     "Deux migrants traversent le Sahara vers l'Europe, filmés au long "
     "cours."),
    ("our-city-tarantino-2015", "Our City", "Maria Tarantino", 2015, 88,
     "Bruxelles racontée par ceux qui la traversent et la construisent."),
    ("la-ronde-perrin-2018", "La Ronde", "Alexandre Perrin", 2018, 52,
     "Une ronde de nuit dans une ville endormie."),
    ("libre-toesca-2018", "Libre", "Michel Toesca", 2018, 100,
     "Dans la vallée de la Roya, un agriculteur aide des migrants à passer, "
     "filmé par un ami cinéaste."),
    ("la-ravine-verneret-2018", "La Ravine", "Hubert Verneret", 2018, 55,
     "Mémoire paysanne d'un hameau bourguignon."),
    ("voisins-mclaren-1952", "Voisins", "Norman McLaren", 1952, 8,
     "Deux voisins s'entretuent pour une fleur, en pixilation."),
    ("il-pianeta-azzurro-piavoli-1982", "Il pianeta azzurro", "Franco Piavoli",
     1982, 80, "Poème visuel sur les cycles de la nature et des hommes."),
    ("les-hommes-michel-2006", "Les Hommes", "Ariane Michel", 2006, 95,
     "Des scientifiques débarquent sur la côte du Groenland, vus depuis la "
     "nature qui les regarde."),
    ("lightning-dance-bengolea-2018", "Lightning Dance", "Cecilia Bengolea",
     2018, 46, "À la Jamaïque, des danses rituelles appellent l'orage."),
    ("normal-tulli-2019", "Normal", "Adele Tulli", 2019, 70,
     "Mosaïque des rituels de genre dans l'Italie contemporaine."),
    ("wild-relatives-manna-2017", "Wild Relatives", "Jumana Manna", 2017, 65,
     "Des graines syriennes voyagent entre le Svalbard et la Bekaa."),
    ("ur-musig-schlapfer-1993", "Ur-Musig", "Cyrill Schläpfer", 1993, 107,
     "Musiques archaïques des alpages suisses, enregistrées sur le vif."),
    ("les-poussieres-franju-1954", "Les Poussières", "Georges Franju", 1954,
     22, "Commande industrielle détournée en poème sur la poussière "
     "ouvrière."),
    ("l-assemblee-otero-2017", "L'Assemblée", "Mariana Otero", 2017, 99,
     "Place de la République, le mouvement Nuit debout invente son "
     "assemblée."),
    ("l-ile-aux-fleurs-furtado-1989", "L'Île aux fleurs", "Jorge Furtado",
     1989, 13, "Le trajet d'une tomate jusqu'à la décharge, en démonstration "
     "par l'absurde."),
]

NON_LIFT_LEAVES = [
    "filmant-in", "filmant-observateur", "protagoniste-unique",
    "groupe-constitue", "filme-indifferent", "tournage-en-exterieur",
    "lieu-de-travail", "tournage-au-long-cours", "instant-unique",
    "camera-fixe", "plan-sequence", "son-direct", "musique-originale",
    "images-d-archives", "animation-image-par-image", "recit-chronologique",
    "montage-fragmentaire", "voix-off-litteraire", "absence-de-commentaire",
    "adresse-directe-au-public", "immersion-sans-mediation",
    "experience-contemplative", "dispositif-ludique",
]

# subscriber -> (input, coherent count among their 4, control verdict)
PANEL_SHAPE = [
    ("a01", "chris-the-swiss-kofmel-2018", 4, "incoherent"),
    ("a02", "et-la-vie-gheerbrant-1990", 3, "incoherent"),
    ("a03", "libre-toesca-2018", 3, "coherent"),
    ("a04", "la-ronde-perrin-2018", 3, "incoherent"),
    ("a05", "terrestres-rajotte-2020", 3, "incoherent"),
    ("a06", LIFT_ID, 3, "incoherent"),
    ("a07", "le-village-simon-2019", 2, "incoherent"),
    ("a08", "l-ile-aux-fleurs-furtado-1989", 2, "coherent"),
    ("a09", "il-pianeta-azzurro-piavoli-1982", 2, "incoherent"),
    ("a10", "ur-musig-schlapfer-1993", 2, "incoherent"),
    ("a11", "les-poussieres-franju-1954", 1, "incoherent"),
]

NOTES = {
    ("a06", "secteur-545-creton-2004"):
        "Même présence du filmant auprès des personnes, lien évident.",
    ("a06", CONTROL_ID):
        "Rien à voir avec le dispositif de Lift, caméra lointaine.",
    ("a01", "carre-35-caravaca-2017"):
        "Même travail d'enquête intime sur une mémoire familiale.",
    ("a11", "voisins-mclaren-1952"):
        "Le burlesque n'a rien de commun avec le regard documentaire.",
}


def build_thesaurus_payload() -> dict:
    concepts = []
    related: dict[str, list[str]] = {}
    for a, b in RELATED_PAIRS:
        related.setdefault(a, []).append(b)
        related.setdefault(b, []).append(a)
    for cid, label, definition, facet, broader in CONCEPTS:
        entry: dict = {"id": cid, "pref_label": label, "definition": definition}
        if facet is not None:
            entry["facet"] = facet
        if broader is not None:
            entry["broader"] = broader
        if cid in related:
            entry["related"] = sorted(related[cid])
        concepts.append(entry)
    return {"concepts": concepts}


def assign_background_descriptors(rng: random.Random) -> dict[str, list[str]]:
    picks: dict[str, list[str]] = {}
    for i, (fid, *_rest) in enumerate(BACKGROUND_FILMS):
        n_shared = 1 + i % 3
        shared = rng.sample(LIFT_DESCRIPTORS, n_shared)
        rest = rng.sample(NON_LIFT_LEAVES, 10 - n_shared)
        descriptors = shared + rest
        rng.shuffle(descriptors)
        picks[fid] = descriptors
    return picks


def film_line(fid: str, title: str, director: str, year: int, duration: int,
              synopsis: str, descriptors: list[str]) -> str:
    return json.dumps(
        {"id": fid, "title": title, "director": director, "year": year,
         "duration_min": duration, "synopsis": synopsis,
         "descriptors": descriptors},
        ensure_ascii=False, separators=(", ", ": "))


def build_catalog_lines(rng: random.Random) -> list[str]:
    lines = [film_line(*film) for film in NAMED_FILMS]
    picks = assign_background_descriptors(rng)
    for fid, title, director, year, duration, synopsis in BACKGROUND_FILMS:
        lines.append(film_line(fid, title, director, year, duration, synopsis,
                               picks[fid]))
    return lines


def build_judgment_lines(catalog: Catalog) -> list[str]:
    film_ids = list(catalog.film_ids)
    lines = []
    n_coherent = 0
    for idx, (subscriber, input_id, coherent, control_verdict) in enumerate(PANEL_SHAPE):
        if input_id == LIFT_ID:
            panel = compose_panel_list(catalog, input_id)
            outputs = [fid for fid, _ in panel.recommended]
            control = panel.control
        else:
            pool = [fid for fid in film_ids
                    if fid != input_id and fid != CONTROL_ID]
            start = (idx * 7) % (len(pool) - 5)
            outputs = pool[start:start + 4]
            control = pool[start + 4]
        for j, output in enumerate(outputs):
            verdict = "coherent" if j < coherent else "incoherent"
            n_coherent += verdict == "coherent"
            lines.append(json.dumps(
                {"subscriber": subscriber, "input": input_id, "output": output,
                 "verdict": verdict, "is_control": False,
                 "note": NOTES.get((subscriber, output))},
                ensure_ascii=False, separators=(", ", ": ")))
        lines.append(json.dumps(
            {"subscriber": subscriber, "input": input_id, "output": control,
             "verdict": control_verdict, "is_control": True,
             "note": NOTES.get((subscriber, control))},
            ensure_ascii=False, separators=(", ", ": ")))
    assert n_coherent == 28, n_coherent
    return lines


def check_corpus(catalog: Catalog) -> None:
    lift = catalog.get(LIFT_ID)
    disjoint = [f.id for f in catalog
                if f.id != LIFT_ID and not shared_descriptors(lift, f)]
    assert disjoint == [CONTROL_ID], disjoint

    panel = compose_panel_list(catalog, LIFT_ID, 4, WeightingConfig())
    got = [fid for fid, _ in panel.recommended]
    assert got == EXPECTED_TOP4, got
    assert panel.control == CONTROL_ID, panel.control
    scores = [score for _, score in panel.recommended]
    assert all(a > b for a, b in zip(scores, scores[1:])), scores

    others = [f.id for f in catalog
              if f.id not in {LIFT_ID, CONTROL_ID, *EXPECTED_TOP4}]
    from drec import descriptor_vector, similarity
    w = WeightingConfig()
    lift_vec = descriptor_vector(lift, catalog.thesaurus, w)
    best_other = max(
        similarity(lift_vec, descriptor_vector(catalog.get(fid), catalog.thesaurus, w))
        for fid in others)
    margin = scores[-1] - best_other
    assert margin > 0.02, (scores[-1], best_other)

    titles = [catalog.get(fid).title for fid in panel.presented]
    folded = [t.casefold() for t in titles]
    assert folded == sorted(folded) and len(set(folded)) == 5, titles
    assert not panel.explanations[CONTROL_ID].shared

    all_titles = [f.title for f in catalog]
    assert len(set(all_titles)) == len(all_titles) == 30


def main() -> int:
    thesaurus_payload = json.dumps(build_thesaurus_payload(),
                                   ensure_ascii=False, indent=2)
    thesaurus = parse_thesaurus(thesaurus_payload)
    violations = validate_thesaurus(thesaurus)
    assert not violations, violations
    canonical = serialize_thesaurus(thesaurus)
    assert parse_thesaurus(canonical) == thesaurus

    rng = random.Random(20010901)
    catalog_lines = build_catalog_lines(rng)
    catalog_text = "\n".join(catalog_lines) + "\n"
    catalog = ingest_catalog(catalog_text, thesaurus)
    assert len(catalog) == 30
    check_corpus(catalog)

    judgment_lines = build_judgment_lines(catalog)
    judgments_text = "\n".join(judgment_lines) + "\n"
    judgments = load_judgments(judgments_text)
    assert len(judgments) == 55
    assert sum(j.is_control for j in judgments) == 11
    non_control = [j for j in judgments if not j.is_control]
    coherent = sum(j.coherent for j in non_control)
    assert Fraction(coherent, len(non_control)) == Fraction(28, 44)

    FIXTURES.mkdir(exist_ok=True)
    (FIXTURES / "thesaurus.json").write_bytes(canonical)
    (FIXTURES / "catalog.jsonl").write_text(catalog_text, encoding="utf-8")
    (FIXTURES / "judgments.jsonl").write_text(judgments_text, encoding="utf-8")
    print(f"thesaurus: {len(thesaurus)} concepts, {len(thesaurus.roots)} roots")
    print(f"catalog: {len(catalog)} films")
    print(f"judgments: {len(judgments)} rows, {coherent}/{len(non_control)} coherent")
    return 0


if __name__ == "__main__":
    sys.exit(main())
