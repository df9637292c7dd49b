"""Shared fixtures: the small hand-enumerable corpus and a seeded random
graph generator for property/oracle tests."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from scholargraph.graph import KnowledgeGraph, build_from_files, build_graph
from scholargraph.ingest import PaperRecord
from scholargraph.nlq import QueryCatalog, load_catalog

DATA = Path(__file__).parent / "data"

MINI_CORPUS = DATA / "mini.jsonl"
MINI_VENUES = DATA / "venues.json"
MINI_FIELDS = DATA / "fields.json"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def mini_graph() -> KnowledgeGraph:
    g, skipped = build_from_files(MINI_CORPUS, MINI_VENUES, MINI_FIELDS)
    assert skipped == 0
    return g


@pytest.fixture(scope="session")
def catalog() -> QueryCatalog:
    return load_catalog()


# ---------------------------------------------------------------------------
# Random graph generation.  Names are chosen so that an exact display name in
# a query always links back to its own entity: distinct names per kind, and
# the linker prefers the longest exact subsequence on ties.

_FIRST = ["Ada", "Ben", "Cora", "Dev", "Elif", "Femi", "Gus", "Hana", "Igor", "Jun"]
_LAST = ["Moss", "Noor", "Okafor", "Petrov", "Quill", "Rask", "Sethi", "Tanaka", "Udo", "Vogel"]
_VENUES = ["Borealis Symposium", "Cardiff Letters", "Delta Workshop", "Ember Conference", "Fjord Meeting"]
_FIELDS = ["syntax", "semantics", "phonology", "discourse", "pragmatics", "morphology"]
_TITLE_WORDS = ["graphs", "models", "corpora", "grammars", "lexicons", "treelets", "alignments", "taggers"]
_SENTENCES = [
    "This approach improves results .",
    "An excellent and robust method .",
    "The model fails badly here .",
    "Results are poor and brittle .",
    "We use the standard setup .",
    "Details follow the original description .",
    "The data set is described elsewhere .",
]


def make_random_graph(seed: int, max_papers: int = 30) -> KnowledgeGraph:
    """A small random heterogeneous graph (well under 50 nodes)."""
    rng = random.Random(seed)
    n_authors = rng.randint(2, 8)
    n_venues = rng.randint(1, 3)
    n_fields = rng.randint(1, 4)

    author_names = {
        f"a{i + 1}": name
        for i, name in enumerate(rng.sample([f"{f} {l}" for f in _FIRST for l in _LAST], n_authors))
    }
    venue_names = {f"V{i + 1}": name for i, name in enumerate(rng.sample(_VENUES, n_venues))}
    field_names = {f"F{i + 1}": name for i, name in enumerate(rng.sample(_FIELDS, n_fields))}

    cap = min(max_papers, 50 - (n_authors + n_venues + n_fields) - 2)
    n_papers = rng.randint(1, max(1, cap))

    records = []
    for i in range(n_papers):
        pid = f"P{i + 1:02d}"
        cited = [f"P{j + 1:02d}" for j in range(i) if rng.random() < 0.25]
        contexts = [(c, rng.choice(_SENTENCES)) for c in cited if rng.random() < 0.7]
        records.append(
            PaperRecord(
                paper_id=pid,
                title=f"On {rng.choice(_TITLE_WORDS)} and {rng.choice(_TITLE_WORDS)} {i + 1}",
                author_ids=rng.sample(list(author_names), rng.randint(1, min(3, n_authors))),
                venue_id=rng.choice(list(venue_names)),
                year=rng.randint(2000, 2012),
                abstract=None,
                cited_paper_ids=cited,
                contexts=contexts,
                urls=[],
                affiliations=[],
                field_ids=sorted(rng.sample(list(field_names), rng.randint(0, min(2, n_fields)))),
            )
        )
    return build_graph(records, author_names, venue_names, field_names)
