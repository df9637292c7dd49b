"""Top-level acceptance gate.

Each test encodes one release criterion and prints as exactly one pass/fail
line under ``pytest -v``.  The oracles (brute-force path enumeration,
try-every-h, direct impact-factor evaluation) live next to the unit tests
they back and are reused here rather than re-derived.
"""

import random
import time
from collections import Counter

from fastapi.testclient import TestClient

from scholargraph.citetext import (
    aggregate_sentiment,
    load_lexicon,
    score_context,
    summarize_incoming,
)
from scholargraph.graph import (
    EntityKind,
    MetapathSpec,
    build_from_files,
    co_cited_with,
    metapath_traverse,
)
from scholargraph.metrics import h_index, impact_factor
from scholargraph.nlq import answer_nlq, classify_query, load_catalog
from scholargraph.profiles import author_profile, paper_profile, venue_profile
from scholargraph.service import create_app
from scholargraph.storage import dump_text, graph_file_text, parse_graph_text
from tests.conftest import MINI_CORPUS, MINI_FIELDS, MINI_VENUES, make_random_graph
from tests.test_graph import _all_specs, _brute_force_walks
from tests.test_metrics import _brute_h_index, _direct_impact_factor

# ---------------------------------------------------------------------------
# 1. the hand-enumerable fixture reproduces every frozen number, fast
# ---------------------------------------------------------------------------


def test_mini_fixture_exact_values_under_one_second():
    started = time.perf_counter()
    g, skipped = build_from_files(MINI_CORPUS, MINI_VENUES, MINI_FIELDS)
    assert skipped == 0
    assert g.node_count() == 13
    assert g.edge_count() == 24
    assert [g.citation_count(p) for p in ("P1", "P2", "P3", "P4", "P5", "P6")] == [3, 2, 1, 0, 0, 0]
    assert [h_index(g, a) for a in ("a1", "a2", "a3")] == [2, 1, 0]
    factor = impact_factor(g, "ACL", 2012)
    assert factor.value == 2.0
    assert not factor.empty_window
    assert co_cited_with(g, "P1") == [("P2", 2), ("P3", 1)]
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"fixture build+checks took {elapsed:.3f}s"


# ---------------------------------------------------------------------------
# 2. metapath traversal equals brute-force path enumeration
# ---------------------------------------------------------------------------


def test_metapath_traversal_matches_brute_force_enumeration():
    specs = _all_specs(max_len=4)
    graphs = 0
    mismatches = []
    for seed in range(100):
        g = make_random_graph(seed, max_papers=12)
        assert g.node_count() <= 50
        graphs += 1
        rng = random.Random(seed * 31 + 7)
        for spec in specs:
            starts = [n.node_id for n in g.nodes(spec.kinds[0])]
            for start in rng.sample(starts, min(2, len(starts))):
                got = metapath_traverse(g, start, spec)
                want = Counter(_brute_force_walks(g, start, spec))
                if got != want:
                    mismatches.append((seed, spec, start))
    assert graphs >= 100
    assert not mismatches, mismatches[:5]


# ---------------------------------------------------------------------------
# 3. closed-form metrics equal their brute-force / direct-formula oracles
# ---------------------------------------------------------------------------


def test_metric_oracles_match_brute_force_and_direct_formula():
    h_checked = if_checked = 0
    for seed in range(100):
        g = make_random_graph(seed)
        for author in g.nodes(EntityKind.AUTHOR):
            for upto in (None, 2004, 2008, 2012):
                assert h_index(g, author.node_id, upto) == _brute_h_index(g, author.node_id, upto)
                h_checked += 1
        for venue in g.nodes(EntityKind.VENUE):
            for year in range(2000, 2015):
                got = impact_factor(g, venue.node_id, year)
                value, window, cites = _direct_impact_factor(g, venue.node_id, year)
                assert got.value == value
                assert (got.papers_in_window, got.citations_in_year) == (window, cites)
                assert got.empty_window == (window == 0)
                if_checked += 1
    assert h_checked >= 100 and if_checked >= 100


# ---------------------------------------------------------------------------
# 4. catalog scale, perfect round-trip, and all fifteen stock questions
# ---------------------------------------------------------------------------

STOCK_QUERIES = (
    "is ACL accepting papers from parsing",
    "how many parsing papers are published in ACL over the years",
    "list the papers from parsing accepted in ACL",
    "has Ann Smith published any paper",
    "how many papers are published by Ann Smith",
    "list the papers published by Ann Smith",
    "does Bo Li publish papers on embeddings",
    "how many papers are published by Bo Li in embeddings",
    "list the papers published by Bo Li on embeddings",
    "are there any papers published by Ann Smith and Bo Li together",
    "how many papers are published by Ann Smith and Bo Li together",
    "list the papers published by Ann Smith and Bo Li together",
    "are there any papers of Ann Smith with positive sentiment",
    "how many papers are there of Ann Smith with positive sentiment",
    "list of papers with positive sentiment of Ann Smith",
)

DUMMY_FILLS = {
    "A": "alpha person",
    "A1": "alpha person",
    "A2": "beta person",
    "V": "gamma place",
    "V1": "gamma place",
    "V2": "delta place",
    "F": "epsilon topic",
}


def test_query_catalog_scale_roundtrip_and_stock_queries(mini_graph):
    catalog = load_catalog()
    surfaces = {e.surface.casefold() for e in catalog.entries}
    assert len(catalog.entries) >= 1200
    assert len(surfaces) == len(catalog.entries)

    misrouted = [
        (e.surface, classify_query(e.fill(DUMMY_FILLS), catalog).template.template_id)
        for e in catalog.entries
        if classify_query(e.fill(DUMMY_FILLS), catalog).template.template_id != e.template_id
    ]
    assert not misrouted, misrouted[:5]

    seen_templates = set()
    for text in STOCK_QUERIES:
        answer = answer_nlq(mini_graph, text, catalog=catalog)
        assert answer.to_dict()["result"] is not None
        seen_templates.add(answer.template_id)
    assert len(seen_templates) == 15  # every class x intent cell exercised


# ---------------------------------------------------------------------------
# 5. the three answer classes agree with each other on random graphs
# ---------------------------------------------------------------------------


def _answer_count(answer):
    if answer.shape == "series":
        return sum(count for _, count in answer.series.to_pairs())
    return answer.count


def test_binary_count_and_list_answers_agree_across_classes():
    rows = (
        (
            "is {V} accepting papers from {F}",
            "how many {F} papers are published in {V} over the years",
            "list the papers from {F} accepted in {V}",
        ),
        (
            "has {A} published any paper",
            "how many papers are published by {A}",
            "list the papers published by {A}",
        ),
        (
            "does {A} publish papers on {F}",
            "how many papers are published by {A} in {F}",
            "list the papers published by {A} on {F}",
        ),
        (
            "are there any papers published by {A1} and {A2} together",
            "how many papers are published by {A1} and {A2} together",
            "list the papers published by {A1} and {A2} together",
        ),
        (
            "are there any papers of {A} with positive sentiment",
            "how many papers are there of {A} with positive sentiment",
            "list of papers with positive sentiment of {A}",
        ),
    )
    checked = 0
    graphs = 0
    seed = 0
    while graphs < 100:
        g = make_random_graph(seed)
        seed += 1
        authors = [n.display for n in g.nodes(EntityKind.AUTHOR)]
        venues = [n.display for n in g.nodes(EntityKind.VENUE)]
        fields = [n.display for n in g.nodes(EntityKind.FIELD)]
        # the joint-authorship row needs two people; the venue/field row needs
        # at least one field to have been assigned somewhere
        if len(authors) < 2 or not venues or not fields:
            continue
        graphs += 1
        fills = {
            "A": authors[0],
            "A1": authors[0],
            "A2": authors[1],
            "V": venues[0],
            "F": fields[0],
        }
        for binary_q, count_q, list_q in rows:
            yes = answer_nlq(g, binary_q.format(**fills)).yes
            count = _answer_count(answer_nlq(g, count_q.format(**fills)))
            listed = len(answer_nlq(g, list_q.format(**fills)).papers)
            assert yes == (count > 0), (seed, binary_q, yes, count)
            assert count == listed, (seed, count_q, count, listed)
            checked += 1
    assert checked == 500


# ---------------------------------------------------------------------------
# 6. sentiment stays bounded and exact; summaries quote real contexts
# ---------------------------------------------------------------------------


def test_sentiment_bounded_exact_mean_and_verbatim_summaries(mini_graph):
    lexicon = load_lexicon()
    words = sorted(lexicon.positive | lexicon.negative) + ["the", "model", "data", "results"]
    rng = random.Random(99)
    for _ in range(500):
        sentence = " ".join(rng.choice(words) for _ in range(rng.randint(0, 12)))
        assert -1.0 <= score_context(sentence, lexicon) <= 1.0

    mean, contexts = aggregate_sentiment(mini_graph, "P1", lexicon)
    scores = [
        score_context(sentence, lexicon)
        for _, sentence in mini_graph.incoming_contexts("P1")
    ]
    assert contexts == len(scores) == 3
    assert mean == sum(scores) / len(scores)

    for seed in range(30):
        g = make_random_graph(seed)
        for paper in g.nodes(EntityKind.PAPER):
            incoming = {s for _, s in g.incoming_contexts(paper.node_id)}
            summary = summarize_incoming(g, paper.node_id)
            assert len(summary) <= 5
            assert all(sentence in incoming for sentence in summary.sentences)


# ---------------------------------------------------------------------------
# 7. serialization round-trips byte-for-byte
# ---------------------------------------------------------------------------


def test_dump_round_trip_is_byte_identical(mini_graph):
    for g in [mini_graph] + [make_random_graph(seed) for seed in range(50)]:
        dump = dump_text(g)
        assert dump_text(parse_graph_text(dump)) == dump
        full = graph_file_text(g)
        assert graph_file_text(parse_graph_text(full)) == full


# ---------------------------------------------------------------------------
# 8. the HTTP surface answers exactly like the library and maps errors
# ---------------------------------------------------------------------------


def test_service_matches_library_and_maps_errors(mini_graph):
    with TestClient(create_app(mini_graph), raise_server_exceptions=False) as client:
        q = "how many papers are published by Chris Ray"
        assert client.get("/api/nlq", params={"q": q}).json()["payload"] == (
            answer_nlq(mini_graph, q).to_dict()
        )
        assert client.get("/api/paper/P1").json()["payload"] == (
            paper_profile(mini_graph, "P1").to_dict()
        )
        assert client.get("/api/author/a1").json()["payload"] == (
            author_profile(mini_graph, "a1").to_dict()
        )
        assert client.get("/api/venue/ACL").json()["payload"] == (
            venue_profile(mini_graph, "ACL").to_dict()
        )
        assert client.get("/api/dump").text == dump_text(mini_graph)

        gibberish = client.get("/api/nlq", params={"q": "zzz qqq"})
        assert (gibberish.status_code, gibberish.json()["error_code"]) == (422, "unsupported_query")
        missing = client.get("/api/paper/P99")
        assert (missing.status_code, missing.json()["error_code"]) == (404, "not_found")
        empty = client.get("/api/nlq")
        assert (empty.status_code, empty.json()["error_code"]) == (400, "bad_request")
