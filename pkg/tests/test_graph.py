"""Graph construction invariants and the metapath traversal oracle."""

from collections import Counter

import pytest

from scholargraph.errors import GraphBuildError, KindError, MetapathError, NotFoundError
from scholargraph.graph import (
    EdgeType,
    EntityKind,
    KnowledgeGraph,
    MetapathSpec,
    Node,
    build_graph,
    co_cited_with,
    metapath_traverse,
)
from scholargraph.ingest import PaperRecord
from tests.conftest import make_random_graph

A = EntityKind.AUTHOR
P = EntityKind.PAPER
V = EntityKind.VENUE
F = EntityKind.FIELD


# --- node/edge bookkeeping -------------------------------------------------


def test_mini_counts(mini_graph):
    g = mini_graph
    assert g.node_count() == 13
    assert g.edge_count() == 24
    assert g.node_count(P) == 6
    assert g.node_count(A) == 3
    assert g.node_count(V) == 2
    assert g.node_count(F) == 2
    assert g.edge_count(EdgeType.AUTHORED) == 8
    assert g.edge_count(EdgeType.PUBLISHED) == 6
    assert g.edge_count(EdgeType.CITES) == 6
    assert g.edge_count(EdgeType.IN_FIELD) == 4


def test_node_lookup_errors(mini_graph):
    with pytest.raises(NotFoundError):
        mini_graph.node("nope")
    with pytest.raises(KindError):
        mini_graph.require("P1", EntityKind.AUTHOR)


def test_neighbors_sorted_and_direction(mini_graph):
    g = mini_graph
    assert g.neighbors("a1", EdgeType.AUTHORED) == ("P1", "P2", "P4")
    assert g.neighbors("P1", EdgeType.CITES, "reverse") == ("P3", "P4", "P5")
    assert g.neighbors("P1", EdgeType.CITES, "forward") == ()
    assert g.neighbors("P5", EdgeType.CITES, "forward") == ("P1", "P2", "P3")
    # bipartite edges cross sides regardless of requested direction
    assert g.neighbors("a1", EdgeType.AUTHORED, "reverse") == ("P1", "P2", "P4")
    with pytest.raises(ValueError):
        g.neighbors("P1", EdgeType.CITES, "sideways")


def test_edges_are_deterministic(mini_graph):
    edges = mini_graph.edges()
    assert edges == sorted(edges, key=lambda e: (e[0].value, e[1], e[2]))
    assert (EdgeType.CITES, "P3", "P1") in edges


def _paper(pid, title="T", authors=("a1",), venue="V1", year=2001, cites=()):
    return PaperRecord(
        paper_id=pid,
        title=title,
        author_ids=list(authors),
        venue_id=venue,
        year=year,
        abstract=None,
        cited_paper_ids=list(cites),
        contexts=[],
        urls=[],
        affiliations=[],
        field_ids=[],
    )


def test_build_rejects_dangling_citation():
    with pytest.raises(GraphBuildError):
        build_graph([_paper("P1", cites=["P9"])])


def test_build_rejects_cross_kind_id_collision():
    with pytest.raises(GraphBuildError):
        build_graph([_paper("P1", authors=["V1"])])


def test_graph_rejects_self_citation():
    nodes = {"P1": Node("P1", P, "T", 2001)}
    with pytest.raises(GraphBuildError):
        KnowledgeGraph(nodes, [(EdgeType.CITES, "P1", "P1")], {}, {})


def test_graph_rejects_wrong_endpoint_kind():
    nodes = {
        "P1": Node("P1", P, "T", 2001),
        "a1": Node("a1", A, "Ann"),
    }
    with pytest.raises(GraphBuildError):
        KnowledgeGraph(nodes, [(EdgeType.PUBLISHED, "P1", "a1")], {}, {})


def test_duplicate_edges_collapse():
    nodes = {
        "P1": Node("P1", P, "T", 2001),
        "a1": Node("a1", A, "Ann"),
    }
    g = KnowledgeGraph(nodes, [(EdgeType.AUTHORED, "P1", "a1")] * 3, {}, {})
    assert g.edge_count() == 1


# --- metapath specs --------------------------------------------------------


def test_spec_parsing_and_validation():
    assert MetapathSpec.parse("V->A->P").kinds == (V, A, P)
    assert MetapathSpec.parse("v-a-p").kinds == (V, A, P)
    assert MetapathSpec.parse("P-P", cites_direction="reverse").cites_direction == "reverse"
    with pytest.raises(MetapathError):
        MetapathSpec.parse("A")  # too short
    with pytest.raises(MetapathError):
        MetapathSpec.parse("A->V")  # no edge, and not a composite step
    with pytest.raises(MetapathError):
        MetapathSpec.parse("V->F")
    with pytest.raises(MetapathError):
        MetapathSpec.parse("X->P")
    with pytest.raises(MetapathError):
        MetapathSpec((P, P), cites_direction="up")


def test_composite_steps_expand_through_paper():
    assert MetapathSpec.parse("V->A").expanded() == (V, P, A)
    assert MetapathSpec.parse("F->A->P").expanded() == (F, P, A, P)
    assert MetapathSpec.parse("A->P").expanded() == (A, P)


def test_traverse_requires_matching_start_kind(mini_graph):
    with pytest.raises(KindError):
        metapath_traverse(mini_graph, "P1", MetapathSpec.parse("V->A->P"))
    with pytest.raises(NotFoundError):
        metapath_traverse(mini_graph, "zz", MetapathSpec.parse("V->A->P"))


def test_traverse_mini_examples(mini_graph):
    g = mini_graph
    acl = metapath_traverse(g, "ACL", MetapathSpec.parse("V->A->P"))
    assert set(acl) == {"P1", "P2", "P3", "P4", "P5", "P6"}
    assert acl == Counter({"P2": 5, "P4": 4, "P1": 3, "P3": 2, "P6": 2, "P5": 1})
    parsing = metapath_traverse(g, "parsing", MetapathSpec.parse("F->A->P"))
    assert set(parsing) == {"P1", "P2", "P3", "P4", "P6"}
    citers = metapath_traverse(g, "P1", MetapathSpec.parse("P-P", cites_direction="reverse"))
    assert citers == Counter({"P3": 1, "P4": 1, "P5": 1})


# --- brute-force oracle ----------------------------------------------------

_ADJACENT = {A: [P], P: [A, P, V, F], V: [P, A], F: [P, A]}
_COMPOSITE = {(V, A), (F, A)}
_EDGE_FOR = {
    frozenset({A, P}): EdgeType.AUTHORED,
    frozenset({V, P}): EdgeType.PUBLISHED,
    frozenset({F, P}): EdgeType.IN_FIELD,
    frozenset({P}): EdgeType.CITES,
}


def _all_specs(max_len=4):
    """Every valid kind sequence of length 2..max_len, with both citation
    directions whenever the sequence contains a paper->paper step."""
    seqs = [[k] for k in (A, P, V, F)]
    out = []
    for _ in range(max_len - 1):
        seqs = [s + [nxt] for s in seqs for nxt in _ADJACENT[s[-1]]]
        for s in seqs:
            has_pp = any(l is P and r is P for l, r in zip(s, s[1:]))
            out.append(MetapathSpec(tuple(s), "forward"))
            if has_pp:
                out.append(MetapathSpec(tuple(s), "reverse"))
    return out


def _expand_kinds(kinds):
    out = [kinds[0]]
    for left, right in zip(kinds, kinds[1:]):
        if (left, right) in _COMPOSITE:
            out.append(P)
        out.append(right)
    return out


def _brute_force_walks(g, start, spec):
    kinds = _expand_kinds(spec.kinds)
    found = Counter()

    def rec(node, idx):
        if idx == len(kinds) - 1:
            found[node] += 1
            return
        left, right = kinds[idx], kinds[idx + 1]
        edge = _EDGE_FOR[frozenset({left, right})]
        direction = spec.cites_direction if edge is EdgeType.CITES else "forward"
        for nbr in g.neighbors(node, edge, direction):
            if g.node(nbr).kind is right:
                rec(nbr, idx + 1)

    rec(start, 0)
    return found


def test_traverse_matches_brute_force_on_random_graphs():
    import random

    specs = _all_specs()
    assert len(specs) > 50
    graphs = 0
    comparisons = 0
    for seed in range(100):
        g = make_random_graph(seed, max_papers=12)
        rng = random.Random(seed * 7 + 1)
        graphs += 1
        for spec in specs:
            candidates = g.nodes(spec.kinds[0])
            starts = candidates if len(candidates) <= 2 else rng.sample(candidates, 2)
            for start in starts:
                expected = _brute_force_walks(g, start.node_id, spec)
                got = metapath_traverse(g, start.node_id, spec)
                assert got == expected, (seed, spec, start.node_id)
                comparisons += 1
    assert graphs >= 100
    assert comparisons > 1000


def test_co_cited_mini(mini_graph):
    assert co_cited_with(mini_graph, "P1") == [("P2", 2), ("P3", 1)]
    assert co_cited_with(mini_graph, "P3") == [("P1", 1), ("P2", 1)]
    assert co_cited_with(mini_graph, "P6") == []
