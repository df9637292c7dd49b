"""Text serialization: the human-readable dump and the lossless graph file."""

import pytest

from scholargraph.errors import CorpusError
from scholargraph.graph import EdgeType, build_graph
from scholargraph.ingest import PaperRecord
from scholargraph.storage import (
    dump_graph,
    dump_text,
    graph_file_text,
    load_graph,
    parse_graph_text,
    save_graph,
)
from tests.conftest import make_random_graph


def test_dump_layout(mini_graph):
    lines = dump_text(mini_graph).splitlines()
    assert len(lines) == 39  # 1 + 13 nodes + 1 + 24 edges
    assert lines[0] == "#NODES"
    assert lines[1] == "author\ta1\tAnn Smith\t"
    assert lines[2] == "author\ta2\tBo Li\t"
    assert lines[4] == "field\tembeddings\tembeddings\t"
    assert lines[6] == "paper\tP1\tDependency parsing with transition systems\t2010"
    assert lines[14] == "#EDGES"
    assert lines[15] == "authored\tP1\ta1"
    assert lines[-1] == "published\tP6\tACL"


def test_dump_sections_sorted(mini_graph):
    lines = dump_text(mini_graph).splitlines()
    edge_at = lines.index("#EDGES")
    node_lines = lines[1:edge_at]
    assert node_lines == sorted(node_lines)
    edge_lines = lines[edge_at + 1 :]
    # edges group by type, then sort by endpoints
    order = {"authored": 0, "cites": 1, "in_field": 2, "published": 3}
    keys = [(order[ln.split("\t")[0]], ln) for ln in edge_lines]
    assert keys == sorted(keys)


def test_dump_sanitizes_display_text():
    record = PaperRecord(
        paper_id="P1",
        title="Tabs\tand\nnewlines",
        author_ids=["a1"],
        venue_id="V1",
        year=2005,
        abstract=None,
        cited_paper_ids=[],
        contexts=[],
        urls=[],
        affiliations=[],
        field_ids=[],
    )
    g = build_graph([record], author_names={"a1": "A  B"}, venue_names={"V1": "V"})
    dump = dump_text(g)
    assert "paper\tP1\tTabs and newlines\t2005" in dump.splitlines()


def test_graph_file_adds_props_and_contexts(mini_graph):
    lines = graph_file_text(mini_graph).splitlines()
    assert len(lines) == 53
    assert lines.count("#PROPS") == 1
    assert lines.count("#CONTEXTS") == 1
    ctx_at = lines.index("#CONTEXTS")
    assert lines[ctx_at + 1] == 'P3\tP1\t0\t"This excellent parser improves results ."'
    dump = dump_text(mini_graph)
    assert graph_file_text(mini_graph).startswith(dump)


def test_round_trip_mini_is_byte_identical(mini_graph):
    text = graph_file_text(mini_graph)
    rebuilt = parse_graph_text(text)
    assert graph_file_text(rebuilt) == text
    assert dump_text(rebuilt) == dump_text(mini_graph)


def test_round_trip_preserves_contexts_and_props(mini_graph):
    rebuilt = parse_graph_text(graph_file_text(mini_graph))
    assert rebuilt.contexts == mini_graph.contexts
    assert rebuilt.props == mini_graph.props
    assert rebuilt.neighbors("P1", EdgeType.CITES, "reverse") == ("P3", "P4", "P5")


def test_round_trip_random_graphs():
    for seed in range(40):
        g = make_random_graph(seed)
        text = graph_file_text(g)
        assert graph_file_text(parse_graph_text(text)) == text


def test_dump_round_trip_drops_only_props_and_contexts(mini_graph):
    rebuilt = parse_graph_text(dump_text(mini_graph))
    assert dump_text(rebuilt) == dump_text(mini_graph)
    assert rebuilt.contexts == {}
    assert rebuilt.props == {}


def test_save_and_load(tmp_path, mini_graph):
    path = save_graph(mini_graph, tmp_path / "mini.kg")
    assert load_graph(path).edge_count() == mini_graph.edge_count()
    out = dump_graph(mini_graph, tmp_path / "mini.txt")
    assert out.read_text(encoding="utf-8") == dump_text(mini_graph)


def test_empty_graph_has_headers_only():
    g = build_graph([], author_names={}, venue_names={})
    assert dump_text(g) == "#NODES\n#EDGES\n"
    assert parse_graph_text(dump_text(g)).node_count() == 0


def test_parse_rejects_malformed_text():
    with pytest.raises(CorpusError):
        parse_graph_text("#WHATEVER\n")
    with pytest.raises(CorpusError):
        parse_graph_text("#NODES\nghost\tg1\tGhost\t\n#EDGES\n")
    with pytest.raises(CorpusError):
        parse_graph_text("#NODES\npaper\tP1\tT\t2000\n#EDGES\nlikes\tP1\tP1\n")
    with pytest.raises(CorpusError):
        parse_graph_text("paper\tP1\tT\t2000\n")
    with pytest.raises(CorpusError):
        parse_graph_text("#NODES\npaper\tP1\tT\n#EDGES\n")


def test_load_missing_file_raises(tmp_path):
    with pytest.raises(CorpusError):
        load_graph(tmp_path / "nope.kg")
