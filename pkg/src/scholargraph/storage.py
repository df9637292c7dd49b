"""Plain-text serialization of the knowledge graph.

Two layers share one format.  The public dump is the `#NODES`/`#EDGES`
sections only: node lines `kind<TAB>id<TAB>display<TAB>year_or_empty`, edge
lines `edge_type<TAB>src<TAB>dst`, each section sorted lexicographically,
UTF-8 with LF endings.  The graph file the CLI persists appends `#PROPS`
(canonical JSON per paper) and `#CONTEXTS` (citation sentences) so that
serve/query can restore everything without a database.  Both forms are
byte-deterministic: dump -> load -> dump is the identity.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import CorpusError
from .graph import EdgeType, EntityKind, KnowledgeGraph, Node

_FIELD_SEP = "\t"


def _sanitize(text: str) -> str:
    return text.replace("\t", " ").replace("\n", " ").replace("\r", " ")


def _node_lines(g: KnowledgeGraph) -> list[str]:
    lines = []
    for node in g.nodes():
        year = "" if node.year is None else str(node.year)
        lines.append(_FIELD_SEP.join((node.kind.value, node.node_id, _sanitize(node.display), year)))
    lines.sort()
    return lines


def _edge_lines(g: KnowledgeGraph) -> list[str]:
    lines = [_FIELD_SEP.join((edge_type.value, src, dst)) for edge_type, src, dst in g.edges()]
    lines.sort()
    return lines


def dump_text(g: KnowledgeGraph) -> str:
    """The public plain-text dump (nodes and edges only)."""
    lines = ["#NODES"]
    lines.extend(_node_lines(g))
    lines.append("#EDGES")
    lines.extend(_edge_lines(g))
    return "\n".join(lines) + "\n"


def dump_graph(g: KnowledgeGraph, destination: str | Path) -> Path:
    """Write the public dump to a file."""
    path = Path(destination)
    try:
        path.write_text(dump_text(g), encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CorpusError(f"cannot write dump {path}: {exc}") from exc
    return path


def _json_line(value) -> str:
    return json.dumps(value, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def graph_file_text(g: KnowledgeGraph) -> str:
    """Full self-contained serialization (dump sections plus properties)."""
    lines = dump_text(g).splitlines()
    lines.append("#PROPS")
    for node_id in sorted(g.props):
        lines.append(_FIELD_SEP.join((node_id, _json_line(g.props[node_id]))))
    lines.append("#CONTEXTS")
    ctx_lines = []
    for (src, dst), sentences in g.contexts.items():
        for idx, sentence in enumerate(sentences):
            ctx_lines.append(_FIELD_SEP.join((src, dst, str(idx), _json_line(sentence))))
    ctx_lines.sort(key=lambda line: (line.split(_FIELD_SEP)[0], line.split(_FIELD_SEP)[1], int(line.split(_FIELD_SEP)[2])))
    lines.extend(ctx_lines)
    return "\n".join(lines) + "\n"


def save_graph(g: KnowledgeGraph, destination: str | Path) -> Path:
    path = Path(destination)
    try:
        path.write_text(graph_file_text(g), encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CorpusError(f"cannot write graph file {path}: {exc}") from exc
    return path


def parse_graph_text(text: str) -> KnowledgeGraph:
    """Rebuild a graph from dump or graph-file text (PROPS/CONTEXTS optional)."""
    nodes: dict[str, Node] = {}
    edges: list[tuple[EdgeType, str, str]] = []
    contexts: dict[tuple[str, str], list[str]] = {}
    props: dict[str, dict] = {}

    section = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        if line.startswith("#"):
            section = line
            if section not in ("#NODES", "#EDGES", "#PROPS", "#CONTEXTS"):
                raise CorpusError(f"line {lineno}: unknown section {line!r}")
            continue
        if section == "#NODES":
            parts = line.split(_FIELD_SEP)
            if len(parts) != 4:
                raise CorpusError(f"line {lineno}: node line needs 4 fields")
            kind_raw, node_id, display, year_raw = parts
            try:
                kind = EntityKind(kind_raw)
            except ValueError:
                raise CorpusError(f"line {lineno}: unknown node kind {kind_raw!r}") from None
            year = int(year_raw) if year_raw else None
            nodes[node_id] = Node(node_id, kind, display, year)
        elif section == "#EDGES":
            parts = line.split(_FIELD_SEP)
            if len(parts) != 3:
                raise CorpusError(f"line {lineno}: edge line needs 3 fields")
            type_raw, src, dst = parts
            try:
                edge_type = EdgeType(type_raw)
            except ValueError:
                raise CorpusError(f"line {lineno}: unknown edge type {type_raw!r}") from None
            edges.append((edge_type, src, dst))
        elif section == "#PROPS":
            node_id, _, payload = line.partition(_FIELD_SEP)
            try:
                props[node_id] = json.loads(payload)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {lineno}: bad props JSON: {exc}") from exc
        elif section == "#CONTEXTS":
            parts = line.split(_FIELD_SEP, 3)
            if len(parts) != 4:
                raise CorpusError(f"line {lineno}: context line needs 4 fields")
            src, dst, _, payload = parts
            try:
                sentence = json.loads(payload)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {lineno}: bad context JSON: {exc}") from exc
            contexts.setdefault((src, dst), []).append(sentence)
        else:
            raise CorpusError(f"line {lineno}: content before any section header")

    frozen = {key: tuple(values) for key, values in contexts.items()}
    return KnowledgeGraph(nodes, edges, frozen, props)


def load_graph(path: str | Path) -> KnowledgeGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read graph file {path}: {exc}") from exc
    return parse_graph_text(text)
