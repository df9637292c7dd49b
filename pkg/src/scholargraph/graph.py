"""The heterogeneous knowledge graph and its metapath traversal engine.

Four node kinds (author, paper, venue, field), four edge types.  The graph
is immutable after construction; every read path returns id-sorted output so
repeated builds and queries are reproducible byte for byte.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import GraphBuildError, KindError, MetapathError, NotFoundError
from .ingest import PaperRecord, VenueTable, ingest_corpus, load_field_vocabulary


class EntityKind(str, Enum):
    AUTHOR = "author"
    PAPER = "paper"
    VENUE = "venue"
    FIELD = "field"


class EdgeType(str, Enum):
    AUTHORED = "authored"  # paper -> author
    PUBLISHED = "published"  # paper -> venue
    IN_FIELD = "in_field"  # paper -> field
    CITES = "cites"  # citing paper -> cited paper

    @property
    def endpoint_kinds(self) -> tuple[EntityKind, EntityKind]:
        return _EDGE_ENDPOINTS[self]


_EDGE_ENDPOINTS = {
    EdgeType.AUTHORED: (EntityKind.PAPER, EntityKind.AUTHOR),
    EdgeType.PUBLISHED: (EntityKind.PAPER, EntityKind.VENUE),
    EdgeType.IN_FIELD: (EntityKind.PAPER, EntityKind.FIELD),
    EdgeType.CITES: (EntityKind.PAPER, EntityKind.PAPER),
}

# Which edge type connects a pair of node kinds (order-insensitive for the
# bipartite types).
_PAIR_EDGE = {
    frozenset({EntityKind.AUTHOR, EntityKind.PAPER}): EdgeType.AUTHORED,
    frozenset({EntityKind.VENUE, EntityKind.PAPER}): EdgeType.PUBLISHED,
    frozenset({EntityKind.FIELD, EntityKind.PAPER}): EdgeType.IN_FIELD,
    frozenset({EntityKind.PAPER}): EdgeType.CITES,
}


@dataclass(frozen=True)
class Node:
    node_id: str
    kind: EntityKind
    display: str
    year: int | None = None


@dataclass(frozen=True)
class MetapathSpec:
    """An ordered sequence of entity kinds encoding a semantic relation.

    Adjacent kinds must share an edge (author/venue/field with paper, or
    paper with paper via cites).  Venue->author and field->author steps are
    accepted as shorthand for the hop through the shared paper and expand to
    V->P->A / F->P->A; multiplicity then counts the connecting papers.
    Other non-paper pairs (author->venue etc.) are invalid.

    cites_direction selects how paper->paper steps walk the citation edges:
    "forward" follows citing->cited, "reverse" follows cited->citing.
    """

    kinds: tuple[EntityKind, ...]
    cites_direction: str = "forward"

    def __post_init__(self):
        if len(self.kinds) < 2:
            raise MetapathError("a metapath needs at least two kinds")
        if self.cites_direction not in ("forward", "reverse"):
            raise MetapathError(f"unknown cites direction {self.cites_direction!r}")
        for left, right in zip(self.kinds, self.kinds[1:]):
            if frozenset({left, right}) in _PAIR_EDGE:
                continue
            if (left, right) in _COMPOSITE_STEPS:
                continue
            raise MetapathError(f"no edge connects {left.value} and {right.value}")

    @classmethod
    def parse(cls, text: str, cites_direction: str = "forward") -> "MetapathSpec":
        """Parse compact notation such as "V->A->P" or "A-P"."""
        letters = {"A": EntityKind.AUTHOR, "P": EntityKind.PAPER, "V": EntityKind.VENUE, "F": EntityKind.FIELD}
        parts = [p.strip() for p in text.replace("->", "-").split("-") if p.strip()]
        try:
            kinds = tuple(letters[p.upper()] for p in parts)
        except KeyError as exc:
            raise MetapathError(f"unknown entity letter in {text!r}") from exc
        return cls(kinds, cites_direction)

    def expanded(self) -> tuple[EntityKind, ...]:
        """Kind sequence with composite steps routed through the shared paper."""
        out = [self.kinds[0]]
        for left, right in zip(self.kinds, self.kinds[1:]):
            if (left, right) in _COMPOSITE_STEPS:
                out.append(EntityKind.PAPER)
            out.append(right)
        return tuple(out)


_COMPOSITE_STEPS = {
    (EntityKind.VENUE, EntityKind.AUTHOR),
    (EntityKind.FIELD, EntityKind.AUTHOR),
}


class KnowledgeGraph:
    """Immutable typed multigraph over authors, papers, venues and fields."""

    def __init__(
        self,
        nodes: Mapping[str, Node],
        edges: Iterable[tuple[EdgeType, str, str]],
        contexts: Mapping[tuple[str, str], tuple[str, ...]] | None = None,
        props: Mapping[str, dict] | None = None,
    ):
        self._nodes: dict[str, Node] = dict(nodes)
        self._fwd: dict[EdgeType, dict[str, tuple[str, ...]]] = {e: {} for e in EdgeType}
        self._rev: dict[EdgeType, dict[str, tuple[str, ...]]] = {e: {} for e in EdgeType}
        self._edges: list[tuple[EdgeType, str, str]] = []
        self.contexts: dict[tuple[str, str], tuple[str, ...]] = dict(contexts or {})
        self.props: dict[str, dict] = {k: dict(v) for k, v in (props or {}).items()}

        fwd_sets: dict[EdgeType, dict[str, list[str]]] = {e: {} for e in EdgeType}
        rev_sets: dict[EdgeType, dict[str, list[str]]] = {e: {} for e in EdgeType}
        seen: set[tuple[EdgeType, str, str]] = set()
        for edge_type, src, dst in edges:
            for endpoint, expected in ((src, edge_type.endpoint_kinds[0]), (dst, edge_type.endpoint_kinds[1])):
                node = self._nodes.get(endpoint)
                if node is None:
                    raise GraphBuildError(f"edge {edge_type.value} references unknown node {endpoint!r}")
                if node.kind is not expected:
                    raise GraphBuildError(
                        f"edge {edge_type.value} endpoint {endpoint!r} is {node.kind.value}, expected {expected.value}"
                    )
            if edge_type is EdgeType.CITES and src == dst:
                raise GraphBuildError(f"self-citation on {src!r}")
            key = (edge_type, src, dst)
            if key in seen:
                continue
            seen.add(key)
            self._edges.append(key)
            fwd_sets[edge_type].setdefault(src, []).append(dst)
            rev_sets[edge_type].setdefault(dst, []).append(src)

        for edge_type in EdgeType:
            self._fwd[edge_type] = {k: tuple(sorted(v)) for k, v in fwd_sets[edge_type].items()}
            self._rev[edge_type] = {k: tuple(sorted(v)) for k, v in rev_sets[edge_type].items()}
        self._edges.sort(key=lambda e: (e[0].value, e[1], e[2]))

    # -- basic accessors ---------------------------------------------------

    def __contains__(self, node_id: str) -> bool:
        return node_id in self._nodes

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise NotFoundError(f"unknown node {node_id!r}") from None

    def require(self, node_id: str, kind: EntityKind) -> Node:
        node = self.node(node_id)
        if node.kind is not kind:
            raise KindError(f"{node_id!r} is a {node.kind.value}, expected {kind.value}")
        return node

    def nodes(self, kind: EntityKind | None = None) -> list[Node]:
        out = [n for n in self._nodes.values() if kind is None or n.kind is kind]
        out.sort(key=lambda n: n.node_id)
        return out

    def edges(self) -> list[tuple[EdgeType, str, str]]:
        return list(self._edges)

    def node_count(self, kind: EntityKind | None = None) -> int:
        if kind is None:
            return len(self._nodes)
        return sum(1 for n in self._nodes.values() if n.kind is kind)

    def edge_count(self, edge_type: EdgeType | None = None) -> int:
        if edge_type is None:
            return len(self._edges)
        return sum(1 for e in self._edges if e[0] is edge_type)

    def neighbors(self, node_id: str, edge_type: EdgeType, direction: str = "forward") -> tuple[str, ...]:
        """Adjacent ids along one edge type, sorted.

        For the bipartite edge types the step always crosses to the other
        side regardless of direction; for cites, "forward" yields the papers
        this one cites and "reverse" the papers citing it.
        """
        node = self.node(node_id)
        if direction not in ("forward", "reverse"):
            raise ValueError(f"direction must be forward or reverse, got {direction!r}")
        if edge_type is EdgeType.CITES:
            table = self._fwd if direction == "forward" else self._rev
            return table[edge_type].get(node_id, ())
        src_kind = edge_type.endpoint_kinds[0]
        table = self._fwd if node.kind is src_kind else self._rev
        return table[edge_type].get(node_id, ())

    # -- derived views used by metrics/profiles ----------------------------

    def papers_of(self, entity_id: str) -> tuple[str, ...]:
        """Papers attached to an author, venue or field (or the paper itself)."""
        node = self.node(entity_id)
        if node.kind is EntityKind.AUTHOR:
            return self.neighbors(entity_id, EdgeType.AUTHORED)
        if node.kind is EntityKind.VENUE:
            return self.neighbors(entity_id, EdgeType.PUBLISHED)
        if node.kind is EntityKind.FIELD:
            return self.neighbors(entity_id, EdgeType.IN_FIELD)
        return (entity_id,)

    def citers_of(self, paper_id: str) -> tuple[str, ...]:
        self.require(paper_id, EntityKind.PAPER)
        return self.neighbors(paper_id, EdgeType.CITES, "reverse")

    def citation_count(self, paper_id: str) -> int:
        return len(self.citers_of(paper_id))

    def incoming_contexts(self, paper_id: str) -> list[tuple[str, str]]:
        """(citing paper id, sentence) pairs for a paper, in stable order."""
        self.require(paper_id, EntityKind.PAPER)
        out: list[tuple[str, str]] = []
        for citer in self.citers_of(paper_id):
            for sentence in self.contexts.get((citer, paper_id), ()):
                out.append((citer, sentence))
        return out

    def year_of(self, paper_id: str) -> int:
        node = self.require(paper_id, EntityKind.PAPER)
        if node.year is None:
            raise GraphBuildError(f"paper {paper_id!r} has no year")
        return node.year


def build_graph(
    records: list[PaperRecord],
    author_names: Mapping[str, str] | None = None,
    venue_names: Mapping[str, str] | None = None,
    field_names: Mapping[str, str] | None = None,
) -> KnowledgeGraph:
    """Construct the graph from cleaned records.

    Node and edge counts are exact functions of the input; a cited id with no
    record is fatal because ingestion guarantees reference closure.
    """
    author_names = author_names or {}
    venue_names = venue_names or {}
    field_names = field_names or {}

    nodes: dict[str, Node] = {}
    paper_ids = {r.paper_id for r in records}

    def add_node(node: Node):
        existing = nodes.get(node.node_id)
        if existing is not None and existing.kind is not node.kind:
            raise GraphBuildError(
                f"id {node.node_id!r} used as both {existing.kind.value} and {node.kind.value}"
            )
        if existing is None:
            nodes[node.node_id] = node

    edges: list[tuple[EdgeType, str, str]] = []
    contexts: dict[tuple[str, str], tuple[str, ...]] = {}
    props: dict[str, dict] = {}

    for record in records:
        add_node(Node(record.paper_id, EntityKind.PAPER, record.title, record.year))
        extra = {
            "abstract": record.abstract,
            "urls": list(record.urls),
            "affiliations": list(record.affiliations),
            "author_order": list(record.author_ids),
        }
        props[record.paper_id] = extra
        for author_id in record.author_ids:
            add_node(Node(author_id, EntityKind.AUTHOR, author_names.get(author_id, author_id)))
            edges.append((EdgeType.AUTHORED, record.paper_id, author_id))
        add_node(Node(record.venue_id, EntityKind.VENUE, venue_names.get(record.venue_id, record.venue_id)))
        edges.append((EdgeType.PUBLISHED, record.paper_id, record.venue_id))
        for field_id in record.field_ids:
            add_node(Node(field_id, EntityKind.FIELD, field_names.get(field_id, field_id)))
            edges.append((EdgeType.IN_FIELD, record.paper_id, field_id))
        for cited in record.cited_paper_ids:
            if cited not in paper_ids:
                raise GraphBuildError(f"{record.paper_id} cites {cited!r}, which has no record")
            edges.append((EdgeType.CITES, record.paper_id, cited))

    for record in records:
        bucket: dict[str, list[str]] = {}
        for cited, sentence in record.contexts:
            bucket.setdefault(cited, []).append(sentence)
        for cited, sentences in bucket.items():
            contexts[(record.paper_id, cited)] = tuple(sentences)

    return KnowledgeGraph(nodes, edges, contexts, props)


def build_from_files(
    corpus_path,
    venues_path=None,
    fields_path=None,
) -> tuple["KnowledgeGraph", int]:
    """Ingest a corpus file and build the graph in one step.

    Returns the graph and the number of skipped corpus records.
    """
    table = VenueTable.load(venues_path) if venues_path else None
    vocab = load_field_vocabulary(fields_path) if fields_path else None
    result = ingest_corpus(corpus_path, venue_table=table, field_vocabulary=vocab)
    g = build_graph(
        result.records,
        author_names=result.authors.canonical_names,
        venue_names=result.venues.names,
        field_names={fid: fid for fid in result.fields},
    )
    return g, result.skipped


def metapath_traverse(g: KnowledgeGraph, start: str, spec: MetapathSpec) -> Counter:
    """Walk a metapath from a start node.

    Returns a multiset of terminal ids where each id's multiplicity is the
    number of distinct paths reaching it, i.e. exactly what brute-force path
    enumeration over the expanded kind sequence would produce.
    """
    kinds = spec.expanded()
    start_node = g.node(start)
    if start_node.kind is not kinds[0]:
        raise KindError(
            f"start node {start!r} is a {start_node.kind.value}, metapath begins with {kinds[0].value}"
        )
    frontier: Counter = Counter({start: 1})
    for left, right in zip(kinds, kinds[1:]):
        edge_type = _PAIR_EDGE[frozenset({left, right})]
        direction = spec.cites_direction if edge_type is EdgeType.CITES else "forward"
        step: Counter = Counter()
        for node_id, count in frontier.items():
            for nbr in g.neighbors(node_id, edge_type, direction):
                if g.node(nbr).kind is right:
                    step[nbr] += count
        frontier = step
        if not frontier:
            break
    return frontier


def co_cited_with(g: KnowledgeGraph, paper_id: str) -> list[tuple[str, int]]:
    """Papers cited together with this one, with co-citation counts.

    Every citer of the query paper contributes one count per other paper in
    its reference list; sorted by count descending, then id.
    """
    g.require(paper_id, EntityKind.PAPER)
    counts: Counter = Counter()
    for citer in g.citers_of(paper_id):
        for other in g.neighbors(citer, EdgeType.CITES, "forward"):
            if other != paper_id:
                counts[other] += 1
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
