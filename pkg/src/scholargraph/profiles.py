"""Entity profile pages and keyword search.

A profile gathers everything the graph knows about one entity — metadata,
derived metrics, and (for papers) the citation-context summary — into a
single serializable snapshot.  Search is deliberately simple: token
containment on display names, exact name matches first, then popularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from scholargraph.citetext import (
    SentimentLexicon,
    aggregate_sentiment,
    load_lexicon,
    summarize_incoming,
)
from scholargraph.errors import KindError
from scholargraph.graph import EdgeType, EntityKind, KnowledgeGraph, co_cited_with
from scholargraph.metrics import (
    YearSeries,
    citation_series,
    collaborators,
    h_index,
    impact_factor,
    publication_series,
    received_citation_series,
    topic_distribution,
    venue_summary,
)
from scholargraph.textutil import normalize_name, tokenize


def rank_papers(g: KnowledgeGraph, paper_ids: Iterable[str]) -> list[str]:
    """Order papers by citation count, then recency, then id."""
    return sorted(
        paper_ids,
        key=lambda pid: (-g.citation_count(pid), -(g.node(pid).year or 0), pid),
    )


@dataclass(frozen=True)
class PaperProfile:
    paper_id: str
    title: str
    year: Optional[int]
    venue: Optional[tuple[str, str]]
    authors: tuple[tuple[str, str], ...]
    fields: tuple[tuple[str, str], ...]
    abstract: str
    urls: tuple[str, ...]
    citation_count: int
    citations_by_year: YearSeries
    co_cited: tuple[tuple[str, int], ...]
    sentiment_mean: float
    sentiment_contexts: int
    summary: tuple[str, ...]
    summary_sources: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "id": self.paper_id,
            "kind": "paper",
            "title": self.title,
            "year": self.year,
            "venue": None if self.venue is None else {"id": self.venue[0], "display": self.venue[1]},
            "authors": [{"id": a, "display": n} for a, n in self.authors],
            "fields": [{"id": f, "display": n} for f, n in self.fields],
            "abstract": self.abstract,
            "urls": list(self.urls),
            "citation_count": self.citation_count,
            "citations_by_year": self.citations_by_year.to_pairs(),
            "co_cited": [{"id": p, "count": c} for p, c in self.co_cited],
            "sentiment": {"mean": self.sentiment_mean, "contexts": self.sentiment_contexts},
            "summary": [
                {"sentence": s, "source": src}
                for s, src in zip(self.summary, self.summary_sources)
            ],
        }


def paper_profile(
    g: KnowledgeGraph,
    paper_id: str,
    lexicon: Optional[SentimentLexicon] = None,
    stopwords: Optional[frozenset[str]] = None,
    summary_size: int = 5,
) -> PaperProfile:
    node = g.require(paper_id, EntityKind.PAPER)
    props = g.props.get(paper_id, {})
    venues = g.neighbors(paper_id, EdgeType.PUBLISHED)
    author_ids = props.get("author_order") or list(g.neighbors(paper_id, EdgeType.AUTHORED))
    lex = lexicon or load_lexicon()
    mean, n_contexts = aggregate_sentiment(g, paper_id, lex)
    summary = summarize_incoming(g, paper_id, k=summary_size, stopwords=stopwords)
    return PaperProfile(
        paper_id=paper_id,
        title=node.display,
        year=node.year,
        venue=None if not venues else (venues[0], g.node(venues[0]).display),
        authors=tuple((a, g.node(a).display) for a in author_ids),
        fields=tuple((f, g.node(f).display) for f in g.neighbors(paper_id, EdgeType.IN_FIELD)),
        abstract=props.get("abstract", ""),
        urls=tuple(props.get("urls", ())),
        citation_count=g.citation_count(paper_id),
        citations_by_year=citation_series(g, paper_id),
        co_cited=tuple(co_cited_with(g, paper_id)),
        sentiment_mean=mean,
        sentiment_contexts=n_contexts,
        summary=tuple(summary.sentences),
        summary_sources=tuple(summary.sources),
    )


@dataclass(frozen=True)
class AuthorProfile:
    author_id: str
    name: str
    paper_count: int
    citations_received: int
    h_index: int
    papers: tuple[str, ...]
    collaborators: tuple[tuple[str, str, int], ...]
    avg_joint_papers: float
    publications_by_year: YearSeries
    citations_by_year: YearSeries
    topics: dict[int, dict[str, int]]

    def to_dict(self) -> dict:
        return {
            "id": self.author_id,
            "kind": "author",
            "display": self.name,
            "paper_count": self.paper_count,
            "citations_received": self.citations_received,
            "h_index": self.h_index,
            "papers": list(self.papers),
            "collaborators": [
                {"id": a, "display": n, "joint_papers": c} for a, n, c in self.collaborators
            ],
            "avg_joint_papers": self.avg_joint_papers,
            "publications_by_year": self.publications_by_year.to_pairs(),
            "citations_by_year": self.citations_by_year.to_pairs(),
            "topics": {str(y): dict(fields) for y, fields in self.topics.items()},
        }


def author_profile(g: KnowledgeGraph, author_id: str) -> AuthorProfile:
    node = g.require(author_id, EntityKind.AUTHOR)
    papers = g.neighbors(author_id, EdgeType.AUTHORED)
    pairs, avg = collaborators(g, author_id)
    cseries = received_citation_series(g, author_id)
    return AuthorProfile(
        author_id=author_id,
        name=node.display,
        paper_count=len(papers),
        citations_received=cseries.cumulative,
        h_index=h_index(g, author_id),
        papers=tuple(rank_papers(g, papers)),
        collaborators=tuple((a, g.node(a).display, c) for a, c in pairs),
        avg_joint_papers=avg,
        publications_by_year=publication_series(g, author_id),
        citations_by_year=cseries,
        topics=topic_distribution(g, author_id),
    )


@dataclass(frozen=True)
class VenueProfile:
    venue_id: str
    name: str
    paper_count: int
    recently_held_year: Optional[int]
    publications_by_year: YearSeries
    impact_factors: tuple[tuple[int, float, bool], ...]
    collaborating_venues: tuple[tuple[str, str, int], ...]

    def to_dict(self) -> dict:
        return {
            "id": self.venue_id,
            "kind": "venue",
            "display": self.name,
            "paper_count": self.paper_count,
            "recently_held_year": self.recently_held_year,
            "publications_by_year": self.publications_by_year.to_pairs(),
            "impact_factors": [
                {"year": y, "value": v, "empty_window": flag}
                for y, v, flag in self.impact_factors
            ],
            "collaborating_venues": [
                {"id": v, "display": n, "shared_authors": c}
                for v, n, c in self.collaborating_venues
            ],
        }


def venue_profile(g: KnowledgeGraph, venue_id: str) -> VenueProfile:
    node = g.require(venue_id, EntityKind.VENUE)
    papers = g.neighbors(venue_id, EdgeType.PUBLISHED)
    recent, partners = venue_summary(g, venue_id)
    series = publication_series(g, venue_id)
    factors = []
    years = [year for year, _ in series.to_pairs()]
    if years:
        for year in range(min(years), max(years) + 1):
            f = impact_factor(g, venue_id, year)
            factors.append((year, f.value, f.empty_window))
    return VenueProfile(
        venue_id=venue_id,
        name=node.display,
        paper_count=len(papers),
        recently_held_year=recent,
        publications_by_year=series,
        impact_factors=tuple(factors),
        collaborating_venues=tuple((v, g.node(v).display, c) for v, c in partners),
    )


_SEARCH_KINDS = {
    "paper": EntityKind.PAPER,
    "author": EntityKind.AUTHOR,
    "venue": EntityKind.VENUE,
}
_KIND_ORDER = {EntityKind.PAPER: 0, EntityKind.AUTHOR: 1, EntityKind.VENUE: 2}


@dataclass(frozen=True)
class SearchHit:
    node_id: str
    kind: str
    display: str
    year: Optional[int]
    exact: bool
    popularity: int

    def to_dict(self) -> dict:
        return {
            "id": self.node_id,
            "kind": self.kind,
            "display": self.display,
            "year": self.year,
            "exact": self.exact,
            "popularity": self.popularity,
        }


def _popularity(g: KnowledgeGraph, node) -> int:
    if node.kind is EntityKind.PAPER:
        return g.citation_count(node.node_id)
    if node.kind is EntityKind.AUTHOR:
        return received_citation_series(g, node.node_id).cumulative
    return len(g.neighbors(node.node_id, EdgeType.PUBLISHED))


def keyword_search(g: KnowledgeGraph, query: str, kind: Optional[str] = None) -> list[SearchHit]:
    """Find papers, authors, and venues whose name contains every query token.

    Exact (normalized) name matches come first, then hits ordered by
    popularity — citations for papers and authors, paper count for venues —
    with recency and id as tie-breaks.  Fields are not searchable.
    """
    if kind is not None and kind not in _SEARCH_KINDS:
        raise KindError(f"unknown search kind {kind!r}")
    wanted = (_SEARCH_KINDS[kind],) if kind else tuple(_SEARCH_KINDS.values())
    qtokens = tokenize(query)
    if not qtokens:
        return []
    qnorm = normalize_name(query)
    hits = []
    for entity_kind in wanted:
        for node in g.nodes(entity_kind):
            dtokens = set(tokenize(node.display))
            if not all(tok in dtokens for tok in qtokens):
                continue
            hits.append(
                SearchHit(
                    node_id=node.node_id,
                    kind=node.kind.value,
                    display=node.display,
                    year=node.year,
                    exact=normalize_name(node.display) == qnorm,
                    popularity=_popularity(g, node),
                )
            )
    hits.sort(
        key=lambda h: (
            not h.exact,
            _KIND_ORDER[EntityKind(h.kind)],
            -h.popularity,
            -(h.year or 0),
            h.node_id,
        )
    )
    return hits
