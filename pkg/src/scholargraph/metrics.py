"""Bibliometric statistics computed over the knowledge graph.

All functions are pure reads of the immutable graph.  Citation events are
dated by the citing paper's publication year throughout, which also fixes
the "citations received in year y" term of the 2-year impact factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import KindError
from .graph import EdgeType, EntityKind, KnowledgeGraph

UNLABELED_FIELD = "unlabeled"


@dataclass(frozen=True)
class YearSeries:
    """Counts per year, years strictly increasing."""

    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Counter) -> "YearSeries":
        return cls(tuple(sorted(counts.items())))

    @property
    def cumulative(self) -> int:
        return sum(count for _, count in self.entries)

    def to_pairs(self) -> list[list[int]]:
        return [[year, count] for year, count in self.entries]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class ImpactFactor:
    """2-year impact factor for one (venue, year); empty_window flags a
    zero-paper denominator, reported as value 0 instead of an error."""

    value: float
    papers_in_window: int
    citations_in_year: int

    @property
    def empty_window(self) -> bool:
        return self.papers_in_window == 0


def citation_series(g: KnowledgeGraph, paper_id: str) -> YearSeries:
    """Year-wise incoming citations: count of citing papers published in y."""
    counts = Counter(g.year_of(citer) for citer in g.citers_of(paper_id))
    return YearSeries.from_counts(counts)


def h_index(g: KnowledgeGraph, author_id: str, up_to_year: int | None = None) -> int:
    """Largest h with >= h papers of >= h citations each.

    With up_to_year set, only papers published by then count, and only
    citations from citers published by then.
    """
    g.require(author_id, EntityKind.AUTHOR)
    counts = []
    for paper_id in g.neighbors(author_id, EdgeType.AUTHORED):
        if up_to_year is not None and g.year_of(paper_id) > up_to_year:
            continue
        citers = g.citers_of(paper_id)
        if up_to_year is not None:
            citers = tuple(c for c in citers if g.year_of(c) <= up_to_year)
        counts.append(len(citers))
    counts.sort(reverse=True)
    h = 0
    for rank, count in enumerate(counts, start=1):
        if count >= rank:
            h = rank
        else:
            break
    return h


def impact_factor(g: KnowledgeGraph, venue_id: str, year: int) -> ImpactFactor:
    """Citations received in `year` by the venue's papers from the two
    preceding years, divided by the number of those papers."""
    g.require(venue_id, EntityKind.VENUE)
    window = [
        paper_id
        for paper_id in g.neighbors(venue_id, EdgeType.PUBLISHED)
        if g.year_of(paper_id) in (year - 1, year - 2)
    ]
    if not window:
        return ImpactFactor(0.0, 0, 0)
    citations = sum(
        1 for paper_id in window for citer in g.citers_of(paper_id) if g.year_of(citer) == year
    )
    return ImpactFactor(citations / len(window), len(window), citations)


def collaborators(g: KnowledgeGraph, author_id: str) -> tuple[list[tuple[str, int]], float]:
    """Co-authors with joint paper counts (count desc, id asc) and the mean
    joint count; an author with no collaborators gets mean 0."""
    g.require(author_id, EntityKind.AUTHOR)
    joint: Counter = Counter()
    for paper_id in g.neighbors(author_id, EdgeType.AUTHORED):
        for other in g.neighbors(paper_id, EdgeType.AUTHORED):
            if other != author_id:
                joint[other] += 1
    pairs = sorted(joint.items(), key=lambda kv: (-kv[1], kv[0]))
    mean = sum(joint.values()) / len(joint) if joint else 0.0
    return pairs, mean


def publication_series(g: KnowledgeGraph, entity_id: str) -> YearSeries:
    """Papers per year for an author or a venue."""
    node = g.node(entity_id)
    if node.kind not in (EntityKind.AUTHOR, EntityKind.VENUE):
        raise KindError(f"{entity_id!r} is a {node.kind.value}; publication series needs an author or venue")
    counts = Counter(g.year_of(paper_id) for paper_id in g.papers_of(entity_id))
    return YearSeries.from_counts(counts)


def received_citation_series(g: KnowledgeGraph, entity_id: str) -> YearSeries:
    """Year-wise citations received by all papers of an author or venue."""
    node = g.node(entity_id)
    if node.kind not in (EntityKind.AUTHOR, EntityKind.VENUE):
        raise KindError(f"{entity_id!r} is a {node.kind.value}; citation series needs an author or venue")
    counts: Counter = Counter()
    for paper_id in g.papers_of(entity_id):
        for citer in g.citers_of(paper_id):
            counts[g.year_of(citer)] += 1
    return YearSeries.from_counts(counts)


def topic_distribution(g: KnowledgeGraph, author_id: str) -> dict[int, dict[str, int]]:
    """Per-year histogram of field labels over an author's papers.

    A paper with several fields contributes to each; papers with none go to
    the "unlabeled" bucket.
    """
    g.require(author_id, EntityKind.AUTHOR)
    out: dict[int, dict[str, int]] = {}
    for paper_id in g.neighbors(author_id, EdgeType.AUTHORED):
        year = g.year_of(paper_id)
        fields = g.neighbors(paper_id, EdgeType.IN_FIELD) or (UNLABELED_FIELD,)
        bucket = out.setdefault(year, {})
        for field_id in fields:
            bucket[field_id] = bucket.get(field_id, 0) + 1
    return {year: dict(sorted(out[year].items())) for year in sorted(out)}


def venue_summary(g: KnowledgeGraph, venue_id: str) -> tuple[int | None, list[tuple[str, int]]]:
    """(recently held year, collaborating venues ranked by shared authors)."""
    g.require(venue_id, EntityKind.VENUE)
    papers = g.neighbors(venue_id, EdgeType.PUBLISHED)
    recent = max((g.year_of(p) for p in papers), default=None)

    own_authors = {a for p in papers for a in g.neighbors(p, EdgeType.AUTHORED)}
    shared: dict[str, set[str]] = {}
    for author_id in own_authors:
        for paper_id in g.neighbors(author_id, EdgeType.AUTHORED):
            other_venue = g.neighbors(paper_id, EdgeType.PUBLISHED)
            for venue in other_venue:
                if venue != venue_id:
                    shared.setdefault(venue, set()).add(author_id)
    ranked = sorted(((v, len(authors)) for v, authors in shared.items()), key=lambda kv: (-kv[1], kv[0]))
    return recent, ranked
