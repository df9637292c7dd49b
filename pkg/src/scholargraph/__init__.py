"""Scholarly knowledge-graph engine.

Builds a heterogeneous author/paper/venue/field graph from publication
records and answers natural-language, metric, and profile queries over it,
with a CLI and a REST service on top.
"""

from scholargraph.citetext import (
    CitationSummary,
    SentimentLexicon,
    aggregate_sentiment,
    load_lexicon,
    load_stopwords,
    score_context,
    summarize_incoming,
)
from scholargraph.errors import (
    ConfigError,
    CorpusError,
    EntityNotFoundError,
    GraphBuildError,
    KindError,
    MetapathError,
    NotFoundError,
    ScholarGraphError,
    UnsupportedQueryError,
)
from scholargraph.graph import (
    EdgeType,
    EntityKind,
    KnowledgeGraph,
    MetapathSpec,
    Node,
    build_from_files,
    build_graph,
    co_cited_with,
    metapath_traverse,
)
from scholargraph.ingest import (
    IngestResult,
    NameIndex,
    PaperRecord,
    RawRecord,
    VenueTable,
    ingest_corpus,
    load_corpus,
    load_field_vocabulary,
)
from scholargraph.metrics import (
    ImpactFactor,
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
from scholargraph.nlq import (
    Answer,
    ParsedQuery,
    QueryCatalog,
    answer_nlq,
    classify_query,
    expand_templates,
    link_entities,
    load_catalog,
    plan_query,
)
from scholargraph.profiles import (
    AuthorProfile,
    PaperProfile,
    SearchHit,
    VenueProfile,
    author_profile,
    keyword_search,
    paper_profile,
    rank_papers,
    venue_profile,
)
from scholargraph.storage import dump_text, load_graph, save_graph

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "AuthorProfile",
    "CitationSummary",
    "ConfigError",
    "CorpusError",
    "EdgeType",
    "EntityKind",
    "EntityNotFoundError",
    "GraphBuildError",
    "ImpactFactor",
    "IngestResult",
    "KindError",
    "KnowledgeGraph",
    "MetapathError",
    "MetapathSpec",
    "NameIndex",
    "Node",
    "NotFoundError",
    "PaperProfile",
    "PaperRecord",
    "ParsedQuery",
    "QueryCatalog",
    "RawRecord",
    "ScholarGraphError",
    "SearchHit",
    "SentimentLexicon",
    "UnsupportedQueryError",
    "VenueProfile",
    "VenueTable",
    "YearSeries",
    "aggregate_sentiment",
    "answer_nlq",
    "author_profile",
    "build_from_files",
    "build_graph",
    "citation_series",
    "classify_query",
    "co_cited_with",
    "collaborators",
    "dump_text",
    "expand_templates",
    "h_index",
    "impact_factor",
    "ingest_corpus",
    "keyword_search",
    "link_entities",
    "load_catalog",
    "load_corpus",
    "load_field_vocabulary",
    "load_graph",
    "load_lexicon",
    "load_stopwords",
    "metapath_traverse",
    "paper_profile",
    "plan_query",
    "publication_series",
    "rank_papers",
    "received_citation_series",
    "save_graph",
    "score_context",
    "summarize_incoming",
    "topic_distribution",
    "venue_profile",
    "venue_summary",
]
