"""Natural-language querying over the scholarly knowledge graph."""

from scholargraph.nlq.catalog import (
    CatalogEntry,
    QueryCatalog,
    QueryTemplate,
    expand_templates,
    load_catalog,
)
from scholargraph.nlq.engine import (
    Answer,
    ParsedQuery,
    QueryPlan,
    answer_nlq,
    classify_query,
    execute,
    plan_query,
)
from scholargraph.nlq.linking import LinkedEntity, link_entities

__all__ = [
    "Answer",
    "CatalogEntry",
    "LinkedEntity",
    "ParsedQuery",
    "QueryCatalog",
    "QueryPlan",
    "QueryTemplate",
    "answer_nlq",
    "classify_query",
    "execute",
    "expand_templates",
    "link_entities",
    "load_catalog",
    "plan_query",
]
