"""Classify, link, plan, and execute natural-language queries end to end.

``answer_nlq`` is the high-level entry point; the individual stages are
exposed so callers can inspect intermediate results (the parsed template,
the entity bindings, the compiled plan) or substitute their own.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from scholargraph.citetext import SentimentLexicon, aggregate_sentiment, load_lexicon
from scholargraph.errors import UnsupportedQueryError
from scholargraph.graph import KnowledgeGraph, MetapathSpec, metapath_traverse
from scholargraph.metrics import YearSeries
from scholargraph.nlq.catalog import (
    CLASS_BINARY,
    CLASS_LIST,
    CLASS_STATISTICAL,
    SUBTYPE_COMPARISON,
    SUBTYPE_TEMPORAL,
    QueryCatalog,
    QueryTemplate,
    load_catalog,
    subtype_of,
)
from scholargraph.nlq.linking import LinkedEntity, link_entities
from scholargraph.profiles import rank_papers
from scholargraph.textutil import collapse_ws, tokenize

_LEADER_CLASS = {
    "is": CLASS_BINARY,
    "are": CLASS_BINARY,
    "has": CLASS_BINARY,
    "have": CLASS_BINARY,
    "does": CLASS_BINARY,
    "do": CLASS_BINARY,
    "list": CLASS_LIST,
    "show": CLASS_LIST,
    "give": CLASS_LIST,
    "display": CLASS_LIST,
}

_default_catalog: Optional[QueryCatalog] = None
_default_lexicon: Optional[SentimentLexicon] = None


def default_catalog() -> QueryCatalog:
    global _default_catalog
    if _default_catalog is None:
        _default_catalog = load_catalog()
    return _default_catalog


def _lexicon(lexicon: Optional[SentimentLexicon]) -> SentimentLexicon:
    global _default_lexicon
    if lexicon is not None:
        return lexicon
    if _default_lexicon is None:
        _default_lexicon = load_lexicon()
    return _default_lexicon


@dataclass(frozen=True)
class ParsedQuery:
    text: str
    template: QueryTemplate
    qclass: str
    subtype: Optional[str]
    spans: dict[str, str]
    surface: str


def _leading_class(tokens: list[str]) -> Optional[str]:
    if not tokens:
        return None
    if tokens[0] == "how" and len(tokens) > 1 and tokens[1] == "many":
        return CLASS_STATISTICAL
    return _LEADER_CLASS.get(tokens[0])


def _resolve_subtype(text: str, template: QueryTemplate) -> str:
    """Subtype from wording, reconciled with what the plan can express."""
    implied = subtype_of(text)
    has_compare_plan = "compare" in template.plan
    if (implied == SUBTYPE_COMPARISON) != has_compare_plan:
        return template.subtype or implied
    return implied


def classify_query(text: str, catalog: Optional[QueryCatalog] = None) -> ParsedQuery:
    """Match *text* against the catalog and capture its slot spans.

    The leading interrogative narrows the candidate class first; within a
    class, surface forms with more literal tokens are tried before looser
    ones, and a cheap token-containment check skips patterns that cannot
    match.  Raises :class:`UnsupportedQueryError` when nothing matches.
    """
    catalog = catalog or default_catalog()
    q = collapse_ws(text)
    if not q:
        raise UnsupportedQueryError("empty query")
    tokens = tokenize(q)
    qtokens = set(tokens)
    leader = _leading_class(tokens)
    compiled = catalog.compiled()
    pools = []
    if leader is not None:
        pools.append([c for c in compiled if c.entry.template.qclass == leader])
    pools.append(compiled)
    for pool in pools:
        for cand in pool:
            if not cand.literal_tokens <= qtokens:
                continue
            m = cand.pattern.match(q)
            if m is None:
                continue
            t = cand.entry.template
            spans = {slot: m.group(slot).strip() for slot in t.slots}
            subtype = _resolve_subtype(q, t) if t.qclass == CLASS_STATISTICAL else None
            return ParsedQuery(
                text=q,
                template=t,
                qclass=t.qclass,
                subtype=subtype,
                spans=spans,
                surface=cand.entry.surface,
            )
    raise UnsupportedQueryError(f"no query template matches: {q!r}")


@dataclass(frozen=True)
class PlanStep:
    slot: str
    entity_id: str
    display: str
    path: MetapathSpec


@dataclass(frozen=True)
class QueryPlan:
    mode: str  # "intersect" or "compare"
    steps: tuple[PlanStep, ...]
    positive_only: bool = False


def plan_query(parsed: ParsedQuery, links: dict[str, LinkedEntity]) -> QueryPlan:
    """Compile the matched template's plan against the linked entities."""
    spec = parsed.template.plan
    mode = "compare" if "compare" in spec else "intersect"
    steps = []
    for obj in spec.get(mode, ()):
        link = links[obj["slot"]]
        steps.append(
            PlanStep(
                slot=obj["slot"],
                entity_id=link.node_id,
                display=link.display,
                path=MetapathSpec.parse(obj["path"]),
            )
        )
    return QueryPlan(
        mode=mode,
        steps=tuple(steps),
        positive_only=spec.get("filter") == "positive_sentiment",
    )


@dataclass(frozen=True)
class PaperItem:
    paper_id: str
    title: str
    year: Optional[int]
    citations: int

    def to_dict(self) -> dict:
        return {
            "id": self.paper_id,
            "title": self.title,
            "year": self.year,
            "citations": self.citations,
        }


@dataclass(frozen=True)
class Answer:
    qclass: str
    subtype: Optional[str]
    template_id: str
    bindings: tuple[LinkedEntity, ...]
    shape: str  # yesno | count | series | comparison | papers
    yes: Optional[bool] = None
    count: Optional[int] = None
    series: Optional[YearSeries] = None
    per_entity: tuple[tuple[str, str, int], ...] = ()
    papers: tuple[PaperItem, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {
            "class": self.qclass,
            "template_id": self.template_id,
            "bindings": [
                {"slot": b.slot, "id": b.node_id, "display": b.display} for b in self.bindings
            ],
            "shape": self.shape,
        }
        if self.subtype is not None:
            out["subtype"] = self.subtype
        if self.shape == "yesno":
            out["result"] = {"answer": self.yes, "count": self.count}
        elif self.shape == "count":
            out["result"] = {"count": self.count}
        elif self.shape == "series":
            out["result"] = {"points": self.series.to_pairs() if self.series else []}
        elif self.shape == "comparison":
            out["result"] = {
                "entities": [
                    {"id": eid, "display": disp, "count": n} for eid, disp, n in self.per_entity
                ]
            }
        else:
            out["result"] = {"papers": [p.to_dict() for p in self.papers]}
        return out


def _step_papers(g: KnowledgeGraph, step: PlanStep) -> set[str]:
    return set(metapath_traverse(g, step.entity_id, step.path))


def _keep_positive(g: KnowledgeGraph, papers: set[str], lexicon: SentimentLexicon) -> set[str]:
    return {p for p in papers if aggregate_sentiment(g, p, lexicon)[0] > 0}


def _paper_items(g: KnowledgeGraph, ordered_ids: list[str]) -> tuple[PaperItem, ...]:
    items = []
    for pid in ordered_ids:
        node = g.node(pid)
        items.append(PaperItem(pid, node.display, node.year, g.citation_count(pid)))
    return tuple(items)


def execute(
    g: KnowledgeGraph,
    parsed: ParsedQuery,
    plan: QueryPlan,
    links: dict[str, LinkedEntity],
    lexicon: Optional[SentimentLexicon] = None,
) -> Answer:
    """Run *plan* on the graph and shape the result for the query class."""
    lex = _lexicon(lexicon)
    bindings = tuple(links.values())
    base = dict(
        qclass=parsed.qclass,
        subtype=parsed.subtype,
        template_id=parsed.template.template_id,
        bindings=bindings,
    )
    if plan.mode == "compare":
        per = []
        for step in plan.steps:
            papers = _step_papers(g, step)
            if plan.positive_only:
                papers = _keep_positive(g, papers, lex)
            per.append((step.entity_id, step.display, len(papers)))
        return Answer(shape="comparison", per_entity=tuple(per), **base)

    sets = [_step_papers(g, step) for step in plan.steps]
    papers = set.intersection(*sets) if sets else set()
    if plan.positive_only:
        papers = _keep_positive(g, papers, lex)

    if parsed.qclass == CLASS_BINARY:
        return Answer(shape="yesno", yes=bool(papers), count=len(papers), **base)
    if parsed.qclass == CLASS_LIST:
        return Answer(shape="papers", papers=_paper_items(g, rank_papers(g, papers)), **base)
    if parsed.subtype == SUBTYPE_TEMPORAL:
        counts = Counter(g.node(p).year for p in papers if g.node(p).year is not None)
        return Answer(shape="series", series=YearSeries.from_counts(counts), **base)
    return Answer(shape="count", count=len(papers), **base)


def answer_nlq(
    g: KnowledgeGraph,
    text: str,
    catalog: Optional[QueryCatalog] = None,
    lexicon: Optional[SentimentLexicon] = None,
) -> Answer:
    """Answer a natural-language query against the graph."""
    parsed = classify_query(text, catalog)
    links = link_entities(g, parsed.spans)
    plan = plan_query(parsed, links)
    return execute(g, parsed, plan, links, lexicon=lexicon)
