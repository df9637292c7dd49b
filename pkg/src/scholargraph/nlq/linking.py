"""Resolve query slot spans to graph entities by fuzzy name match.

Matching is a character-level longest-common-subsequence score against each
candidate's display name: ``lcs / len(candidate)``.  A candidate must score
at least :data:`LINK_THRESHOLD`; ties prefer the longer common subsequence
(so a span naming a venue exactly beats a shorter name it happens to
contain), then the smaller id.
"""

from __future__ import annotations

from dataclasses import dataclass

from scholargraph.errors import ConfigError, EntityNotFoundError
from scholargraph.graph import EntityKind, KnowledgeGraph
from scholargraph.nlq.catalog import slot_kind_letter
from scholargraph.textutil import lcs_length

LINK_THRESHOLD = 0.8

_LETTER_KIND = {
    "A": EntityKind.AUTHOR,
    "P": EntityKind.PAPER,
    "V": EntityKind.VENUE,
    "F": EntityKind.FIELD,
}


@dataclass(frozen=True)
class LinkedEntity:
    slot: str
    node_id: str
    display: str
    score: float
    span: str


def _best_candidate(g: KnowledgeGraph, kind: EntityKind, span: str, taken: set[str]):
    scored = []
    for node in g.nodes(kind):
        if node.node_id in taken or not node.display:
            continue
        lcs = lcs_length(span, node.display)
        score = lcs / len(node.display)
        if score >= LINK_THRESHOLD:
            scored.append((-score, -lcs, node.node_id, node))
    if not scored:
        return None
    scored.sort(key=lambda item: item[:3])
    return scored[0][3]


def link_entities(g: KnowledgeGraph, spans: dict[str, str]) -> dict[str, "LinkedEntity"]:
    """Bind each slot span to a distinct graph entity.

    *spans* maps slot name -> captured text, in slot order; earlier slots
    bind first and exclude their entity from later same-kind slots.
    """
    out: dict[str, LinkedEntity] = {}
    taken: set[str] = set()
    for slot, span in spans.items():
        letter = slot_kind_letter(slot)
        kind = _LETTER_KIND.get(letter)
        if kind is None:
            raise ConfigError(f"slot {slot!r} has no entity kind")
        cleaned = span.strip()
        node = _best_candidate(g, kind, cleaned, taken) if cleaned else None
        if node is None:
            raise EntityNotFoundError(slot, f"no {kind.value} matches {span!r}")
        taken.add(node.node_id)
        out[slot] = LinkedEntity(
            slot=slot,
            node_id=node.node_id,
            display=node.display,
            score=lcs_length(cleaned, node.display) / len(node.display),
            span=cleaned,
        )
    return out
