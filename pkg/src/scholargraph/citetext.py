"""Citation-context insights: lexicon sentiment scoring and extractive
summaries built from the sentences that cite a paper.

The scorer is deliberately a plain lexicon counter behind a small interface;
swapping in a learned classifier only means providing another callable with
the same signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .graph import EntityKind, KnowledgeGraph
from .textutil import tokenize


@dataclass(frozen=True)
class SentimentLexicon:
    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise ConfigError(f"lexicon tokens in both polarities: {sorted(overlap)}")


def parse_lexicon(text: str) -> SentimentLexicon:
    """Parse the one-token-per-line lexicon with `+` / `-` section headers."""
    positive: set[str] = set()
    negative: set[str] = set()
    current: set[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("+",):
            current = positive
        elif line in ("-", "−"):
            current = negative
        elif current is None:
            raise ConfigError(f"lexicon token {line!r} before any +/- header")
        else:
            current.add(line.casefold())
    return SentimentLexicon(frozenset(positive), frozenset(negative))


def load_lexicon(path: str | Path | None = None) -> SentimentLexicon:
    if path is None:
        text = resources.files("scholargraph.assets").joinpath("lexicon.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_lexicon(text)


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        text = resources.files("scholargraph.assets").joinpath("stopwords.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return frozenset(w.strip().casefold() for w in text.splitlines() if w.strip())


def score_context(context: str, lexicon: SentimentLexicon) -> float:
    """Sentiment of one sentence in [-1, +1]: (pos - neg) / max(1, pos + neg)."""
    pos = 0
    neg = 0
    for token in tokenize(context):
        if token in lexicon.positive:
            pos += 1
        elif token in lexicon.negative:
            neg += 1
    return (pos - neg) / max(1, pos + neg)


def aggregate_sentiment(g: KnowledgeGraph, paper_id: str, lexicon: SentimentLexicon) -> tuple[float, int]:
    """Mean context score over all incoming citation contexts, with the
    context count; (0.0, 0) when nothing cites the paper with a context."""
    contexts = g.incoming_contexts(paper_id)
    if not contexts:
        return 0.0, 0
    total = sum(score_context(sentence, lexicon) for _, sentence in contexts)
    return total / len(contexts), len(contexts)


@dataclass(frozen=True)
class CitationSummary:
    """Up to k verbatim incoming contexts, most central first."""

    sentences: tuple[str, ...]
    sources: tuple[str, ...]  # citing paper id per sentence

    def __len__(self) -> int:
        return len(self.sentences)


def _tf_vector(sentence: str, stopwords: frozenset[str]) -> dict[str, int]:
    vec: dict[str, int] = {}
    for token in tokenize(sentence):
        if token not in stopwords:
            vec[token] = vec.get(token, 0) + 1
    return vec


def _cosine(a: dict[str, int], b: dict[str, int]) -> float:
    if not a or not b:
        return 0.0
    if len(b) < len(a):
        a, b = b, a
    dot = sum(count * b.get(token, 0) for token, count in a.items())
    if dot == 0:
        return 0.0
    norm_a = math.sqrt(sum(c * c for c in a.values()))
    norm_b = math.sqrt(sum(c * c for c in b.values()))
    return dot / (norm_a * norm_b)


REDUNDANCY_THRESHOLD = 0.8


def summarize_incoming(
    g: KnowledgeGraph,
    paper_id: str,
    k: int = 5,
    stopwords: frozenset[str] | None = None,
) -> CitationSummary:
    """Pick up to k incoming contexts by centrality.

    Each context is scored by its total cosine similarity (term-frequency
    vectors, stopwords removed) to every other incoming context; candidates
    too similar (> 0.8) to an already selected sentence are skipped.  Ties
    break on (citing paper id, position) so summaries are reproducible.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    g.require(paper_id, EntityKind.PAPER)
    if stopwords is None:
        stopwords = load_stopwords()

    contexts = g.incoming_contexts(paper_id)
    if not contexts:
        return CitationSummary((), ())

    vectors = [_tf_vector(sentence, stopwords) for _, sentence in contexts]
    n = len(contexts)
    sims = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            sims[i][j] = sims[j][i] = _cosine(vectors[i], vectors[j])

    centrality = [sum(sims[i]) for i in range(n)]
    order = sorted(range(n), key=lambda i: (-centrality[i], contexts[i][0], i))

    chosen: list[int] = []
    for idx in order:
        if len(chosen) == k:
            break
        if any(sims[idx][prev] > REDUNDANCY_THRESHOLD for prev in chosen):
            continue
        chosen.append(idx)

    return CitationSummary(
        tuple(contexts[i][1] for i in chosen),
        tuple(contexts[i][0] for i in chosen),
    )
