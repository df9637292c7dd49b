"""Corpus ingestion: parse extracted publication records, canonicalize names,
resolve in-corpus references and assign field labels.

The corpus contract is line-delimited JSON, one record per line, with the
fields: id, title, authors, venue, year, abstract, references, contexts,
urls, affiliations.  Ingestion is a single deterministic pass, so running it
twice over the same file yields identical ids and records.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusError
from .textutil import collapse_ws, contains_token_seq, normalize_name, tokenize

log = logging.getLogger(__name__)

YEAR_MIN = 1900
YEAR_MAX = 2100


@dataclass
class RawRecord:
    """One publication exactly as extracted, before any canonicalization."""

    anthology_id: str
    title: str
    author_names: list[str]
    venue_raw: str
    year: int
    abstract: str | None = None
    reference_titles: list[str] = field(default_factory=list)
    citation_contexts: list[tuple[str, str]] = field(default_factory=list)
    urls: list[str] = field(default_factory=list)
    affiliations: list[str] = field(default_factory=list)


@dataclass
class PaperRecord:
    """A cleaned record ready for graph construction.

    cited_paper_ids only contains papers present in the same corpus build and
    never the paper itself; contexts are attached per resolved reference.
    """

    paper_id: str
    title: str
    author_ids: list[str]
    venue_id: str
    year: int
    abstract: str | None
    cited_paper_ids: list[str]
    contexts: list[tuple[str, str]]  # (cited_paper_id, sentence)
    urls: list[str]
    affiliations: list[str]
    field_ids: list[str]


class NameIndex:
    """Mints stable ids for name strings that are equal after normalization."""

    def __init__(self, prefix: str = "a"):
        self.prefix = prefix
        self.canonical_names: dict[str, str] = {}  # id -> first-seen display form
        self.alias_map: dict[str, str] = {}  # normalized string -> id

    def intern(self, name: str) -> str:
        display = collapse_ws(name)
        if not display:
            raise CorpusError("empty name cannot be canonicalized")
        key = normalize_name(display)
        if not key:
            raise CorpusError(f"name {name!r} is empty after normalization")
        existing = self.alias_map.get(key)
        if existing is not None:
            return existing
        new_id = f"{self.prefix}{len(self.canonical_names) + 1}"
        self.canonical_names[new_id] = display
        self.alias_map[key] = new_id
        return new_id


def canonicalize_author(name: str, index: NameIndex) -> str:
    """Return the id for an author name, minting one on first sight."""
    return index.intern(name)


class VenueTable:
    """Unification table from raw venue strings to unified venue ids."""

    def __init__(self, mapping: dict[str, str] | None = None):
        self._map: dict[str, str] = {}
        self.names: dict[str, str] = {}  # venue id -> display string
        for raw, unified in (mapping or {}).items():
            unified = collapse_ws(unified)
            self._map[normalize_name(raw)] = unified
            self.names.setdefault(unified, unified)

    @classmethod
    def load(cls, path: str | Path) -> "VenueTable":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CorpusError(f"cannot read venue table {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CorpusError(f"venue table {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise CorpusError(f"venue table {path} must map raw names to ids")
        return cls({str(k): str(v) for k, v in data.items()})

    def resolve(self, venue_raw: str) -> str:
        key = normalize_name(venue_raw)
        unified = self._map.get(key)
        if unified is None:
            unified = collapse_ws(venue_raw)
            self._map[key] = unified
            self.names.setdefault(unified, unified)
            log.warning("venue %r not in unification table; minted id %r", venue_raw, unified)
        return unified


def canonicalize_venue(venue_raw: str, table: VenueTable) -> str:
    """Map a raw venue string to its unified id (total function)."""
    return table.resolve(venue_raw)


def load_corpus(path: str | Path) -> tuple[list[RawRecord], int]:
    """Read a line-delimited corpus file.

    Returns (records, skipped) where skipped counts malformed lines; each
    skip emits a diagnostic.  An unreadable file is fatal.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc

    records: list[RawRecord] = []
    seen_ids: set[str] = set()
    skipped = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        record = _parse_line(line, lineno, seen_ids)
        if record is None:
            skipped += 1
        else:
            seen_ids.add(record.anthology_id)
            records.append(record)
    return records, skipped


def _parse_line(line: str, lineno: int, seen_ids: set[str]) -> RawRecord | None:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        log.warning("line %d: not valid JSON (%s); skipped", lineno, exc)
        return None
    if not isinstance(obj, dict):
        log.warning("line %d: not an object; skipped", lineno)
        return None

    rec_id = obj.get("id")
    title = obj.get("title")
    authors = obj.get("authors")
    venue = obj.get("venue")
    year = obj.get("year")
    if not isinstance(rec_id, str) or not rec_id.strip():
        log.warning("line %d: missing or empty id; skipped", lineno)
        return None
    if rec_id in seen_ids:
        log.warning("line %d: duplicate id %r; skipped", lineno, rec_id)
        return None
    if not isinstance(title, str) or not title.strip():
        log.warning("line %d: missing title; skipped", lineno)
        return None
    if (
        not isinstance(authors, list)
        or not authors
        or not all(isinstance(a, str) and a.strip() for a in authors)
    ):
        log.warning("line %d: authors must be a nonempty list of names; skipped", lineno)
        return None
    if not isinstance(venue, str) or not venue.strip():
        log.warning("line %d: missing venue; skipped", lineno)
        return None
    if not isinstance(year, int) or not YEAR_MIN <= year <= YEAR_MAX:
        log.warning("line %d: year must be an integer in [%d, %d]; skipped", lineno, YEAR_MIN, YEAR_MAX)
        return None

    abstract = obj.get("abstract")
    if abstract is not None and not isinstance(abstract, str):
        log.warning("line %d: abstract must be a string or null; skipped", lineno)
        return None

    references = obj.get("references", [])
    if not isinstance(references, list) or not all(isinstance(r, str) for r in references):
        log.warning("line %d: references must be a list of titles; skipped", lineno)
        return None

    contexts_raw = obj.get("contexts", [])
    contexts: list[tuple[str, str]] = []
    if not isinstance(contexts_raw, list):
        log.warning("line %d: contexts must be a list; skipped", lineno)
        return None
    for pair in contexts_raw:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            log.warning("line %d: each context must be [reference_title, sentence]; skipped", lineno)
            return None
        contexts.append((pair[0], pair[1]))

    urls = obj.get("urls", [])
    affiliations = obj.get("affiliations", [])
    if not isinstance(urls, list) or not all(isinstance(u, str) for u in urls):
        log.warning("line %d: urls must be a list of strings; skipped", lineno)
        return None
    if not isinstance(affiliations, list) or not all(isinstance(a, str) for a in affiliations):
        log.warning("line %d: affiliations must be a list of strings; skipped", lineno)
        return None

    return RawRecord(
        anthology_id=rec_id.strip(),
        title=collapse_ws(title),
        author_names=list(authors),
        venue_raw=venue,
        year=year,
        abstract=abstract,
        reference_titles=list(references),
        citation_contexts=contexts,
        urls=list(urls),
        affiliations=list(affiliations),
    )


def build_title_index(records: list[RawRecord]) -> dict[str, str]:
    """Normalized title -> paper id over the whole corpus.

    On a duplicate normalized title the earliest record wins, so reference
    resolution stays deterministic.
    """
    index: dict[str, str] = {}
    for record in records:
        index.setdefault(normalize_name(record.title), record.anthology_id)
    return index


def resolve_references(record: RawRecord, title_index: dict[str, str]) -> list[str]:
    """In-corpus cited paper ids for a record.

    Matching is exact on normalized titles; out-of-corpus references are
    dropped silently, duplicates collapse, self-citations are removed.
    """
    resolved: list[str] = []
    seen: set[str] = set()
    for ref_title in record.reference_titles:
        target = title_index.get(normalize_name(ref_title))
        if target is None or target == record.anthology_id or target in seen:
            continue
        seen.add(target)
        resolved.append(target)
    return resolved


def load_field_vocabulary(path: str | Path) -> dict[str, list[str]]:
    """Field id -> keyword list from a JSON config file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read field vocabulary {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"field vocabulary {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CorpusError(f"field vocabulary {path} must map field ids to keyword lists")
    vocab: dict[str, list[str]] = {}
    for field_id, keywords in data.items():
        if not isinstance(keywords, list) or not all(isinstance(k, str) for k in keywords):
            raise CorpusError(f"field {field_id!r}: keywords must be a list of strings")
        vocab[str(field_id)] = list(keywords)
    return vocab


def assign_fields(title: str, abstract: str | None, vocabulary: dict[str, list[str]]) -> list[str]:
    """Fields whose keywords occur as a token sequence in title or abstract.

    Output is sorted by field id so repeated builds agree.
    """
    text_tokens = tokenize(title)
    if abstract:
        text_tokens = text_tokens + tokenize(abstract)
    assigned = []
    for field_id in sorted(vocabulary):
        for keyword in vocabulary[field_id]:
            if contains_token_seq(text_tokens, tokenize(keyword)):
                assigned.append(field_id)
                break
    return assigned


@dataclass
class IngestResult:
    records: list[PaperRecord]
    authors: NameIndex
    venues: VenueTable
    fields: dict[str, list[str]]
    skipped: int


def ingest_corpus(
    corpus_path: str | Path,
    venue_table: VenueTable | None = None,
    field_vocabulary: dict[str, list[str]] | None = None,
) -> IngestResult:
    """Full ingestion pass: load, canonicalize, resolve, label."""
    raw_records, skipped = load_corpus(corpus_path)
    venues = venue_table if venue_table is not None else VenueTable()
    fields = field_vocabulary or {}
    authors = NameIndex(prefix="a")
    title_index = build_title_index(raw_records)

    records: list[PaperRecord] = []
    for raw in raw_records:
        author_ids: list[str] = []
        for name in raw.author_names:
            author_id = canonicalize_author(name, authors)
            if author_id not in author_ids:
                author_ids.append(author_id)
        cited = resolve_references(raw, title_index)
        cited_set = set(cited)
        contexts = [
            (title_index[normalize_name(ref_title)], collapse_ws(sentence))
            for ref_title, sentence in raw.citation_contexts
            if title_index.get(normalize_name(ref_title)) in cited_set
        ]
        records.append(
            PaperRecord(
                paper_id=raw.anthology_id,
                title=raw.title,
                author_ids=author_ids,
                venue_id=canonicalize_venue(raw.venue_raw, venues),
                year=raw.year,
                abstract=raw.abstract,
                cited_paper_ids=cited,
                contexts=contexts,
                urls=list(raw.urls),
                affiliations=list(raw.affiliations),
                field_ids=assign_fields(raw.title, raw.abstract, fields),
            )
        )
    return IngestResult(records=records, authors=authors, venues=venues, fields=fields, skipped=skipped)
