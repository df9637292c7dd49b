"""Template catalog: loading, validation, and surface-form expansion.

A template couples a query class (binary / statistical / list) with an
execution plan and a set of phrasings.  Phrasings use ``$SLOT`` placeholders
and ``(a|b|c)`` alternation groups; an empty alternative makes the whole
group optional.  The catalog is the cross-product of every template's
phrasings and alternatives, deduplicated.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from scholargraph.errors import ConfigError
from scholargraph.textutil import collapse_ws, tokenize

CLASS_BINARY = "binary"
CLASS_STATISTICAL = "statistical"
CLASS_LIST = "list"
QUERY_CLASSES = (CLASS_BINARY, CLASS_STATISTICAL, CLASS_LIST)

SUBTYPE_CUMULATIVE = "cumulative"
SUBTYPE_TEMPORAL = "temporal"
SUBTYPE_COMPARISON = "comparison"
STAT_SUBTYPES = (SUBTYPE_CUMULATIVE, SUBTYPE_TEMPORAL, SUBTYPE_COMPARISON)

SLOT_RE = re.compile(r"\$([A-Z][0-9]?)")
_GROUP_RE = re.compile(r"\(([^()]*)\)")

#: phrases that mark a statistical question as asking for a year-by-year series
TEMPORAL_CUES = ("over the years", "year-wise", "year wise", "per year", "year by year")
#: phrases/tokens that mark a statistical question as a side-by-side comparison
COMPARISON_CUES = ("compare", "versus", "compared to")
COMPARISON_TOKENS = frozenset({"vs", "compare", "compared", "versus"})


def subtype_of(text: str) -> str:
    """Statistical subtype implied by the wording of *text* alone."""
    low = text.casefold()
    if any(cue in low for cue in TEMPORAL_CUES):
        return SUBTYPE_TEMPORAL
    if any(cue in low for cue in COMPARISON_CUES) or COMPARISON_TOKENS & set(tokenize(low)):
        return SUBTYPE_COMPARISON
    return SUBTYPE_CUMULATIVE


def slot_kind_letter(slot: str) -> str:
    """Entity-kind letter for a slot name ("A2" -> "A")."""
    return slot[0]


@dataclass(frozen=True)
class QueryTemplate:
    template_id: str
    qclass: str
    slots: tuple[str, ...]
    plan: dict
    phrasings: tuple[str, ...]
    subtype: Optional[str] = None

    def canonical_surface(self) -> str:
        """First phrasing with every alternation group collapsed to its first alternative."""
        return expand_phrasing(self.phrasings[0])[0]


@dataclass(frozen=True)
class CatalogEntry:
    """One concrete surface form (still containing ``$SLOT`` placeholders)."""

    surface: str
    template: QueryTemplate

    @property
    def template_id(self) -> str:
        return self.template.template_id

    def fill(self, values: dict[str, str]) -> str:
        """Substitute slot values into the surface form."""
        return SLOT_RE.sub(lambda m: values[m.group(1)], self.surface)


def expand_phrasing(phrasing: str) -> list[str]:
    """All alternative-resolved surface forms of one phrasing, in listed order."""
    segments: list[list[str]] = []
    pos = 0
    for m in _GROUP_RE.finditer(phrasing):
        if m.start() > pos:
            segments.append([phrasing[pos:m.start()]])
        segments.append(m.group(1).split("|"))
        pos = m.end()
    if pos < len(phrasing):
        segments.append([phrasing[pos:]])
    out = []
    for combo in itertools.product(*segments):
        out.append(collapse_ws("".join(combo)))
    return out


def _surface_slots(surface: str) -> tuple[str, ...]:
    return tuple(SLOT_RE.findall(surface))


def _literal_regex(part: str) -> str:
    if not part:
        return ""
    if not part.strip():
        return r"\s+"
    body = r"\s+".join(re.escape(tok) for tok in part.split())
    head = r"\s+" if part[0].isspace() else ""
    tail = r"\s+" if part[-1].isspace() else ""
    return head + body + tail


def compile_surface(surface: str) -> re.Pattern:
    """Anchored, case-insensitive matcher for one surface form.

    Slots become lazy named groups, literal whitespace matches any run of
    whitespace, and trailing punctuation on the query is tolerated.
    """
    parts = SLOT_RE.split(surface)
    out = [r"^\s*"]
    for i, part in enumerate(parts):
        if i % 2:
            out.append(f"(?P<{part}>.+?)")
        else:
            out.append(_literal_regex(part))
    out.append(r"[\s?.!]*$")
    return re.compile("".join(out), re.IGNORECASE)


@dataclass(frozen=True)
class CompiledEntry:
    """A catalog entry with its matcher and specificity precomputed."""

    entry: CatalogEntry
    pattern: re.Pattern
    literal_tokens: frozenset[str]
    specificity: int


def compile_entries(entries: list[CatalogEntry]) -> list[CompiledEntry]:
    """Matchers for *entries*, most-specific (most literal tokens) first."""
    compiled = []
    for entry in entries:
        literals = tokenize(SLOT_RE.sub(" ", entry.surface))
        compiled.append(
            CompiledEntry(
                entry=entry,
                pattern=compile_surface(entry.surface),
                literal_tokens=frozenset(literals),
                specificity=len(literals),
            )
        )
    compiled.sort(key=lambda c: (-c.specificity, c.entry.template.template_id, c.entry.surface))
    return compiled


def _validate_template(t: QueryTemplate) -> None:
    if t.qclass not in QUERY_CLASSES:
        raise ConfigError(f"template {t.template_id}: unknown class {t.qclass!r}")
    if t.qclass == CLASS_STATISTICAL:
        if t.subtype not in STAT_SUBTYPES:
            raise ConfigError(f"template {t.template_id}: statistical templates need a subtype")
    elif t.subtype is not None:
        raise ConfigError(f"template {t.template_id}: subtype only applies to statistical templates")
    if not t.phrasings:
        raise ConfigError(f"template {t.template_id}: no phrasings")
    declared = set(t.slots)
    if len(declared) != len(t.slots):
        raise ConfigError(f"template {t.template_id}: duplicate slot names")
    for phrasing in t.phrasings:
        for surface in expand_phrasing(phrasing):
            used = _surface_slots(surface)
            if set(used) != declared or len(used) != len(t.slots):
                raise ConfigError(
                    f"template {t.template_id}: phrasing {surface!r} uses slots "
                    f"{sorted(used)} but template declares {sorted(declared)}"
                )
    steps = t.plan.get("intersect") or t.plan.get("compare") or []
    for step in steps:
        if step["slot"] not in declared:
            raise ConfigError(f"template {t.template_id}: plan references unknown slot {step['slot']!r}")


@dataclass
class QueryCatalog:
    templates: tuple[QueryTemplate, ...]
    _entries: Optional[list[CatalogEntry]] = field(default=None, repr=False)
    _compiled: Optional[list[CompiledEntry]] = field(default=None, repr=False)

    def template(self, template_id: str) -> QueryTemplate:
        for t in self.templates:
            if t.template_id == template_id:
                return t
        raise KeyError(template_id)

    @property
    def entries(self) -> list[CatalogEntry]:
        if self._entries is None:
            self._entries = expand_templates(self.templates)
        return self._entries

    def compiled(self) -> list[CompiledEntry]:
        if self._compiled is None:
            self._compiled = compile_entries(self.entries)
        return self._compiled


def expand_templates(templates: tuple[QueryTemplate, ...]) -> list[CatalogEntry]:
    """Cross-product expansion of every template, deduplicated.

    A surface form produced by two different templates is a catalog defect
    and raises :class:`ConfigError`; the same surface repeated within one
    template is silently collapsed.  Surfaces are compared with slot names
    blanked out, because slot names never appear in user text: two entries
    that differ only in ``$V`` vs ``$A`` compile to the same pattern and
    one of them could never win a match.
    """
    seen: dict[str, CatalogEntry] = {}
    out: list[CatalogEntry] = []
    for t in templates:
        for phrasing in t.phrasings:
            for surface in expand_phrasing(phrasing):
                key = SLOT_RE.sub("$_", surface).casefold()
                prior = seen.get(key)
                if prior is not None:
                    if prior.template.template_id != t.template_id:
                        raise ConfigError(
                            f"surface {surface!r} produced by both "
                            f"{prior.template.template_id} and {t.template_id}"
                        )
                    continue
                if t.qclass == CLASS_STATISTICAL:
                    implied = subtype_of(surface)
                    if implied != t.subtype:
                        raise ConfigError(
                            f"template {t.template_id}: phrasing {surface!r} reads as "
                            f"{implied} but template declares {t.subtype}"
                        )
                entry = CatalogEntry(surface, t)
                seen[key] = entry
                out.append(entry)
    return out


def _template_from_obj(obj: dict) -> QueryTemplate:
    try:
        return QueryTemplate(
            template_id=obj["id"],
            qclass=obj["class"],
            slots=tuple(obj["slots"]),
            plan=obj["plan"],
            phrasings=tuple(obj["phrasings"]),
            subtype=obj.get("subtype"),
        )
    except KeyError as exc:
        raise ConfigError(f"template object missing key {exc}") from exc


def load_catalog(path: Optional[str | Path] = None) -> QueryCatalog:
    """Load the template catalog from *path*, or the packaged default."""
    if path is None:
        text = resources.files("scholargraph.assets").joinpath("templates.json").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"template catalog is not valid JSON: {exc}") from exc
    raw = doc.get("templates")
    if not isinstance(raw, list) or not raw:
        raise ConfigError("template catalog has no templates")
    templates = tuple(_template_from_obj(obj) for obj in raw)
    ids = [t.template_id for t in templates]
    if len(set(ids)) != len(ids):
        raise ConfigError("duplicate template ids in catalog")
    for t in templates:
        _validate_template(t)
    return QueryCatalog(templates)
