"""Exception taxonomy shared across the package.

Each error class corresponds to one failure mode surfaced through the CLI
exit codes and the REST status mapping, so callers can branch on type
instead of parsing messages.
"""

from __future__ import annotations


class ScholarGraphError(Exception):
    """Base class for all package errors."""


class CorpusError(ScholarGraphError):
    """A corpus or config file is unreadable or structurally broken (fatal)."""


class GraphBuildError(ScholarGraphError):
    """Input records violate graph construction invariants (e.g. dangling cite)."""


class NotFoundError(ScholarGraphError):
    """A node id does not exist in the graph."""


class KindError(ScholarGraphError):
    """A node exists but has the wrong entity kind for the operation."""


class MetapathError(ScholarGraphError):
    """A metapath spec has an undefined adjacency or is too short."""


class ConfigError(ScholarGraphError):
    """Template catalog, lexicon or vocabulary config is inconsistent."""


class UnsupportedQueryError(ScholarGraphError):
    """No query template matches the input text."""


class EntityNotFoundError(ScholarGraphError):
    """A query slot could not be linked to any graph entity."""

    def __init__(self, slot: str, message: str | None = None):
        self.slot = slot
        super().__init__(message or f"no entity matches slot {slot}")
