"""Small text helpers used by ingestion, search and query linking."""

from __future__ import annotations

import re
import unicodedata

_WS_RE = re.compile(r"\s+")
_TOKEN_RE = re.compile(r"[0-9a-z]+")


def collapse_ws(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def strip_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def normalize_name(name: str) -> str:
    """Canonical key for an author/venue/title string.

    Casefold, drop diacritics, drop punctuation, collapse whitespace.
    Idempotent: normalize_name(normalize_name(x)) == normalize_name(x).
    """
    text = strip_diacritics(name).casefold()
    text = "".join(ch if ch.isalnum() else " " for ch in text)
    return collapse_ws(text)


def tokenize(text: str) -> list[str]:
    """Lowercase alphanumeric tokens, splitting on everything else."""
    return _TOKEN_RE.findall(strip_diacritics(text).casefold())


def contains_token_seq(haystack: list[str], needle: list[str]) -> bool:
    """True if `needle` occurs as a contiguous run inside `haystack`."""
    if not needle or len(needle) > len(haystack):
        return False
    for i in range(len(haystack) - len(needle) + 1):
        if haystack[i : i + len(needle)] == needle:
            return True
    return False


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence of two strings (case-insensitive)."""
    a = a.casefold()
    b = b.casefold()
    if not a or not b:
        return 0
    # One-row DP; b is the candidate name and typically short.
    prev = [0] * (len(b) + 1)
    for ch in a:
        curr = [0]
        for j, other in enumerate(b, start=1):
            if ch == other:
                curr.append(prev[j - 1] + 1)
            else:
                curr.append(max(prev[j], curr[j - 1]))
        prev = curr
    return prev[-1]
