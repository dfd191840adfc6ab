"""Text primitives shared by the prompt index and the feedback analyzer.

Both consumers must tokenize identically, so the rules live in one place:
lowercase, split on Unicode whitespace, strip non-alphanumeric characters
from token edges, keep internal apostrophes and hyphens.
"""

from __future__ import annotations

import re

_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?])(?=\s|$)")


def _strip_edges(token: str) -> str:
    start, end = 0, len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[start:end]


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; punctuation-only fragments disappear."""
    return [t for t in (_strip_edges(w) for w in text.lower().split()) if t]


def word_count(text: str) -> int:
    """Whitespace-delimited word count (conversation budget proxy)."""
    return len(text.split())


def split_sentences(text: str) -> list[str]:
    """Split at ``.``/``!``/``?`` followed by whitespace or end of text.

    Pieces are whitespace-trimmed; every returned sentence is a verbatim
    substring of ``text``. Text without a terminator is one sentence.
    """
    return [s for s in (p.strip() for p in _SENTENCE_BOUNDARY.split(text)) if s]
