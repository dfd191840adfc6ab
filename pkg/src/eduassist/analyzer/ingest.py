"""Comment corpus ingestion from plain text or CSV."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

PLAIN = "plain"
CSV = "csv"
COMMENT_COLUMN = "comment"


class AnalyzerError(ValueError):
    pass


class DecodeError(AnalyzerError):
    pass


class MissingCommentColumn(AnalyzerError):
    pass


class EmptyCorpus(AnalyzerError):
    pass


@dataclass(frozen=True)
class Comment:
    index: int  # dense ordinal, 0-based
    text: str  # nonempty after trim


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"input is not valid UTF-8: {exc}") from exc


def _from_plain(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def _from_csv(text: str) -> list[str]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MissingCommentColumn("CSV input has no header row") from None
    matches = [i for i, name in enumerate(header) if name.strip().lower() == COMMENT_COLUMN]
    if not matches:
        raise MissingCommentColumn(
            f"CSV header has no {COMMENT_COLUMN!r} column (got: {', '.join(header)})"
        )
    column = matches[0]
    texts = []
    for row in reader:
        if column < len(row) and row[column].strip():
            texts.append(row[column].strip())
    return texts


def ingest_comments(raw: bytes, format: str = PLAIN) -> list[Comment]:
    """Decode and split into comments; blank lines / empty cells are skipped.

    Raises DecodeError, MissingCommentColumn (csv only), or EmptyCorpus.
    """
    text = _decode(raw)
    if format == PLAIN:
        texts = _from_plain(text)
    elif format == CSV:
        texts = _from_csv(text)
    else:
        raise AnalyzerError(f"unknown input format {format!r}")
    if not texts:
        raise EmptyCorpus("no comments found in input")
    return [Comment(i, t) for i, t in enumerate(texts)]
