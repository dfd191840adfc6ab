"""Valence/emotion lexicons and stopwords, loaded from plain data files.

File formats:
  valence.tsv   word<TAB>valence   (valence in [-1, 1], '#' comments allowed)
  emotions.tsv  word<TAB>emotion   (one line per word/emotion association)
  stopwords.txt one lowercase word per line
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

PLUTCHIK_EMOTIONS = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
)

VALENCE_FILE = "valence.tsv"
EMOTIONS_FILE = "emotions.tsv"
STOPWORDS_FILE = "stopwords.txt"


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Lexicon:
    valence: dict[str, float]
    emotions: dict[str, frozenset[str]]
    stopwords: frozenset[str]

    def __post_init__(self):
        for word, value in self.valence.items():
            if not -1.0 <= value <= 1.0:
                raise LexiconError(f"valence for {word!r} outside [-1, 1]: {value}")
        for word, names in self.emotions.items():
            bad = names - set(PLUTCHIK_EMOTIONS)
            if bad:
                raise LexiconError(f"unknown emotions for {word!r}: {sorted(bad)}")
        for word in (*self.valence, *self.emotions, *self.stopwords):
            if word != word.lower():
                raise LexiconError(f"lexicon keys must be lowercase: {word!r}")


def _data_lines(text: str):
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield line_no, stripped


def parse_valence(text: str) -> dict[str, float]:
    valence = {}
    for line_no, line in _data_lines(text):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"valence line {line_no}: expected word<TAB>value")
        word, raw = parts[0].strip().lower(), parts[1].strip()
        try:
            value = float(raw)
        except ValueError:
            raise LexiconError(f"valence line {line_no}: {raw!r} is not a number") from None
        valence[word] = value
    return valence


def parse_emotions(text: str) -> dict[str, frozenset[str]]:
    assoc: dict[str, set[str]] = {}
    for line_no, line in _data_lines(text):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"emotion line {line_no}: expected word<TAB>emotion")
        word, emotion = parts[0].strip().lower(), parts[1].strip().lower()
        if emotion not in PLUTCHIK_EMOTIONS:
            raise LexiconError(f"emotion line {line_no}: unknown emotion {emotion!r}")
        assoc.setdefault(word, set()).add(emotion)
    return {word: frozenset(names) for word, names in assoc.items()}


def parse_stopwords(text: str) -> frozenset[str]:
    return frozenset(word.lower() for _, word in _data_lines(text))


def load_lexicon(directory: str | Path) -> Lexicon:
    directory = Path(directory)

    def read(name: str) -> str:
        path = directory / name
        if not path.exists():
            raise LexiconError(f"lexicon file missing: {path}")
        return path.read_text(encoding="utf-8")

    return Lexicon(
        valence=parse_valence(read(VALENCE_FILE)),
        emotions=parse_emotions(read(EMOTIONS_FILE)),
        stopwords=parse_stopwords(read(STOPWORDS_FILE)),
    )


def default_lexicon() -> Lexicon:
    """The small English lexicon bundled with the package."""
    pkg = resources.files(__package__) / "data"
    return Lexicon(
        valence=parse_valence((pkg / VALENCE_FILE).read_text(encoding="utf-8")),
        emotions=parse_emotions((pkg / EMOTIONS_FILE).read_text(encoding="utf-8")),
        stopwords=parse_stopwords((pkg / STOPWORDS_FILE).read_text(encoding="utf-8")),
    )
