"""Report container and its JSON / plain-text renderings.

Percentages live as exact ratios inside the report; rendering rounds them to
one decimal place. The JSON form is canonical: sorted keys, stable layout,
so equal reports render to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .lexicon import PLUTCHIK_EMOTIONS

JSON = "json"
TEXT = "text"

SCORE_BIN_LABELS = (
    "[-1.00,-0.75)",
    "[-0.75,-0.50)",
    "[-0.50,-0.25)",
    "[-0.25,0.00)",
    "[0.00,0.25)",
    "[0.25,0.50)",
    "[0.50,0.75)",
    "[0.75,1.00]",
)


@dataclass(frozen=True)
class AnalysisReport:
    corpus_size: int
    sentiment_distribution: dict[str, float]  # percentages, exact
    score_histogram: tuple[int, ...]  # 8 bins over [-1, 1]
    length_histogram: tuple[int, ...]  # 5 char-length bins
    wordcount_histogram: tuple[int, ...]  # 5 word-count bins
    emotion_distribution: dict[str, float]  # percentages, exact
    no_emotion_hits: bool
    keywords: tuple[tuple[str, int], ...]  # ranked (term, count)
    summary: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "corpus_size": self.corpus_size,
            "sentiment_distribution": {
                k: round(v, 1) for k, v in self.sentiment_distribution.items()
            },
            "score_histogram": list(self.score_histogram),
            "length_histogram": list(self.length_histogram),
            "wordcount_histogram": list(self.wordcount_histogram),
            "emotion_distribution": {
                k: round(v, 1) for k, v in self.emotion_distribution.items()
            },
            "no_emotion_hits": self.no_emotion_hits,
            "keywords": [[term, count] for term, count in self.keywords],
            "summary": list(self.summary),
        }


def report_from_json_dict(data: dict) -> AnalysisReport:
    return AnalysisReport(
        corpus_size=int(data["corpus_size"]),
        sentiment_distribution={k: float(v) for k, v in data["sentiment_distribution"].items()},
        score_histogram=tuple(int(v) for v in data["score_histogram"]),
        length_histogram=tuple(int(v) for v in data["length_histogram"]),
        wordcount_histogram=tuple(int(v) for v in data["wordcount_histogram"]),
        emotion_distribution={k: float(v) for k, v in data["emotion_distribution"].items()},
        no_emotion_hits=bool(data["no_emotion_hits"]),
        keywords=tuple((term, int(count)) for term, count in data["keywords"]),
        summary=tuple(data["summary"]),
    )


def _render_text(report: AnalysisReport) -> str:
    lines = [f"Comments analyzed: {report.corpus_size}", ""]

    lines.append("Sentiment distribution:")
    for cls in ("positive", "negative", "neutral"):
        lines.append(f"  {cls:<9} {report.sentiment_distribution[cls]:.1f}%")
    lines.append("")

    lines.append("Sentiment score distribution:")
    for label, count in zip(SCORE_BIN_LABELS, report.score_histogram):
        lines.append(f"  {label:<14} {count}")
    lines.append("")

    lines.append("Comment length distribution (characters):")
    for label, count in zip(
        ("0-49", "50-99", "100-199", "200-399", "400+"), report.length_histogram
    ):
        lines.append(f"  {label:<8} {count}")
    lines.append("")

    lines.append("Comment word count distribution:")
    for label, count in zip(
        ("0-9", "10-19", "20-39", "40-79", "80+"), report.wordcount_histogram
    ):
        lines.append(f"  {label:<8} {count}")
    lines.append("")

    lines.append("Emotion distribution:")
    if report.no_emotion_hits:
        lines.append("  (no emotion-bearing words found)")
    else:
        for emotion in PLUTCHIK_EMOTIONS:
            lines.append(f"  {emotion:<13} {report.emotion_distribution[emotion]:.1f}%")
    lines.append("")

    lines.append("Top keywords:")
    for term, count in report.keywords:
        lines.append(f"  {term} ({count})")
    lines.append("")

    lines.append("Summary:")
    for sentence in report.summary:
        lines.append(f"  - {sentence}")
    lines.append("")
    return "\n".join(lines)


def render_report(report: AnalysisReport, format: str = JSON) -> bytes:
    if format == JSON:
        text = json.dumps(report.to_json_dict(), sort_keys=True, indent=2)
        return (text + "\n").encode("utf-8")
    if format == TEXT:
        return _render_text(report).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def parse_report(raw: bytes) -> AnalysisReport:
    """Inverse of the JSON rendering (percentages stay at their rounded values)."""
    return report_from_json_dict(json.loads(raw.decode("utf-8")))
