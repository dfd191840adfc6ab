"""The seven corpus metrics: sentiment classes and scores, length and
word-count histograms, emotion distribution, keywords, and the summary."""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass

from ..textproc import split_sentences, tokenize
from .ingest import Comment, EmptyCorpus
from .lexicon import PLUTCHIK_EMOTIONS, Lexicon
from .report import AnalysisReport

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"
SENTIMENT_CLASSES = (POSITIVE, NEGATIVE, NEUTRAL)

# Inner edges of the fixed score histogram: 8 equal bins over [-1, 1],
# lower-closed, the last bin closed at +1.
SCORE_EDGES = (-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75)


@dataclass(frozen=True)
class AnalyzerConfig:
    theta_pos: float = 0.05
    theta_neg: float = -0.05
    length_edges: tuple[int, ...] = (50, 100, 200, 400)
    wordcount_edges: tuple[int, ...] = (10, 20, 40, 80)
    keyword_limit: int = 20
    min_keyword_length: int = 2
    summary_sentences: int = 3

    def __post_init__(self):
        if not self.theta_neg < self.theta_pos:
            raise ValueError("theta_neg must be below theta_pos")


def sentiment_score(tokens: list[str], lexicon: Lexicon) -> float:
    """Mean valence of matched tokens, clamped to [-1, 1]; 0.0 with no matches."""
    matched = [lexicon.valence[t] for t in tokens if t in lexicon.valence]
    if not matched:
        return 0.0
    return max(-1.0, min(1.0, sum(matched) / len(matched)))


def classify_sentiment(
    score: float, theta_pos: float = 0.05, theta_neg: float = -0.05
) -> str:
    """Strict thresholds; scores on the boundary stay neutral."""
    if score > theta_pos:
        return POSITIVE
    if score < theta_neg:
        return NEGATIVE
    return NEUTRAL


def _histogram(values, inner_edges) -> tuple[int, ...]:
    counts = [0] * (len(inner_edges) + 1)
    for value in values:
        counts[bisect_right(inner_edges, value)] += 1
    return tuple(counts)


def top_keywords(
    token_lists: list[list[str]],
    lexicon: Lexicon,
    limit: int = 20,
    min_length: int = 2,
) -> list[tuple[str, int]]:
    """Corpus-wide counts minus stopwords and short tokens, (count desc, term asc)."""
    counts = Counter(
        t
        for tokens in token_lists
        for t in tokens
        if len(t) >= min_length and t not in lexicon.stopwords
    )
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:limit]


def summarize(
    comments: list[Comment], keywords: list[tuple[str, int]], limit: int = 3
) -> list[str]:
    """Extractive summary: sentences carrying the heaviest keyword mass.

    Sentences are scored by the summed corpus counts of their keyword tokens;
    ties prefer earlier sentences, output keeps original corpus order.
    """
    weight = dict(keywords)
    sentences: list[tuple[int, str]] = []
    for comment in comments:
        for sentence in split_sentences(comment.text):
            sentences.append((len(sentences), sentence))
    scored = [
        (sum(weight.get(t, 0) for t in tokenize(text)), seq, text)
        for seq, text in sentences
    ]
    chosen = sorted(scored, key=lambda item: (-item[0], item[1]))[:limit]
    return [text for _, _, text in sorted(chosen, key=lambda item: item[1])]


def analyze(
    comments: list[Comment],
    lexicon: Lexicon,
    config: AnalyzerConfig = AnalyzerConfig(),
) -> AnalysisReport:
    """Compute every metric over the corpus; pure and deterministic."""
    if not comments:
        raise EmptyCorpus("cannot analyze an empty corpus")
    n = len(comments)
    token_lists = [tokenize(c.text) for c in comments]
    scores = [sentiment_score(tokens, lexicon) for tokens in token_lists]
    classes = Counter(
        classify_sentiment(s, config.theta_pos, config.theta_neg) for s in scores
    )

    emotion_hits = Counter()
    for tokens in token_lists:
        for token in tokens:
            for emotion in lexicon.emotions.get(token, ()):
                emotion_hits[emotion] += 1
    total_hits = sum(emotion_hits.values())
    if total_hits:
        emotion_distribution = {
            e: emotion_hits[e] / total_hits * 100.0 for e in PLUTCHIK_EMOTIONS
        }
    else:
        emotion_distribution = {e: 0.0 for e in PLUTCHIK_EMOTIONS}

    keywords = top_keywords(
        token_lists, lexicon, config.keyword_limit, config.min_keyword_length
    )

    return AnalysisReport(
        corpus_size=n,
        sentiment_distribution={
            cls: classes[cls] / n * 100.0 for cls in SENTIMENT_CLASSES
        },
        score_histogram=_histogram(scores, SCORE_EDGES),
        length_histogram=_histogram(
            (len(c.text) for c in comments), config.length_edges
        ),
        wordcount_histogram=_histogram(
            (len(tokens) for tokens in token_lists), config.wordcount_edges
        ),
        emotion_distribution=emotion_distribution,
        no_emotion_hits=total_hits == 0,
        keywords=tuple(keywords),
        summary=tuple(summarize(comments, keywords, config.summary_sentences)),
    )
