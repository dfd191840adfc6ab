"""Deterministic retrieval over training pairs: TF-IDF vectors + cosine argmax.

Stands in for a fine-tuned completion model so the whole chat path can run
offline and reproducibly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ..textproc import tokenize
from .dataset import FinetunePair

FALLBACK_TEXT = "I don't have course material matching that question."
DEFAULT_SIMILARITY_THRESHOLD = 0.1

# Sparse vector: term dimension -> weight. Kept as plain dicts; vocabularies
# here are tiny compared to anything numpy would pay off for.
SparseVector = dict[int, float]


@dataclass(frozen=True)
class Completion:
    text: str
    similarity: float | None = None
    source_line: int | None = None


@dataclass(frozen=True)
class PromptIndex:
    vocabulary: dict[str, int]
    idf: tuple[float, ...]  # by dimension
    vectors: tuple[SparseVector, ...]  # L2-normalized, parallel to pairs
    pairs: tuple[FinetunePair, ...]


def _l2_normalize(vec: SparseVector) -> SparseVector:
    norm = math.sqrt(sum(w * w for w in vec.values()))
    if norm == 0.0:
        return {}
    return {dim: w / norm for dim, w in vec.items()}


def _vectorize(tokens: list[str], vocabulary: dict[str, int], idf) -> SparseVector:
    counts = Counter(tokens)
    raw = {}
    for term, tf in counts.items():
        dim = vocabulary.get(term)
        if dim is None:
            continue
        weight = tf * idf[dim]
        if weight != 0.0:
            raw[dim] = weight
    return _l2_normalize(raw)


def build_prompt_index(pairs: list[FinetunePair]) -> PromptIndex:
    """tf = raw count, idf = ln(N / df), vectors L2-normalized."""
    if not pairs:
        raise ValueError("pairs must be nonempty")
    token_lists = [tokenize(p.prompt) for p in pairs]
    vocabulary = {
        term: dim
        for dim, term in enumerate(sorted({t for toks in token_lists for t in toks}))
    }
    df = Counter()
    for toks in token_lists:
        df.update(set(toks))
    n = len(pairs)
    idf = tuple(math.log(n / df[term]) for term in sorted(vocabulary, key=vocabulary.get))
    vectors = tuple(_vectorize(toks, vocabulary, idf) for toks in token_lists)
    return PromptIndex(vocabulary, idf, vectors, tuple(pairs))


def cosine(a: SparseVector, b: SparseVector) -> float:
    """Dot product; exact cosine for normalized vectors, 0 for zero vectors."""
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b[dim] for dim, w in a.items() if dim in b)


def mock_complete(
    index: PromptIndex,
    question: str,
    threshold: float = DEFAULT_SIMILARITY_THRESHOLD,
) -> Completion:
    """Completion of the most similar stored prompt, or the fixed fallback.

    Zero-vector pairs never win; ties break toward the lowest source line.
    Pure: identical inputs always produce identical output.
    """
    if not question:
        raise ValueError("question must be nonempty")
    qvec = _vectorize(tokenize(question), index.vocabulary, index.idf)

    best: tuple[float, int] | None = None  # (similarity, pair position)
    for pos, vec in enumerate(index.vectors):
        if not vec:
            continue
        sim = cosine(qvec, vec)
        if best is None or sim > best[0] or (
            sim == best[0] and index.pairs[pos].line_no < index.pairs[best[1]].line_no
        ):
            best = (sim, pos)

    if best is None or best[0] < threshold:
        return Completion(FALLBACK_TEXT)
    pair = index.pairs[best[1]]
    return Completion(pair.completion, similarity=best[0], source_line=pair.line_no)
