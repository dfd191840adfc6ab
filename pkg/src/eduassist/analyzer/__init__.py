from ..textproc import split_sentences, tokenize
from .ingest import (
    AnalyzerError,
    Comment,
    DecodeError,
    EmptyCorpus,
    MissingCommentColumn,
    ingest_comments,
)
from .lexicon import (
    PLUTCHIK_EMOTIONS,
    Lexicon,
    LexiconError,
    default_lexicon,
    load_lexicon,
)
from .metrics import (
    AnalyzerConfig,
    analyze,
    classify_sentiment,
    sentiment_score,
    summarize,
    top_keywords,
)
from .report import AnalysisReport, parse_report, render_report, report_from_json_dict

__all__ = [
    "AnalysisReport",
    "AnalyzerConfig",
    "AnalyzerError",
    "Comment",
    "DecodeError",
    "EmptyCorpus",
    "Lexicon",
    "LexiconError",
    "MissingCommentColumn",
    "PLUTCHIK_EMOTIONS",
    "analyze",
    "classify_sentiment",
    "default_lexicon",
    "ingest_comments",
    "load_lexicon",
    "parse_report",
    "render_report",
    "report_from_json_dict",
    "sentiment_score",
    "split_sentences",
    "summarize",
    "tokenize",
    "top_keywords",
]
