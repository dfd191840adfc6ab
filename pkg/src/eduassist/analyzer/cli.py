"""eval-analyze: run the feedback analyzer over a comments file."""

from __future__ import annotations

import argparse
import sys

from .ingest import CSV, PLAIN, AnalyzerError, ingest_comments
from .lexicon import LexiconError, default_lexicon, load_lexicon
from .metrics import analyze
from .report import JSON, TEXT, render_report


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="eval-analyze",
        description="Analyze a course-evaluation comment file and print the report.",
    )
    ap.add_argument("input", help="comments file (plain text or CSV)")
    ap.add_argument("--format", choices=(PLAIN, CSV), default=PLAIN)
    ap.add_argument("--lexicon-dir", help="directory with valence.tsv, emotions.tsv, stopwords.txt")
    ap.add_argument("--out", help="also write the JSON report to this path")
    args = ap.parse_args(argv)

    try:
        with open(args.input, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        print(f"eval-analyze: {exc}", file=sys.stderr)
        return 2

    try:
        lexicon = load_lexicon(args.lexicon_dir) if args.lexicon_dir else default_lexicon()
        comments = ingest_comments(raw, args.format)
        report = analyze(comments, lexicon)
    except (AnalyzerError, LexiconError) as exc:
        print(f"eval-analyze: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(render_report(report, TEXT).decode("utf-8"))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(render_report(report, JSON))
    return 0


if __name__ == "__main__":
    sys.exit(main())
