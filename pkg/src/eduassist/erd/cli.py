"""erd2sql: compile an ERD file to SQL DDL, or just check it.

Exit codes: 0 clean, 1 warnings with --check, 2 errors.
"""

from __future__ import annotations

import argparse
import sys

from ..diagnostics import has_errors
from .emit import generate_sql
from .order import CyclicDependency
from .parser import parse_erd
from .validate import validate_erd

EXIT_OK = 0
EXIT_WARNINGS = 1
EXIT_ERRORS = 2


def _print_diagnostics(diagnostics, source_name: str):
    for diag in diagnostics:
        print(f"{source_name}:{diag}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="erd2sql", description="Compile a textual ERD into CREATE TABLE statements."
    )
    ap.add_argument("input", help="ERD source file")
    ap.add_argument("-o", "--output", help="write SQL here instead of stdout")
    ap.add_argument(
        "--check", action="store_true", help="parse and validate only, emit nothing"
    )
    args = ap.parse_args(argv)

    try:
        with open(args.input, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        print(f"erd2sql: {exc}", file=sys.stderr)
        return EXIT_ERRORS
    except UnicodeDecodeError:
        print(f"erd2sql: {args.input} is not valid UTF-8", file=sys.stderr)
        return EXIT_ERRORS

    model, diagnostics = parse_erd(source)
    if not has_errors(diagnostics):
        diagnostics = diagnostics + validate_erd(model)
    _print_diagnostics(diagnostics, args.input)
    if has_errors(diagnostics):
        return EXIT_ERRORS
    if args.check:
        return EXIT_WARNINGS if diagnostics else EXIT_OK

    try:
        script = generate_sql(model)
    except CyclicDependency as exc:
        print(f"erd2sql: {exc}", file=sys.stderr)
        return EXIT_ERRORS

    text = script.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
