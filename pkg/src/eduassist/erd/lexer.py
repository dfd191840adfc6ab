"""Tokenizer for the textual ERD notation.

Whitespace separates tokens and is otherwise ignored; ``#`` starts a line
comment. Unknown characters become BAD tokens so the parser can report them
and keep going — arbitrary byte soup must never crash the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

IDENT = "ident"
INT = "int"
LBRACE = "{"
RBRACE = "}"
LPAREN = "("
RPAREN = ")"
COLON = ":"
DOT = "."
DOTDOT = ".."
STAR = "*"
DASHDASH = "--"
BAD = "bad"
EOF = "eof"

_PUNCT = {"{": LBRACE, "}": RBRACE, "(": LPAREN, ")": RPAREN, ":": COLON, "*": STAR}


@dataclass(frozen=True)
class Token:
    type: str
    value: str
    line: int  # 1-based
    col: int  # 1-based


def _is_ident_start(ch: str) -> bool:
    return ch == "_" or ("A" <= ch <= "Z") or ("a" <= ch <= "z")


def _is_ident_char(ch: str) -> bool:
    return _is_ident_start(ch) or ch.isdigit() and ch.isascii()


def lex(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(source)

    def emit(type_: str, value: str, start_col: int):
        tokens.append(Token(type_, value, line, start_col))

    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start_col = col
        if _is_ident_start(ch):
            j = i
            while j < n and _is_ident_char(source[j]):
                j += 1
            emit(IDENT, source[i:j], start_col)
            col += j - i
            i = j
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < n and source[j].isdigit() and source[j].isascii():
                j += 1
            emit(INT, source[i:j], start_col)
            col += j - i
            i = j
            continue
        if source.startswith("--", i):
            emit(DASHDASH, "--", start_col)
            i += 2
            col += 2
            continue
        if source.startswith("..", i):
            emit(DOTDOT, "..", start_col)
            i += 2
            col += 2
            continue
        if ch == ".":
            emit(DOT, ".", start_col)
            i += 1
            col += 1
            continue
        if ch in _PUNCT:
            emit(_PUNCT[ch], ch, start_col)
            i += 1
            col += 1
            continue
        emit(BAD, ch, start_col)
        i += 1
        col += 1

    tokens.append(Token(EOF, "", line, col))
    return tokens
