"""Recursive-descent parser for the ERD notation.

Grammar (whitespace-insensitive between tokens, ``#`` line comments):

    document     = { entity_decl | rel_decl } ;
    entity_decl  = "entity" ident "{" { attr_decl } "}" ;
    attr_decl    = ident ":" type { modifier } ;
    type         = "INTEGER" | "DECIMAL" | "DATE" | "BOOLEAN" | "TEXT"
                 | "VARCHAR" "(" integer ")" ;
    modifier     = "pk" | "notnull" | "ref" "(" ident "." ident ")" ;
    rel_decl     = "rel" ident card "--" card ident ;
    card         = "1" | "0..1" | "1..*" | "0..*" ;

Errors are collected as diagnostics with line/column; parsing recovers at
declaration boundaries and gives up after ``MAX_ERRORS`` errors.
"""

from __future__ import annotations

from ..diagnostics import Diagnostic, error, warning
from . import lexer
from .lexer import Token
from .model import SIMPLE_TYPES, Attribute, Entity, ErdModel, Relationship

MAX_ERRORS = 50
MODIFIERS = ("pk", "notnull", "ref")
TOP_KEYWORDS = ("entity", "rel")


class _Parser:
    def __init__(self, source: str):
        self.tokens = lexer.lex(source)
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []
        self.error_count = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if self.pos < len(self.tokens) - 1:
            self.pos += 1
        return tok

    def at(self, type_: str, value: str | None = None, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.type == type_ and (value is None or tok.value == value)

    def done(self) -> bool:
        return self.at(lexer.EOF) or self.error_count >= MAX_ERRORS

    # -- diagnostics -------------------------------------------------------

    def err(self, kind: str, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        self.diagnostics.append(error(kind, message, tok.line, tok.col))
        self.error_count += 1

    def warn(self, kind: str, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        self.diagnostics.append(warning(kind, message, tok.line, tok.col))

    def describe(self, tok: Token) -> str:
        if tok.type == lexer.EOF:
            return "end of input"
        return f"{tok.value!r}"

    def expect(self, type_: str, what: str, kind: str = "syntax") -> Token | None:
        if self.at(type_):
            return self.advance()
        self.err(kind, f"expected {what}, found {self.describe(self.peek())}")
        return None

    def sync_top(self):
        """Skip to the next plausible top-level declaration."""
        while not self.at(lexer.EOF):
            if self.at(lexer.IDENT) and self.peek().value in TOP_KEYWORDS:
                return
            self.advance()

    # -- grammar -----------------------------------------------------------

    def parse_document(self) -> ErdModel:
        entities: list[Entity] = []
        relationships: list[Relationship] = []
        while not self.done():
            if self.at(lexer.IDENT, "entity"):
                entity = self.parse_entity()
                if entity is not None:
                    entities.append(entity)
            elif self.at(lexer.IDENT, "rel"):
                rel = self.parse_rel()
                if rel is not None:
                    relationships.append(rel)
            else:
                tok = self.peek()
                if tok.type == lexer.BAD:
                    self.err("bad_character", f"unexpected character {tok.value!r}", tok)
                elif tok.type == lexer.IDENT:
                    self.err(
                        "unknown_keyword",
                        f"unknown keyword {tok.value!r}, expected 'entity' or 'rel'",
                        tok,
                    )
                else:
                    self.err(
                        "syntax",
                        f"expected 'entity' or 'rel', found {self.describe(tok)}",
                        tok,
                    )
                self.advance()
                self.sync_top()
        if not entities and self.error_count == 0:
            self.warn("no_entities", "no entities declared")
        return ErdModel(tuple(entities), tuple(relationships))

    def parse_entity(self) -> Entity | None:
        keyword = self.advance()  # 'entity'
        name = self.expect(lexer.IDENT, "entity name")
        if name is None:
            self.sync_top()
            return None
        if self.expect(lexer.LBRACE, "'{'", kind="unbalanced_brace") is None:
            self.sync_top()
            return None

        attributes: list[Attribute] = []
        while not self.at(lexer.RBRACE) and not self.done():
            if self.at(lexer.IDENT) and self.peek().value in TOP_KEYWORDS:
                # A new declaration before '}' means the brace never closed.
                self.err(
                    "unbalanced_brace",
                    f"expected '}}' to close entity {name.value!r}",
                )
                return Entity(name.value, tuple(attributes), keyword.line, keyword.col)
            attr = self.parse_attribute()
            if attr is not None:
                attributes.append(attr)
            else:
                self.sync_attr()
        if self.at(lexer.RBRACE):
            self.advance()
        elif self.error_count < MAX_ERRORS:
            self.err("unbalanced_brace", f"expected '}}' to close entity {name.value!r}")
        return Entity(name.value, tuple(attributes), keyword.line, keyword.col)

    def sync_attr(self):
        """Recover inside an entity body: stop at '}' or a plausible attribute."""
        while not self.at(lexer.EOF):
            if self.at(lexer.RBRACE):
                return
            if self.at(lexer.IDENT) and (
                self.peek().value in TOP_KEYWORDS or self.at(lexer.COLON, offset=1)
            ):
                return
            self.advance()

    def parse_attribute(self) -> Attribute | None:
        name = self.expect(lexer.IDENT, "attribute name")
        if name is None:
            return None
        if self.expect(lexer.COLON, "':' after attribute name") is None:
            return None
        sql_type = self.parse_type()
        if sql_type is None:
            return None

        is_pk = not_null = False
        ref: tuple[str, str] | None = None
        while self.at(lexer.IDENT) and self.peek().value in MODIFIERS:
            # 'pk: INTEGER' is the next attribute, not a modifier.
            if self.at(lexer.COLON, offset=1):
                break
            mod = self.advance()
            if mod.value == "pk":
                if is_pk:
                    self.warn("duplicate_modifier", "modifier 'pk' repeated", mod)
                is_pk = True
            elif mod.value == "notnull":
                if not_null:
                    self.warn("duplicate_modifier", "modifier 'notnull' repeated", mod)
                not_null = True
            else:
                parsed = self.parse_ref_target()
                if parsed is None:
                    return None
                if ref is not None:
                    self.warn("duplicate_modifier", "modifier 'ref' repeated", mod)
                else:
                    ref = parsed
        return Attribute(
            name.value, sql_type, is_pk, not_null, ref, name.line, name.col
        )

    def parse_type(self) -> str | None:
        tok = self.peek()
        if tok.type != lexer.IDENT:
            self.err("syntax", f"expected a type, found {self.describe(tok)}", tok)
            return None
        if tok.value in SIMPLE_TYPES:
            self.advance()
            return tok.value
        if tok.value == "VARCHAR":
            self.advance()
            if self.expect(lexer.LPAREN, "'(' after VARCHAR", kind="bad_varchar_arity") is None:
                return None
            length = self.peek()
            if length.type != lexer.INT:
                self.err(
                    "bad_varchar_arity",
                    f"expected VARCHAR length, found {self.describe(length)}",
                    length,
                )
                return None
            self.advance()
            n = int(length.value)
            if n < 1:
                self.err("bad_varchar_arity", "VARCHAR length must be >= 1", length)
                return None
            if self.expect(lexer.RPAREN, "')' after VARCHAR length", kind="bad_varchar_arity") is None:
                return None
            return f"VARCHAR({n})"
        self.err("unknown_type", f"unknown type {tok.value!r}", tok)
        return None

    def parse_ref_target(self) -> tuple[str, str] | None:
        if self.expect(lexer.LPAREN, "'(' after ref") is None:
            return None
        entity = self.expect(lexer.IDENT, "referenced entity name")
        if entity is None:
            return None
        if self.expect(lexer.DOT, "'.' between entity and attribute") is None:
            return None
        attribute = self.expect(lexer.IDENT, "referenced attribute name")
        if attribute is None:
            return None
        if self.expect(lexer.RPAREN, "')' after reference") is None:
            return None
        return (entity.value, attribute.value)

    def parse_rel(self) -> Relationship | None:
        keyword = self.advance()  # 'rel'
        left = self.expect(lexer.IDENT, "left entity name")
        if left is None:
            self.sync_top()
            return None
        left_card = self.parse_cardinality()
        if left_card is None:
            self.sync_top()
            return None
        if self.expect(lexer.DASHDASH, "'--' between cardinalities") is None:
            self.sync_top()
            return None
        right_card = self.parse_cardinality()
        if right_card is None:
            self.sync_top()
            return None
        right = self.expect(lexer.IDENT, "right entity name")
        if right is None:
            self.sync_top()
            return None
        return Relationship(
            left.value, left_card, right.value, right_card, keyword.line, keyword.col
        )

    def parse_cardinality(self) -> str | None:
        tok = self.peek()
        if tok.type != lexer.INT or tok.value not in ("0", "1"):
            self.err(
                "bad_cardinality",
                f"bad cardinality: expected 1, 0..1, 1..* or 0..*, found {self.describe(tok)}",
                tok,
            )
            return None
        self.advance()
        low = tok.value
        if not self.at(lexer.DOTDOT):
            if low == "1":
                return "1"
            self.err("bad_cardinality", "bad cardinality: '0' must be '0..1' or '0..*'", tok)
            return None
        self.advance()
        high = self.peek()
        if high.type == lexer.STAR:
            self.advance()
            return f"{low}..*"
        if high.type == lexer.INT and high.value == "1" and low == "0":
            self.advance()
            return "0..1"
        self.err(
            "bad_cardinality",
            f"bad cardinality: {low}..{self.describe(high)} is not 1, 0..1, 1..* or 0..*",
            high,
        )
        return None


def parse_erd(source: str) -> tuple[ErdModel, list[Diagnostic]]:
    """Parse ERD text; syntax problems come back as diagnostics, never raises."""
    parser = _Parser(source)
    model = parser.parse_document()
    if parser.error_count >= MAX_ERRORS:
        parser.diagnostics.append(
            warning("too_many_errors", f"parsing stopped after {MAX_ERRORS} errors")
        )
    return model, parser.diagnostics
