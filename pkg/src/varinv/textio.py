"""Text front end: polynomial expressions, system files, and rendering.

Expression grammar (whitespace insignificant, ``*`` mandatory between
factors)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | base ('^' INT)?
    base   := NUMBER | IDENT | '(' expr ')'
    NUMBER := INT ('/' INT)?          # rational literal a or a/b with b > 0

Exponents are positive integer literals.  System files (``.ps``) hold one
``vars:`` header line followed by ``name = <polynomial>`` entries; ``#``
starts a comment.  Files are UTF-8 with LF line endings and writing is
canonical, so write(read(f)) reproduces a canonical file byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .polyring import (
    Polynomial,
    VarSet,
    canonical_key,
    format_polynomial,
    integer_primitive,
)

_IDENT_START = re.compile(r"[A-Za-z]")
_IDENT_BODY = re.compile(r"[A-Za-z0-9_]")

RENDER_STYLES = ("exact", "primitive")


@dataclass(frozen=True)
class SourceSpan:
    """1-based position of a token in the parsed text."""

    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(ValueError):
    """Syntax or name error, carrying the offending source position."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "ident", or the symbol itself
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        span = SourceSpan(line, col)
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], span))
            col += j - i
            i = j
            continue
        if _IDENT_START.match(ch):
            j = i
            while j < n and _IDENT_BODY.match(text[j]):
                j += 1
            tokens.append(_Token("ident", text[i:j], span))
            col += j - i
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, span))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", span)
    tokens.append(_Token("end", "", SourceSpan(line, col)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: VarSet):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.span)
        return self.advance()

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.span)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek().kind == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.factor()
        return self.base_with_power()

    def base_with_power(self) -> Polynomial:
        p = self.base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "num":
                raise ParseError("malformed exponent: expected a positive integer", tok.span)
            self.advance()
            e = int(tok.text)
            if e < 1:
                raise ParseError("malformed exponent: must be positive", tok.span)
            p = p ** e
        return p

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            numer = int(tok.text)
            if self.peek().kind == "/":
                self.advance()
                dtok = self.peek()
                if dtok.kind != "num":
                    raise ParseError("expected an integer denominator", dtok.span)
                self.advance()
                denom = int(dtok.text)
                if denom == 0:
                    raise ParseError("zero denominator", dtok.span)
                return Polynomial.constant(self.ring, Fraction(numer, denom))
            return Polynomial.constant(self.ring, numer)
        if tok.kind == "ident":
            self.advance()
            if tok.text not in self.ring:
                raise ParseError(f"unknown variable {tok.text!r}", tok.span)
            return Polynomial.variable(self.ring, tok.text)
        if tok.kind == "(":
            open_tok = self.advance()
            p = self.expr()
            if self.peek().kind != ")":
                raise ParseError("unbalanced parentheses", open_tok.span)
            self.advance()
            return p
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.span)


def parse_polynomial(text: str, ring: VarSet) -> Polynomial:
    """Parse an expression into a canonical polynomial over ``ring``."""
    return _Parser(text, ring).parse()


def render(p: Polynomial, style: str = "exact", order=None) -> str:
    """Render ``p`` deterministically, terms descending by the active order
    (default: degrevlex with declaration priority).

    ``exact`` prints the stored rational coefficients, so
    ``parse(render(p)) == p``.  ``primitive`` first clears denominators,
    divides by the content, and makes the leading coefficient positive.
    """
    if style not in RENDER_STYLES:
        raise ValueError(f"unknown render style {style!r}")
    key = canonical_key if order is None else order.key
    if style == "primitive":
        p = integer_primitive(p, key)
    return format_polynomial(p, key)


@dataclass(frozen=True)
class SystemFile:
    """A named list of polynomials over one declared variable set."""

    vars: VarSet
    entries: tuple[tuple[str, Polynomial], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((n, p) for n, p in self.entries))
        seen = set()
        for name, poly in self.entries:
            if name in seen:
                raise ValueError(f"duplicate entry name {name!r}")
            if name in self.vars:
                raise ValueError(f"entry name {name!r} clashes with a variable")
            if poly.ring != self.vars:
                raise ValueError(f"entry {name!r} lives over a different ring")
            seen.add(name)

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.entries)

    def get(self, name: str) -> Polynomial:
        for n, p in self.entries:
            if n == name:
                return p
        raise KeyError(f"no entry named {name!r}")


def parse_system(text: str) -> SystemFile:
    """Parse ``.ps`` content.  Errors carry the 1-based source line."""
    ring: VarSet | None = None
    entries: list[tuple[str, Polynomial]] = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            if not line.startswith("vars:"):
                raise ParseError("missing 'vars:' header", SourceSpan(lineno, 1))
            names = [s.strip() for s in line[len("vars:"):].split(",")]
            try:
                ring = VarSet(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), SourceSpan(lineno, 1)) from None
            continue
        if "=" not in line:
            raise ParseError("expected 'name = <polynomial>'", SourceSpan(lineno, 1))
        name, rhs = line.split("=", 1)
        name = name.strip()
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise ParseError(f"invalid entry name {name!r}", SourceSpan(lineno, 1))
        if any(name == n for n, _ in entries):
            raise ParseError(f"duplicate entry name {name!r}", SourceSpan(lineno, 1))
        if name in ring:
            raise ParseError(f"entry name {name!r} clashes with a variable", SourceSpan(lineno, 1))
        col_offset = raw.index("=") + 1
        try:
            poly = parse_polynomial(rhs, ring)
        except ParseError as exc:
            span = SourceSpan(lineno, col_offset + exc.span.column)
            raise ParseError(exc.message, span) from None
        entries.append((name, poly))
    if ring is None:
        raise ParseError("missing 'vars:' header", SourceSpan(1, 1))
    return SystemFile(ring, tuple(entries))


def render_system(system: SystemFile) -> str:
    lines = ["vars: " + ", ".join(system.vars.names)]
    for name, poly in system.entries:
        lines.append(f"{name} = {render(poly)}")
    return "\n".join(lines) + "\n"


def read_system(path: str | Path) -> SystemFile:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def write_system(system: SystemFile, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(render_system(system))
