"""Group specification trees and the textual expression grammar.

Grammar accepted by ``parse_spec``::

    C(n)  D(2n)  S(n)  A(n)  E(p^3)  G375
    prod(X, Y)
    semi(N, H, action=<name>)
    file(<path>)

Whitespace is insignificant. Parse errors carry the offending position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidSpec, ParseError


class GroupSpec:
    """Base class for group-expression nodes."""

    def check(self) -> None:
        """Validate parameters; raise InvalidSpec on nonsense."""

    def text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def check(self) -> None:
        if self.n < 1:
            raise InvalidSpec(f"C({self.n}): order must be >= 1")

    def text(self) -> str:
        return f"C({self.n})"


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    order: int  # group order 2n

    def check(self) -> None:
        if self.order < 2 or self.order % 2:
            raise InvalidSpec(f"D({self.order}): order must be even and >= 2")

    def text(self) -> str:
        return f"D({self.order})"


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int

    def check(self) -> None:
        if self.n < 1:
            raise InvalidSpec(f"S({self.n}): degree must be >= 1")

    def text(self) -> str:
        return f"S({self.n})"


@dataclass(frozen=True)
class Alternating(GroupSpec):
    n: int

    def check(self) -> None:
        if self.n < 1:
            raise InvalidSpec(f"A({self.n}): degree must be >= 1")

    def text(self) -> str:
        return f"A({self.n})"


@dataclass(frozen=True)
class Extraspecial(GroupSpec):
    p: int

    def check(self) -> None:
        if self.p < 2:
            raise InvalidSpec(f"E({self.p}^3): p must be prime")

    def text(self) -> str:
        return f"E({self.p}^3)"


@dataclass(frozen=True)
class Group375(GroupSpec):
    def text(self) -> str:
        return "G375"


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    def check(self) -> None:
        self.left.check()
        self.right.check()

    def text(self) -> str:
        return f"prod({self.left.text()}, {self.right.text()})"


@dataclass(frozen=True)
class ActionSpec:
    """Per acting-group generator: images of the normal subgroup's generators."""

    generator_images: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SemidirectProduct(GroupSpec):
    normal: GroupSpec
    acting: GroupSpec
    action: str  # named built-in action

    def check(self) -> None:
        self.normal.check()
        self.acting.check()

    def text(self) -> str:
        return f"semi({self.normal.text()}, {self.acting.text()}, action={self.action})"


@dataclass(frozen=True)
class CayleyFile(GroupSpec):
    path: str

    def text(self) -> str:
        return f"file({self.path})"


_TOKEN_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*|\d+|[(),^=])")


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def peek(self) -> str | None:
        m = _TOKEN_RE.match(self.text, self.pos)
        return m.group(1) if m else None

    def next(self) -> str:
        m = _TOKEN_RE.match(self.text, self.pos)
        if not m:
            raise self.error("unexpected end of expression" if self.pos >= len(self.text.rstrip()) else f"unexpected character {self.text[self.pos]!r}")
        self.pos = m.end()
        return m.group(1)

    def expect(self, token: str) -> None:
        got = self.next()
        if got != token:
            raise self.error(f"expected {token!r}, got {got!r}")

    def integer(self) -> int:
        tok = self.next()
        if not tok.isdigit():
            raise self.error(f"expected an integer, got {tok!r}")
        return int(tok)

    def raw_until_paren(self) -> str:
        """Consume raw text (a file path) up to the next ')'."""
        end = self.text.find(")", self.pos)
        if end < 0:
            raise self.error("unterminated file(...) expression")
        raw = self.text[self.pos : end].strip()
        if not raw:
            raise self.error("empty path in file(...)")
        self.pos = end
        return raw

    def expr(self) -> GroupSpec:
        head = self.next()
        if head == "G375":
            return Group375()
        if head in ("C", "D", "S", "A"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return {"C": Cyclic, "D": Dihedral, "S": Symmetric, "A": Alternating}[head](n)
        if head == "E":
            self.expect("(")
            p = self.integer()
            self.expect("^")
            cube = self.integer()
            if cube != 3:
                raise self.error(f"only E(p^3) is supported, got exponent {cube}")
            self.expect(")")
            return Extraspecial(p)
        if head == "prod":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return DirectProduct(left, right)
        if head == "semi":
            self.expect("(")
            normal = self.expr()
            self.expect(",")
            acting = self.expr()
            self.expect(",")
            self.expect("action")
            self.expect("=")
            action = self.next()
            self.expect(")")
            return SemidirectProduct(normal, acting, action)
        if head == "file":
            self.expect("(")
            path = self.raw_until_paren()
            self.expect(")")
            return CayleyFile(path)
        raise self.error(f"unknown constructor {head!r}")


def parse_spec(text: str) -> GroupSpec:
    """Parse a textual group expression; raises ParseError with a position."""
    parser = _Parser(text)
    spec = parser.expr()
    trailing = parser.peek()
    if trailing is not None:
        raise parser.error(f"trailing input {trailing!r}")
    spec.check()
    return spec
