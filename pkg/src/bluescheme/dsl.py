"""Text format for presentations.

    blueprint gr24 {
        gens x12 x13 x14 x23 x24 x34 : deg 1;
        rel x12*x34 + x14*x23 == x13*x24;
    }

Generators come in whitespace-separated groups, each optionally followed by
``: deg k``; either every group carries a degree or none does.  Relation sides
are ``+``-separated products of ``name`` or ``name^k`` factors; ``1`` is the
empty product and ``0`` the empty sum.  ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BlueprintError, DSLParseError, UnknownGeneratorError
from .monomial import FormalSum, Monomial, Relation
from .presentation import BlueprintPresentation, quotient

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_/]*)|(?P<int>\d+)"
    r"|(?P<op>==|[{};:+*^])"
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    toks = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                toks.append(Token(kind, chunk, line, col))
            col += len(chunk)
        pos = m.end()
    toks.append(Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str, pres: BlueprintPresentation | None = None):
        self.toks = tokenize(text)
        self.i = 0
        self.pres = pres

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise DSLParseError(msg, tok.line, tok.col)

    def take(self, kind=None, text=None) -> Token:
        tok = self.tok
        if kind is not None and tok.kind != kind or text is not None and tok.text != text:
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            self.fail(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def at(self, text) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def blueprint(self) -> BlueprintPresentation:
        self.take("name", "blueprint")
        name = self.take("name").text
        self.take("op", "{")
        groups = []
        rel_toks = []
        while not self.at("}"):
            head = self.take("name")
            if head.text == "gens":
                groups.append(self.gens(head))
            elif head.text == "rel":
                start = self.i
                while not self.at(";"):
                    if self.tok.kind == "eof":
                        self.fail("unterminated relation")
                    self.i += 1
                rel_toks.append((start, self.i))
                self.take("op", ";")
            else:
                self.fail(f"expected 'gens' or 'rel', got {head.text!r}", head)
        self.take("op", "}")
        self.take("eof")

        names = [n for g in groups for n in g[0]]
        seen = set()
        for g in groups:
            for n, tok in zip(g[0], g[2]):
                if n in seen:
                    self.fail(f"duplicate generator {n!r}", tok)
                seen.add(n)
        graded = [g[1] is not None for g in groups]
        if any(graded) and not all(graded):
            bad = next(g for g in groups if g[1] is None)
            self.fail("either every generator group has a degree or none does", bad[2][0])
        degrees = tuple(g[1] for g in groups for _ in g[0]) if groups and all(graded) else None
        self.pres = BlueprintPresentation(tuple(names), degrees, (), name=name)
        for start, stop in rel_toks:
            self.i = start
            first = self.tok
            rel = self.relation()
            if self.i != stop:
                self.fail("trailing input in relation")
            try:
                self.pres = quotient(self.pres, [rel])
            except BlueprintError as exc:
                self.fail(str(exc), first)
        return self.pres

    def gens(self, head):
        names, toks = [], []
        while self.tok.kind == "name":
            toks.append(self.tok)
            names.append(self.take("name").text)
        if not names:
            self.fail("'gens' needs at least one generator name")
        deg = None
        if self.at(":"):
            self.take("op", ":")
            self.take("name", "deg")
            deg = int(self.take("int").text)
        self.take("op", ";")
        return names, deg, toks

    def relation(self) -> Relation:
        lhs = self.sum()
        self.take("op", "==")
        rhs = self.sum()
        return Relation(lhs, rhs)

    def sum(self) -> FormalSum:
        terms = [self.term()]
        while self.at("+"):
            self.take("op", "+")
            terms.append(self.term())
        return FormalSum(tuple(terms))

    def term(self) -> Monomial:
        m = self.factor()
        while self.at("*"):
            self.take("op", "*")
            m = m * self.factor()
        return m

    def factor(self) -> Monomial:
        tok = self.tok
        if tok.kind == "int":
            self.take()
            if tok.text == "0":
                return Monomial.zero()
            if tok.text == "1":
                return Monomial.unit()
            self.fail("only 0 and 1 are allowed as constants over F1", tok)
        name = self.take("name").text
        try:
            idx = self.pres.index(name)
        except UnknownGeneratorError:
            self.fail(f"unknown generator {name!r}", tok)
        power = 1
        if self.at("^"):
            self.take("op", "^")
            power = int(self.take("int").text)
        return Monomial.var(idx, power) if power else Monomial.unit()


def parse_presentation(text: str) -> BlueprintPresentation:
    return _Parser(text).blueprint()


def _parse_with(text: str, pres: BlueprintPresentation, what: str):
    p = _Parser(text, pres)
    out = getattr(p, what)()
    p.take("eof")
    return out


def parse_monomial(text: str, pres: BlueprintPresentation) -> Monomial:
    return _parse_with(text, pres, "term")


def parse_sum(text: str, pres: BlueprintPresentation) -> FormalSum:
    return _parse_with(text, pres, "sum")


def parse_relation(text: str, pres: BlueprintPresentation) -> Relation:
    return _parse_with(text, pres, "relation")


def to_dsl(pres: BlueprintPresentation, name: str | None = None) -> str:
    """Render a presentation; ``parse_presentation(to_dsl(p))`` gives ``p`` back."""
    name = name or pres.name or "B"
    lines = [f"blueprint {name} {{"]
    if pres.generators:
        if pres.degrees is None:
            lines.append(f"    gens {' '.join(pres.generators)};")
        else:
            # consecutive generators of equal degree share a group
            start = 0
            for i in range(1, pres.ngens + 1):
                if i == pres.ngens or pres.degrees[i] != pres.degrees[start]:
                    group = " ".join(pres.generators[start:i])
                    lines.append(f"    gens {group} : deg {pres.degrees[start]};")
                    start = i
    for r in pres.relations:
        lines.append(f"    rel {r.format(pres.generators)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
