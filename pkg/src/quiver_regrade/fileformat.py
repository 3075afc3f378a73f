"""Text format for quiver presentations.

Two sections.  ``[quiver]`` declares vertices and arrows::

    [quiver]
    vertex v
    arrow x v v 1
    arrow y v v 2

``[relations]`` holds one expression per line, built from arrow names,
trivial paths ``e_<vertex>``, ``*`` for the path product, ``+``/``-`` between
terms, and an optional leading rational coefficient per term::

    [relations]
    x*y - y*x
    2/3*a*b + c*c

``#`` starts a comment anywhere on a line.  Identifiers start with a letter
or underscore and may contain letters, digits, underscores, and apostrophes,
so split-arrow names like ``y''`` parse as written.

Every diagnostic carries a 1-based line and column.  Parsing collects as
many diagnostics as it can before raising.  A relation whose terms mix
degrees is rejected; one whose terms mix endpoints at a single degree is
silently refined into its uniform components, which generate the same
two-sided ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ
from .paths import (
    IdealPresentation,
    Path,
    PathSum,
    UniformElement,
    multiply_paths,
    trivial_path,
    uniform_components,
)
from .quiver import Arrow, WeightedQuiver


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, col {self.col}: {self.message}"


class PresentationError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_NUMBER = re.compile(r"[0-9]+(/[0-9]+)?")


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | number | op
    text: str
    col: int


def _tokenize_expression(text: str, line: int) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            tokens.append(_Token("ident", m.group(), i + 1))
            i = m.end()
            continue
        m = _NUMBER.match(text, i)
        if m:
            tokens.append(_Token("number", m.group(), i + 1))
            i = m.end()
            continue
        if ch in "+-*":
            tokens.append(_Token("op", ch, i + 1))
            i += 1
            continue
        raise PresentationError([Diagnostic(line, i + 1, f"unexpected character {ch!r}")])
    return tokens


def _parse_atom(tok: _Token, q: WeightedQuiver, line: int) -> Path:
    name = tok.text
    if name in q.arrow_map:
        a = q.arrow_map[name]
        return Path(a.source, a.target, a.degree, (name,))
    if name.startswith("e_") and q.has_vertex(name[2:]):
        return trivial_path(name[2:])
    raise PresentationError(
        [Diagnostic(line, tok.col, f"unknown arrow or trivial path {name!r}")]
    )


def _parse_expression(text: str, line: int, q: WeightedQuiver) -> PathSum:
    tokens = _tokenize_expression(text, line)
    if not tokens:
        raise PresentationError([Diagnostic(line, 1, "empty expression")])
    pos = 0

    def peek() -> _Token | None:
        return tokens[pos] if pos < len(tokens) else None

    def fail(col: int, message: str):
        raise PresentationError([Diagnostic(line, col, message)])

    terms: list[tuple[Path, Fraction, int]] = []  # (path, signed coeff, start col)
    sign = Fraction(1)
    first = True
    while True:
        tok = peek()
        if tok is None:
            if first:
                fail(1, "empty expression")
            break
        if not first:
            if tok.kind != "op" or tok.text not in "+-":
                fail(tok.col, f"expected '+' or '-', got {tok.text!r}")
            sign = Fraction(1) if tok.text == "+" else Fraction(-1)
            pos += 1
            tok = peek()
            if tok is None:
                fail(len(text), "dangling operator at end of expression")
        elif tok.kind == "op" and tok.text == "-":
            sign = Fraction(-1)
            pos += 1
            tok = peek()
            if tok is None:
                fail(len(text), "dangling operator at end of expression")
        first = False
        start_col = tok.col
        coeff = sign
        if tok.kind == "number":
            coeff = sign * Fraction(tok.text)
            pos += 1
            tok = peek()
            if tok is None or tok.kind != "op" or tok.text != "*":
                col = tok.col if tok is not None else len(text)
                fail(col, "a coefficient must be followed by '*' and a path")
            pos += 1
            tok = peek()
            if tok is None:
                fail(len(text), "dangling '*' at end of expression")
        if tok.kind != "ident":
            fail(tok.col, f"expected an arrow or trivial path, got {tok.text!r}")
        path = _parse_atom(tok, q, line)
        pos += 1
        while True:
            nxt = peek()
            if nxt is None or nxt.kind != "op" or nxt.text != "*":
                break
            pos += 1
            nxt = peek()
            if nxt is None:
                fail(len(text), "dangling '*' at end of expression")
            if nxt.kind != "ident":
                fail(nxt.col, f"expected an arrow or trivial path, got {nxt.text!r}")
            factor = _parse_atom(nxt, q, line)
            product = multiply_paths(path, factor)
            if product is None:
                fail(
                    nxt.col,
                    f"paths do not compose: previous factor ends at "
                    f"{path.target!r}, {nxt.text!r} starts at {factor.source!r}",
                )
            path = product
            pos += 1
        terms.append((path, coeff, start_col))

    degree = terms[0][0].degree
    for path, _, col in terms[1:]:
        if path.degree != degree:
            fail(
                col,
                f"mixed degrees in one relation: this term has degree "
                f"{path.degree}, the first has degree {degree}",
            )
    total = PathSum.make(QQ, [(p, c) for p, c, _ in terms])
    if total.is_zero():
        fail(terms[0][2], "relation is identically zero")
    return total


def parse_presentation(text: str) -> tuple[WeightedQuiver, IdealPresentation]:
    """Parse a presentation file; raises :class:`PresentationError` on any
    problem, with as many positioned diagnostics as could be collected."""
    diagnostics: list[Diagnostic] = []
    vertices: list[tuple[str, int]] = []  # (name, line)
    arrow_decls: list[tuple[Arrow, int]] = []
    relation_lines: list[tuple[str, int]] = []
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line == "[quiver]":
                section = "quiver"
            elif line == "[relations]":
                section = "relations"
            else:
                diagnostics.append(Diagnostic(lineno, 1, f"unknown section {line!r}"))
                section = None
            continue
        if section is None:
            diagnostics.append(
                Diagnostic(lineno, 1, "content before any section header")
            )
            continue
        if section == "relations":
            relation_lines.append((line, lineno))
            continue
        fields = line.split()
        if fields[0] == "vertex":
            if len(fields) != 2:
                diagnostics.append(
                    Diagnostic(lineno, 1, "expected: vertex NAME")
                )
                continue
            if not _IDENT.fullmatch(fields[1]):
                diagnostics.append(
                    Diagnostic(lineno, 1, f"invalid vertex name {fields[1]!r}")
                )
                continue
            vertices.append((fields[1], lineno))
        elif fields[0] == "arrow":
            if len(fields) != 5:
                diagnostics.append(
                    Diagnostic(lineno, 1, "expected: arrow NAME SOURCE TARGET DEGREE")
                )
                continue
            name, src, tgt, deg_text = fields[1:]
            if not _IDENT.fullmatch(name):
                diagnostics.append(
                    Diagnostic(lineno, 1, f"invalid arrow name {name!r}")
                )
                continue
            try:
                degree = int(deg_text)
            except ValueError:
                diagnostics.append(
                    Diagnostic(lineno, 1, f"degree must be an integer, got {deg_text!r}")
                )
                continue
            if degree < 1:
                diagnostics.append(
                    Diagnostic(lineno, 1, f"degree must be positive, got {degree}")
                )
                continue
            arrow_decls.append((Arrow(name, src, tgt, degree), lineno))
        else:
            diagnostics.append(
                Diagnostic(lineno, 1, f"unknown declaration {fields[0]!r}")
            )

    vertex_names = set()
    for name, lineno in vertices:
        if name in vertex_names:
            diagnostics.append(Diagnostic(lineno, 1, f"duplicate vertex {name!r}"))
        vertex_names.add(name)
    arrow_names = set()
    for a, lineno in arrow_decls:
        if a.name in arrow_names:
            diagnostics.append(Diagnostic(lineno, 1, f"duplicate arrow {a.name!r}"))
        if a.name in vertex_names:
            diagnostics.append(
                Diagnostic(lineno, 1, f"arrow {a.name!r} collides with a vertex name")
            )
        arrow_names.add(a.name)
        for which, endpoint in (("source", a.source), ("target", a.target)):
            if endpoint not in vertex_names:
                diagnostics.append(
                    Diagnostic(
                        lineno, 1, f"arrow {a.name!r}: undeclared {which} {endpoint!r}"
                    )
                )
    if diagnostics:
        raise PresentationError(diagnostics)

    q = WeightedQuiver.build(
        [name for name, _ in vertices], [a for a, _ in arrow_decls]
    )
    generators: list[UniformElement] = []
    for line, lineno in relation_lines:
        try:
            total = _parse_expression(line, lineno, q)
        except PresentationError as exc:
            diagnostics.extend(exc.diagnostics)
            continue
        generators.extend(uniform_components(total))
    if diagnostics:
        raise PresentationError(diagnostics)
    return q, IdealPresentation.of(generators)


def render_representation(rep) -> str:
    """Diagnostic text for a graded representation: a dimension table per
    vertex and one block per (arrow, degree), scalars rendered exactly.

    One-way; meant for counterexample dumps and debugging, not re-parsing.
    """
    f = rep.field
    lines = [f"[representation] window {rep.window} field {f.spec}"]
    for (v, d) in sorted(rep.dims):
        lines.append(f"dim {v} {d} {rep.dims[(v, d)]}")
    for (a, d) in sorted(rep.mats):
        m = rep.mats[(a, d)]
        lines.append(f"mat {a} {d} {m.rows}x{m.cols}")
        for row in m.entries:
            lines.append("  " + " ".join(f.format(x) for x in row))
    return "\n".join(lines) + "\n"


def serialize_presentation(q: WeightedQuiver, ideal: IdealPresentation) -> str:
    """Canonical text: sorted declarations, generators in presentation order.

    Parsing the output reproduces the input presentation exactly.
    """
    lines = ["[quiver]"]
    for v in sorted(q.vertices):
        lines.append(f"vertex {v}")
    for a in sorted(q.arrows, key=lambda a: a.name):
        lines.append(f"arrow {a.name} {a.source} {a.target} {a.degree}")
    if len(ideal):
        lines.append("")
        lines.append("[relations]")
        for gen in ideal:
            lines.append(str(gen.sum))
    return "\n".join(lines) + "\n"
