"""Text syntax for objects, morphisms, diagram files, assignments and braid words.

Objects::

    obj  := prod ('+' prod)*
    prod := base ('*' base)*
    base := '0' | '1' | IDENT | '(' obj ')'

Morphisms (``;`` loosest, then ``(+)``, then ``(x)``; all left-associative)::

    morph := msum (';' msum)*
    msum  := mprod ('(+)' mprod)*
    mprod := mbase ('(x)' mbase)*
    mbase := NAME '(' obj (',' obj)* ')' | 'inv' '(' morph ')' | '(' morph ')'

``beta``, ``dsharp`` and ``lstar`` are accepted as macros for the derived
morphisms of the same meaning.
"""

from __future__ import annotations

import json
import re
from typing import Callable

from .braid import BraidWord
from .diagram import Diagram, DiagramError, Edge, make_diagram
from .expr import (
    ONE, ZERO, AlphaPlus, AlphaTimes, Atom, Comp, Delta, Epsilon, GammaPlus, GammaTimes, Id, Inv,
    LambdaPlus, LambdaTimes, Morph, Obj, Prod, ProdM, RhoPlus, RhoTimes, Sum, SumM, beta, delta_sharp,
    lambda_star,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message, self.line, self.column = message, line, column
        super().__init__(f"line {line}, column {column}: {message}")


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

_PRIMS: dict[str, tuple[int, Callable[..., Morph]]] = {
    "id": (1, Id),
    "aP": (3, AlphaPlus), "lP": (1, LambdaPlus), "rP": (1, RhoPlus), "gP": (2, GammaPlus),
    "aT": (3, AlphaTimes), "lT": (1, LambdaTimes), "rT": (1, RhoTimes), "gT": (2, GammaTimes),
    "delta": (3, Delta), "eps": (1, Epsilon),
    "beta": (2, beta), "dsharp": (3, delta_sharp), "lstar": (1, lambda_star),
}


class _Parser:
    def __init__(self, text: str, line: int = 1, column: int = 1):
        self.text = text
        self.i = 0
        self.line0, self.col0 = line, column

    # -- scanning ----------------------------------------------------------

    def where(self, i: int | None = None) -> tuple[int, int]:
        i = self.i if i is None else i
        before = self.text[:i]
        nl = before.count("\n")
        if nl:
            return self.line0 + nl, i - before.rfind("\n")
        return self.line0, self.col0 + i

    def error(self, message: str, i: int | None = None) -> ParseError:
        return ParseError(message, *self.where(i))

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def accept(self, lit: str) -> bool:
        self.skip()
        if self.text.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def expect(self, lit: str) -> None:
        if not self.accept(lit):
            raise self.error(f"expected {lit!r}, found {self.found()}")

    def found(self) -> str:
        self.skip()
        return repr(self.text[self.i]) if self.i < len(self.text) else "end of input"

    def ident(self) -> str | None:
        self.skip()
        m = _IDENT.match(self.text, self.i)
        if not m:
            return None
        self.i = m.end()
        return m.group()

    def end(self) -> None:
        self.skip()
        if self.i != len(self.text):
            raise self.error(f"unexpected {self.found()}")

    # -- objects -------------------------------------------------------------

    def obj(self) -> Obj:
        o = self.prod()
        while self.accept("+"):
            o = Sum(o, self.prod())
        return o

    def prod(self) -> Obj:
        o = self.base()
        while self.accept("*"):
            o = Prod(o, self.base())
        return o

    def base(self) -> Obj:
        if self.accept("0"):
            return ZERO
        if self.accept("1"):
            return ONE
        if self.accept("("):
            o = self.obj()
            self.expect(")")
            return o
        name = self.ident()
        if name is None:
            raise self.error(f"expected an object, found {self.found()}")
        return Atom(name)

    # -- morphisms -----------------------------------------------------------

    def morph(self) -> Morph:
        m = self.msum()
        while self.accept(";"):
            m = Comp(m, self.msum())
        return m

    def msum(self) -> Morph:
        m = self.mprod()
        while self.accept("(+)"):
            m = SumM(m, self.mprod())
        return m

    def mprod(self) -> Morph:
        m = self.mbase()
        while self.accept("(x)"):
            m = ProdM(m, self.mbase())
        return m

    def mbase(self) -> Morph:
        self.skip()
        start = self.i
        if self.accept("("):
            m = self.morph()
            self.expect(")")
            return m
        name = self.ident()
        if name is None:
            raise self.error(f"expected a morphism, found {self.found()}")
        if name == "inv":
            self.expect("(")
            m = self.morph()
            self.expect(")")
            return Inv(m)
        if name not in _PRIMS:
            raise self.error(f"unknown morphism {name!r}", start)
        arity, ctor = _PRIMS[name]
        self.expect("(")
        args = [self.obj()]
        while self.accept(","):
            args.append(self.obj())
        self.expect(")")
        if len(args) != arity:
            raise self.error(f"{name} takes {arity} object argument(s), got {len(args)}", start)
        return ctor(*args)


def parse_object(text: str, line: int = 1, column: int = 1) -> Obj:
    p = _Parser(text, line, column)
    o = p.obj()
    p.end()
    return o


def parse_morphism(text: str, line: int = 1, column: int = 1) -> Morph:
    p = _Parser(text, line, column)
    m = p.morph()
    p.end()
    return m


# -- assignments -------------------------------------------------------------------


def parse_degrees(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in re.split(r"[,\s]+", text.strip()) if t)
    except ValueError:
        raise ParseError(f"bad degree list {text!r}") from None


def parse_atom_binding(text: str, line: int = 1) -> tuple[str, tuple[int, ...]]:
    name, sep, rest = text.partition("=")
    name = name.strip()
    if not sep or not _IDENT.fullmatch(name):
        raise ParseError(f"expected NAME=degrees, found {text.strip()!r}", line)
    try:
        return name, parse_degrees(rest)
    except ParseError as err:
        raise ParseError(err.message, line) from None


def parse_assignment(text: str) -> dict[str, tuple[int, ...]]:
    """JSON object of degree lists, or one ``NAME=d1,d2,...`` per line."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            raw = json.loads(stripped)
        except json.JSONDecodeError as err:
            raise ParseError(err.msg, err.lineno, err.colno) from None
        out = {}
        for k, v in raw.items():
            if not isinstance(v, list) or not all(isinstance(d, int) for d in v):
                raise ParseError(f"degrees for {k!r} must be a list of integers")
            out[k] = tuple(v)
        return out
    out = {}
    for n, raw_line in enumerate(text.splitlines(), 1):
        body = raw_line.split("#", 1)[0].strip()
        if body:
            k, v = parse_atom_binding(body, n)
            out[k] = v
    return out


# -- diagram files --------------------------------------------------------------------


def parse_diagram(text: str) -> Diagram:
    """Read a diagram file::

        diagram: Name
        vertices:
          0: A*(B+C)
          1: A*B+A*C
        edges:
          0 -> 1 : delta(A,B,C)
          1 -> 0 : inv(delta(A,B,C))

    Vertex indices are optional (``- obj`` or a bare object also work) and
    ``#`` starts a comment.
    """
    name = None
    section = None
    vertices: list[Obj] = []
    edges: list[tuple[Edge, int]] = []
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        key = stripped.lower()
        if key.startswith("diagram:"):
            name = stripped.split(":", 1)[1].strip() or "diagram"
            continue
        if key in ("vertices:", "edges:"):
            section = key[:-1]
            continue
        col = indent + 1
        if section == "vertices":
            m = re.match(r"(?:-\s*)?(?:(\d+)\s*:\s*)?", stripped)
            if m.group(1) is not None and int(m.group(1)) != len(vertices):
                raise ParseError(f"vertex {m.group(1)} listed out of order", n, col)
            vertices.append(parse_object(stripped[m.end():], n, col + m.end()))
        elif section == "edges":
            m = re.match(r"(\d+)\s*->\s*(\d+)\s*:", stripped)
            if not m:
                raise ParseError("expected 'i -> j : morphism'", n, col)
            label = parse_morphism(stripped[m.end():], n, col + m.end())
            edges.append((Edge(int(m.group(1)), int(m.group(2)), label), n))
        else:
            raise ParseError("expected 'diagram:', 'vertices:' or 'edges:'", n, col)
    if name is None:
        raise ParseError("missing 'diagram:' header")
    try:
        return make_diagram(name, vertices, [e for e, _ in edges])
    except DiagramError as err:
        k = getattr(err, "edge_index", None)
        line = edges[k][1] if k is not None else 1
        raise ParseError(str(err), line) from err


# -- braid words -------------------------------------------------------------------------

_GEN = re.compile(r"s(\d+)(\^-1|'|\^1)?")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """``s1 s2' s1^-1``; ``e`` or empty text is the trivial braid."""
    gens = []
    col = 1
    for tok in re.finditer(r"\S+", text):
        col = tok.start() + 1
        t = tok.group()
        if t == "e":
            continue
        m = _GEN.fullmatch(t)
        if not m or int(m.group(1)) == 0:
            raise ParseError(f"bad braid generator {t!r}", 1, col)
        i = int(m.group(1))
        gens.append(-i if m.group(2) in ("'", "^-1") else i)
    n = strands if strands is not None else max((abs(g) for g in gens), default=0) + 1
    try:
        return BraidWord(n, tuple(gens))
    except ValueError as err:
        raise ParseError(str(err), 1, col) from None


__all__ = [
    "ParseError", "parse_object", "parse_morphism", "parse_assignment", "parse_atom_binding",
    "parse_degrees", "parse_diagram", "parse_braid",
]
