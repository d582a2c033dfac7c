"""Formal objects and structural morphisms, with domain/codomain typing.

Objects are terms over atoms, ``0``, ``1``, ``+`` (the symmetric sum) and
``*`` (the braided product). Equality of objects is purely structural:
``(A+B)+C`` and ``A+(B+C)`` are different objects.

Morphisms are words in the primitive structural isomorphisms, closed under
inverse, left-to-right composition and the two bifunctors. Composition is
written ``Comp(first, then)``: first ``first``, then ``then``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


# -- objects -----------------------------------------------------------------


class Obj:
    """Base class of object terms. ``X + Y`` builds a sum, ``X * Y`` a product."""

    __slots__ = ()

    def __add__(self, other: Obj) -> Sum:
        return Sum(self, other)

    def __mul__(self, other: Obj) -> Prod:
        return Prod(self, other)

    def __str__(self) -> str:
        return show_object(self)


@dataclass(frozen=True, repr=False)
class Zero(Obj):
    def __repr__(self):
        return "Zero()"


@dataclass(frozen=True, repr=False)
class One(Obj):
    def __repr__(self):
        return "One()"


@dataclass(frozen=True)
class Atom(Obj):
    name: str


@dataclass(frozen=True)
class Sum(Obj):
    left: Obj
    right: Obj


@dataclass(frozen=True)
class Prod(Obj):
    left: Obj
    right: Obj


ZERO = Zero()
ONE = One()

ObjectExpr = Union[Zero, One, Atom, Sum, Prod]

_PREC = {Sum: 1, Prod: 2}


def show_object(o: Obj) -> str:
    """Render in source syntax: ``*`` binds tighter than ``+``, both left-associative."""
    if isinstance(o, Zero):
        return "0"
    if isinstance(o, One):
        return "1"
    if isinstance(o, Atom):
        return o.name
    prec = _PREC[type(o)]
    op = "+" if isinstance(o, Sum) else "*"

    def wrap(child: Obj, strict: bool) -> str:
        p = _PREC.get(type(child), 3)
        s = show_object(child)
        return f"({s})" if p < prec or (strict and p == prec) else s

    return f"{wrap(o.left, False)}{op}{wrap(o.right, True)}"


def object_atoms(o: Obj) -> set[str]:
    if isinstance(o, Atom):
        return {o.name}
    if isinstance(o, (Sum, Prod)):
        return object_atoms(o.left) | object_atoms(o.right)
    return set()


# -- morphisms ---------------------------------------------------------------


class Morph:
    """Base class of morphism terms."""

    __slots__ = ()

    def __str__(self) -> str:
        return show_morphism(self)

    @property
    def dom(self) -> Obj:
        return dom(self)

    @property
    def cod(self) -> Obj:
        return cod(self)


@dataclass(frozen=True)
class Id(Morph):
    A: Obj


@dataclass(frozen=True)
class AlphaPlus(Morph):
    A: Obj
    B: Obj
    C: Obj


@dataclass(frozen=True)
class LambdaPlus(Morph):
    A: Obj


@dataclass(frozen=True)
class RhoPlus(Morph):
    A: Obj


@dataclass(frozen=True)
class GammaPlus(Morph):
    A: Obj
    B: Obj


@dataclass(frozen=True)
class AlphaTimes(Morph):
    A: Obj
    B: Obj
    C: Obj


@dataclass(frozen=True)
class LambdaTimes(Morph):
    A: Obj


@dataclass(frozen=True)
class RhoTimes(Morph):
    A: Obj


@dataclass(frozen=True)
class GammaTimes(Morph):
    A: Obj
    B: Obj


@dataclass(frozen=True)
class Delta(Morph):
    A: Obj
    B: Obj
    C: Obj


@dataclass(frozen=True)
class Epsilon(Morph):
    A: Obj


@dataclass(frozen=True)
class Inv(Morph):
    m: Morph


@dataclass(frozen=True)
class Comp(Morph):
    first: Morph
    then: Morph


@dataclass(frozen=True)
class SumM(Morph):
    f: Morph
    g: Morph


@dataclass(frozen=True)
class ProdM(Morph):
    f: Morph
    g: Morph


PRIMITIVES = (
    AlphaPlus, LambdaPlus, RhoPlus, GammaPlus,
    AlphaTimes, LambdaTimes, RhoTimes, GammaTimes,
    Delta, Epsilon,
)

MorphExpr = Union[
    Id, AlphaPlus, LambdaPlus, RhoPlus, GammaPlus, AlphaTimes, LambdaTimes,
    RhoTimes, GammaTimes, Delta, Epsilon, Inv, Comp, SumM, ProdM,
]


class MorphTypeError(TypeError):
    """A composite whose inner boundaries do not match.

    ``path`` locates the offending ``Comp`` node from the root, e.g.
    ``('then', 'f')``; ``expected`` is the codomain of the first factor and
    ``found`` the domain of the second.
    """

    def __init__(self, path: tuple[str, ...], expected: Obj, found: Obj):
        self.path = path
        self.expected = expected
        self.found = found
        where = "/".join(path) or "<root>"
        super().__init__(
            f"type error at {where}: codomain {show_object(expected)} "
            f"does not match domain {show_object(found)}"
        )


def _primitive_bounds(m: Morph) -> tuple[Obj, Obj]:
    if isinstance(m, Id):
        return m.A, m.A
    if isinstance(m, AlphaPlus):
        return Sum(Sum(m.A, m.B), m.C), Sum(m.A, Sum(m.B, m.C))
    if isinstance(m, LambdaPlus):
        return Sum(ZERO, m.A), m.A
    if isinstance(m, RhoPlus):
        return Sum(m.A, ZERO), m.A
    if isinstance(m, GammaPlus):
        return Sum(m.A, m.B), Sum(m.B, m.A)
    if isinstance(m, AlphaTimes):
        return Prod(Prod(m.A, m.B), m.C), Prod(m.A, Prod(m.B, m.C))
    if isinstance(m, LambdaTimes):
        return Prod(ONE, m.A), m.A
    if isinstance(m, RhoTimes):
        return Prod(m.A, ONE), m.A
    if isinstance(m, GammaTimes):
        return Prod(m.A, m.B), Prod(m.B, m.A)
    if isinstance(m, Delta):
        return Prod(m.A, Sum(m.B, m.C)), Sum(Prod(m.A, m.B), Prod(m.A, m.C))
    if isinstance(m, Epsilon):
        return Prod(m.A, ZERO), ZERO
    raise TypeError(f"not a morphism term: {m!r}")


def _bounds(m: Morph, path: tuple[str, ...]) -> tuple[Obj, Obj]:
    cached = getattr(m, "_cached_bounds", None)
    if cached is not None:
        return cached
    if isinstance(m, Inv):
        d, c = _bounds(m.m, path + ("m",))
        result = (c, d)
    elif isinstance(m, Comp):
        d1, c1 = _bounds(m.first, path + ("first",))
        d2, c2 = _bounds(m.then, path + ("then",))
        if c1 != d2:
            raise MorphTypeError(path, c1, d2)
        result = (d1, c2)
    elif isinstance(m, SumM):
        d1, c1 = _bounds(m.f, path + ("f",))
        d2, c2 = _bounds(m.g, path + ("g",))
        result = (Sum(d1, d2), Sum(c1, c2))
    elif isinstance(m, ProdM):
        d1, c1 = _bounds(m.f, path + ("f",))
        d2, c2 = _bounds(m.g, path + ("g",))
        result = (Prod(d1, d2), Prod(c1, c2))
    else:
        result = _primitive_bounds(m)
    object.__setattr__(m, "_cached_bounds", result)
    return result


def typecheck(m: Morph) -> tuple[Obj, Obj]:
    """Return ``(dom(m), cod(m))``; raises MorphTypeError on an ill-bounded Comp."""
    return _bounds(m, ())


def dom(m: Morph) -> Obj:
    return _bounds(m, ())[0]


def cod(m: Morph) -> Obj:
    return _bounds(m, ())[1]


def is_well_typed(m: Morph) -> bool:
    try:
        _bounds(m, ())
    except MorphTypeError:
        return False
    return True


def compose(f: Morph, g: Morph) -> Comp:
    """``f`` then ``g``; checks that ``cod(f) == dom(g)`` and does no rewriting."""
    c, d = cod(f), dom(g)
    if c != d:
        raise MorphTypeError((), c, d)
    return Comp(f, g)


def compose_all(*ms: Morph) -> Morph:
    """Right-nested composite ``m0 ; (m1 ; (... ; mk))``."""
    if not ms:
        raise ValueError("compose_all needs at least one morphism")
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(m, out)
    return out


def subterms(m: Morph) -> Iterator[Morph]:
    yield m
    if isinstance(m, Inv):
        yield from subterms(m.m)
    elif isinstance(m, Comp):
        yield from subterms(m.first)
        yield from subterms(m.then)
    elif isinstance(m, (SumM, ProdM)):
        yield from subterms(m.f)
        yield from subterms(m.g)


def object_args(m: Morph) -> tuple[Obj, ...]:
    """Object subscripts of a primitive or identity node."""
    if isinstance(m, (Inv, Comp, SumM, ProdM)):
        return ()
    return tuple(getattr(m, f) for f in ("A", "B", "C") if hasattr(m, f))


def morphism_atoms(m: Morph) -> set[str]:
    out: set[str] = set()
    for t in subterms(m):
        for o in object_args(t):
            out |= object_atoms(o)
    return out


# -- derived morphisms ---------------------------------------------------------


def beta(X: Obj, Y: Obj) -> Morph:
    """The double braiding ``gamma_{X,Y} ; gamma_{Y,X}`` on ``X*Y``."""
    return compose(GammaTimes(X, Y), GammaTimes(Y, X))


def delta_sharp(A: Obj, B: Obj, C: Obj) -> Morph:
    """Right distributivity ``(A+B)*C -> A*C + B*C`` built from the left one."""
    return compose_all(
        GammaTimes(Sum(A, B), C),
        Delta(C, A, B),
        Inv(SumM(GammaTimes(A, C), GammaTimes(B, C))),
    )


def delta_sharp_split(A: Obj, B: Obj, C: Obj) -> Morph:
    """``delta_sharp`` with the inverse pushed inside the sum."""
    return compose_all(
        GammaTimes(Sum(A, B), C),
        Delta(C, A, B),
        SumM(Inv(GammaTimes(A, C)), Inv(GammaTimes(B, C))),
    )


def delta_sharp_alt(A: Obj, B: Obj, C: Obj) -> Morph:
    """``delta_sharp`` using inverse braidings with swapped subscripts."""
    return compose_all(
        Inv(GammaTimes(C, Sum(A, B))),
        Delta(C, A, B),
        SumM(GammaTimes(C, A), GammaTimes(C, B)),
    )


def lambda_star(A: Obj) -> Morph:
    """``0*A -> 0``, defined as ``gamma_{0,A} ; eps_A``."""
    return compose(GammaTimes(ZERO, A), Epsilon(A))


def lambda_star_alt(A: Obj) -> Morph:
    return compose(Inv(GammaTimes(A, ZERO)), Epsilon(A))


def unit_right_forms(X: Obj) -> tuple[Morph, Morph, Morph]:
    """Three candidate isomorphisms ``X*1 -> X`` that coherence says coincide."""
    return (
        RhoTimes(X),
        compose(GammaTimes(X, ONE), LambdaTimes(X)),
        compose(Inv(GammaTimes(ONE, X)), LambdaTimes(X)),
    )


# -- printing ------------------------------------------------------------------

_NAMES = {
    AlphaPlus: "aP", LambdaPlus: "lP", RhoPlus: "rP", GammaPlus: "gP",
    AlphaTimes: "aT", LambdaTimes: "lT", RhoTimes: "rT", GammaTimes: "gT",
    Delta: "delta", Epsilon: "eps", Id: "id",
}

# ';' loosest, then '(+)', then '(x)'
_MPREC = {Comp: 1, SumM: 2, ProdM: 3}
_MOPS = {Comp: " ; ", SumM: " (+) ", ProdM: " (x) "}


def show_morphism(m: Morph) -> str:
    """Render in source syntax; all binary operators are left-associative."""
    if isinstance(m, Inv):
        return f"inv({show_morphism(m.m)})"
    if type(m) in _NAMES:
        args = ",".join(show_object(o) for o in object_args(m))
        return f"{_NAMES[type(m)]}({args})"
    prec = _MPREC[type(m)]
    left, right = (m.first, m.then) if isinstance(m, Comp) else (m.f, m.g)

    def wrap(child: Morph, strict: bool) -> str:
        p = _MPREC.get(type(child), 4)
        s = show_morphism(child)
        return f"({s})" if p < prec or (strict and p == prec) else s

    return f"{wrap(left, False)}{_MOPS[type(m)]}{wrap(right, True)}"
