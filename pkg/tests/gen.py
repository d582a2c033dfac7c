"""Random objects, assignments and well-typed words for property tests."""

from __future__ import annotations

import random

from braidcoh.expr import (
    ONE, ZERO, AlphaPlus, AlphaTimes, Atom, Comp, Delta, Epsilon, GammaPlus, GammaTimes, Id, Inv,
    LambdaPlus, LambdaTimes, Prod, ProdM, RhoPlus, RhoTimes, Sum, SumM, Zero, One, cod,
)

ATOMS = ("A", "B", "C")


def random_assignment(rng: random.Random, atoms=ATOMS, max_dim=2, degrees=(0, 1, 2), min_dim=0):
    return {a: tuple(rng.choice(degrees) for _ in range(rng.randint(min_dim, max_dim))) for a in atoms}


def random_object(rng: random.Random, depth: int, atoms=ATOMS, units=True, sums=True):
    leaves = [Atom(a) for a in atoms]
    if units:
        leaves += [ZERO, ONE] if sums else [ONE]
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice(leaves)
    left = random_object(rng, depth - 1, atoms, units, sums)
    right = random_object(rng, depth - 1, atoms, units, sums)
    if sums and rng.random() < 0.5:
        return Sum(left, right)
    return Prod(left, right)


def _moves(X, rng, atoms, sums):
    """Single-step structural maps out of X, including inverse primitives."""
    out = [Id(X)]
    if isinstance(X, Sum):
        P, Q = X.left, X.right
        out.append(GammaPlus(P, Q))
        if isinstance(P, Sum):
            out.append(AlphaPlus(P.left, P.right, Q))
        if isinstance(Q, Sum):
            out.append(Inv(AlphaPlus(P, Q.left, Q.right)))
        if isinstance(P, Zero):
            out.append(LambdaPlus(Q))
        if isinstance(Q, Zero):
            out.append(RhoPlus(P))
        if isinstance(P, Prod) and isinstance(Q, Prod) and P.left == Q.left:
            out.append(Inv(Delta(P.left, P.right, Q.right)))
    if isinstance(X, Prod):
        P, Q = X.left, X.right
        out.append(GammaTimes(P, Q))
        out.append(Inv(GammaTimes(Q, P)))
        if isinstance(P, Prod):
            out.append(AlphaTimes(P.left, P.right, Q))
        if isinstance(Q, Prod):
            out.append(Inv(AlphaTimes(P, Q.left, Q.right)))
        if isinstance(P, One):
            out.append(LambdaTimes(Q))
        if isinstance(Q, One):
            out.append(RhoTimes(P))
        if isinstance(Q, Sum):
            out.append(Delta(P, Q.left, Q.right))
        if isinstance(Q, Zero):
            out.append(Epsilon(P))
    if sums and rng.random() < 0.2:
        out.append(Inv(RhoPlus(X)))
    if isinstance(X, Zero) and sums:
        out.append(Inv(Epsilon(Atom(rng.choice(atoms)))))
    return out


def random_word(rng: random.Random, X, depth: int, atoms=ATOMS, sums=True):
    """A well-typed word with domain X; ``depth`` bounds the term depth."""
    if depth <= 1:
        return rng.choice([m for m in _moves(X, rng, atoms, sums) if not isinstance(m, Inv)])
    r = rng.random()
    if r < 0.35:
        f = random_word(rng, X, depth - 1, atoms, sums)
        return Comp(f, random_word(rng, cod(f), depth - 1, atoms, sums))
    if r < 0.6 and isinstance(X, (Sum, Prod)):
        f = random_word(rng, X.left, depth - 1, atoms, sums)
        g = random_word(rng, X.right, depth - 1, atoms, sums)
        return SumM(f, g) if isinstance(X, Sum) else ProdM(f, g)
    if r < 0.7 and depth > 2:
        f = random_word(rng, X, depth - 2, atoms, sums)
        return Comp(f, Inv(f))
    return rng.choice(_moves(X, rng, atoms, sums))


def term_depth(m) -> int:
    kids = [getattr(m, k) for k in ("first", "then", "f", "g", "m") if hasattr(m, k)]
    return 1 + max((term_depth(k) for k in kids), default=0)


_CHILDREN = ("first", "then", "f", "g", "m")


def gamma_sites(m, path=()):
    """Paths to every ``GammaTimes`` node of a term."""
    if isinstance(m, GammaTimes):
        yield path
    for k in _CHILDREN:
        if hasattr(m, k):
            yield from gamma_sites(getattr(m, k), path + (k,))


def flip_gamma(m, site):
    """Replace the ``gT(X,Y)`` at ``site`` by ``inv(gT(Y,X))``."""
    if not site:
        return Inv(GammaTimes(m.B, m.A))
    k = site[0]
    kw = {c: getattr(m, c) for c in _CHILDREN if hasattr(m, c)}
    kw[k] = flip_gamma(kw[k], site[1:])
    return type(m)(**kw)
