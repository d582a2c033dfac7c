"""Brute-force evaluator that pushes single basis vectors through a word.

Basis vectors are nested tuples:

    atom    ('A', i)
    one     ('1',)
    sum     ('L', v) or ('R', v)
    product ('P', v, w)

Every structural map sends a basis vector to one basis vector times q^e, so a
word is evaluated by following each vector and adding exponents. Nothing here
uses the package's matrix code; only typing comes from the term language.
"""

from __future__ import annotations

from braidcoh.expr import (
    AlphaPlus, AlphaTimes, Atom, Comp, Delta, Epsilon, GammaPlus, GammaTimes, Id, Inv, LambdaPlus,
    LambdaTimes, One, Prod, ProdM, RhoPlus, RhoTimes, Sum, SumM, Zero, typecheck,
)


def basis(o, asg):
    if isinstance(o, Zero):
        return []
    if isinstance(o, One):
        return [("1",)]
    if isinstance(o, Atom):
        return [(o.name, i) for i in range(len(asg[o.name]))]
    if isinstance(o, Sum):
        return [("L", v) for v in basis(o.left, asg)] + [("R", v) for v in basis(o.right, asg)]
    if isinstance(o, Prod):
        return [("P", v, w) for v in basis(o.left, asg) for w in basis(o.right, asg)]
    raise TypeError(o)


def degree(v, asg):
    tag = v[0]
    if tag == "1":
        return 0
    if tag in ("L", "R"):
        return degree(v[1], asg)
    if tag == "P":
        return degree(v[1], asg) + degree(v[2], asg)
    return asg[tag][v[1]]


def push(m, v, asg):
    """Image of basis vector ``v`` under ``m`` as ``(vector, q_exponent)``."""
    if isinstance(m, Comp):
        w, e = push(m.first, v, asg)
        u, f = push(m.then, w, asg)
        return u, e + f
    if isinstance(m, SumM):
        side, x = v
        w, e = push(m.f if side == "L" else m.g, x, asg)
        return (side, w), e
    if isinstance(m, ProdM):
        _, a, b = v
        a2, e = push(m.f, a, asg)
        b2, f = push(m.g, b, asg)
        return ("P", a2, b2), e + f
    if isinstance(m, Inv):
        src = typecheck(m.m)[0]
        for u in basis(src, asg):
            w, e = push(m.m, u, asg)
            if w == v:
                return u, -e
        raise AssertionError("not invertible on this vector")
    if isinstance(m, Id):
        return v, 0
    if isinstance(m, AlphaPlus):
        if v[0] == "L":
            inner = v[1]
            return (("L", inner[1]) if inner[0] == "L" else ("R", ("L", inner[1]))), 0
        return ("R", ("R", v[1])), 0
    if isinstance(m, LambdaPlus):
        return v[1], 0
    if isinstance(m, RhoPlus):
        return v[1], 0
    if isinstance(m, GammaPlus):
        return ("R" if v[0] == "L" else "L", v[1]), 0
    if isinstance(m, AlphaTimes):
        _, ab, c = v
        return ("P", ab[1], ("P", ab[2], c)), 0
    if isinstance(m, LambdaTimes):
        return v[2], 0
    if isinstance(m, RhoTimes):
        return v[1], 0
    if isinstance(m, GammaTimes):
        _, a, b = v
        return ("P", b, a), degree(a, asg) * degree(b, asg)
    if isinstance(m, Delta):
        _, a, bc = v
        return (bc[0], ("P", a, bc[1])), 0
    if isinstance(m, Epsilon):
        raise AssertionError("A*0 has no basis vectors")
    raise TypeError(m)


def oracle_entries(m, asg, symmetric=False):
    """Sparse matrix ``{(row, col): q_exponent}`` with the package's index order."""
    d, c = typecheck(m)
    rows = {v: i for i, v in enumerate(basis(c, asg))}
    out = {}
    for j, v in enumerate(basis(d, asg)):
        w, e = push(m, v, asg)
        out[(rows[w], j)] = 0 if symmetric else e
    return len(rows), len(basis(d, asg)), out
