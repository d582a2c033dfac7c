"""The q-graded model: based graded spaces with a braiding weighted by q.

Every atom is interpreted as a space with a chosen ordered basis, each basis
vector carrying an integer degree. Sums concatenate bases; products take the
lexicographic product of bases (left factor outermost) with degrees added.
The braiding sends ``x (x) y`` to ``q^(deg x * deg y) * (y (x) x)``, which is
symmetric only when ``q = 1`` or the degrees vanish.

Associativity and unit isomorphisms are identity matrices under these basis
orderings, so the interesting content lives in the two commutativities, in
``delta`` and in ``eps``.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .expr import (
    AlphaPlus, AlphaTimes, Atom, Comp, Delta, Epsilon, GammaPlus, GammaTimes,
    Id, Inv, LambdaPlus, LambdaTimes, Morph, Obj, One, Prod, ProdM, RhoPlus,
    RhoTimes, Sum, SumM, Zero, typecheck,
)
from .laurent import ONE as POLY_ONE
from .laurent import ZERO as POLY_ZERO
from .laurent import LaurentPoly
from .matrix import InternalShapeError, PolyMatrix, matrix_equal  # noqa: F401

GradedBasis = tuple[int, ...]
Assignment = Mapping[str, Sequence[int]]


class UnassignedAtom(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"atom {self.name!r} has no assigned basis"


def interpret_object(o: Obj, assignment: Assignment) -> GradedBasis:
    """Degrees of the chosen basis of ``o``, in basis order."""
    if isinstance(o, Zero):
        return ()
    if isinstance(o, One):
        return (0,)
    if isinstance(o, Atom):
        try:
            return tuple(assignment[o.name])
        except KeyError:
            raise UnassignedAtom(o.name) from None
    if isinstance(o, Sum):
        return interpret_object(o.left, assignment) + interpret_object(o.right, assignment)
    if isinstance(o, Prod):
        left = interpret_object(o.left, assignment)
        right = interpret_object(o.right, assignment)
        return tuple(a + b for a in left for b in right)
    raise TypeError(f"not an object term: {o!r}")


def projection(x1: GradedBasis, x2: GradedBasis, index: int) -> PolyMatrix:
    """``p_index : X1 + X2 -> X_index`` as a block matrix."""
    n1, n2 = len(x1), len(x2)
    if index == 1:
        return PolyMatrix.from_rows(
            [[POLY_ONE if j == i else POLY_ZERO for j in range(n1 + n2)] for i in range(n1)],
            cols=n1 + n2,
        )
    if index == 2:
        return PolyMatrix.from_rows(
            [[POLY_ONE if j == n1 + i else POLY_ZERO for j in range(n1 + n2)] for i in range(n2)],
            cols=n1 + n2,
        )
    raise ValueError("index must be 1 or 2")


def injection(x1: GradedBasis, x2: GradedBasis, index: int) -> PolyMatrix:
    """``u_index : X_index -> X1 + X2``; the transpose of the matching projection."""
    p = projection(x1, x2, index)
    return PolyMatrix.from_rows(
        [[p[j, i] for j in range(p.rows)] for i in range(p.cols)], cols=p.rows
    )


class GradedModel:
    """Interprets morphism terms as exact matrices.

    ``specialize_q=1`` evaluates every braiding weight at ``q = 1``, which
    collapses the model to a symmetric one. Each instance keeps its own memo
    table keyed by (term, assignment); do not share an instance across threads.
    """

    def __init__(self, specialize_q: int | None = None, memoize: bool = True):
        if specialize_q not in (None, 1):
            raise ValueError("only q := 1 specialization is supported")
        self.specialize_q = specialize_q
        self._memo: dict | None = {} if memoize else None

    @property
    def symmetric(self) -> bool:
        return self.specialize_q == 1

    def weight(self, exponent: int) -> LaurentPoly:
        if self.specialize_q == 1 or exponent == 0:
            return POLY_ONE
        return LaurentPoly.monomial(exponent)

    def interpret_object(self, o: Obj, assignment: Assignment) -> GradedBasis:
        return interpret_object(o, assignment)

    # -- primitive matrices ------------------------------------------------

    def gamma_plus(self, a: GradedBasis, b: GradedBasis) -> PolyMatrix:
        na, nb = len(a), len(b)
        return PolyMatrix.monomial_map(
            na + nb, na + nb, lambda j: (nb + j, POLY_ONE) if j < na else (j - na, POLY_ONE)
        )

    def gamma_times(self, a: GradedBasis, b: GradedBasis) -> PolyMatrix:
        na, nb = len(a), len(b)

        def image(j: int):
            i, k = divmod(j, nb)
            return k * na + i, self.weight(a[i] * b[k])

        return PolyMatrix.monomial_map(na * nb, na * nb, image)

    def delta(self, a: GradedBasis, b: GradedBasis, c: GradedBasis) -> PolyMatrix:
        na, nb, nc = len(a), len(b), len(c)
        width = nb + nc

        def image(j: int):
            i, k = divmod(j, width)
            if k < nb:
                return i * nb + k, POLY_ONE
            return na * nb + i * nc + (k - nb), POLY_ONE

        return PolyMatrix.monomial_map(na * width, na * width, image)

    def epsilon(self, a: GradedBasis) -> PolyMatrix:
        # A*0 has an empty basis; the only map to 0 is the empty matrix.
        return PolyMatrix.zeros(0, len(a) * 0)

    # -- words ---------------------------------------------------------------

    def interpret_morphism(self, m: Morph, assignment: Assignment) -> PolyMatrix:
        typecheck(m)
        key = tuple(sorted((k, tuple(v)) for k, v in assignment.items()))
        return self._eval(m, assignment, key)

    def _eval(self, m: Morph, asg: Assignment, asg_key) -> PolyMatrix:
        if self._memo is None:
            return self._eval_node(m, asg, asg_key)
        hit = self._memo.get((m, asg_key))
        if hit is None:
            hit = self._memo[(m, asg_key)] = self._eval_node(m, asg, asg_key)
        return hit

    def _eval_node(self, m: Morph, asg: Assignment, key) -> PolyMatrix:
        ob = lambda o: interpret_object(o, asg)  # noqa: E731
        ev = lambda t: self._eval(t, asg, key)  # noqa: E731
        if isinstance(m, Comp):
            return ev(m.then) @ ev(m.first)
        if isinstance(m, SumM):
            return ev(m.f).direct_sum(ev(m.g))
        if isinstance(m, ProdM):
            return ev(m.f).kron(ev(m.g))
        if isinstance(m, Inv):
            return ev(m.m).inverse()
        if isinstance(m, Id):
            return PolyMatrix.identity(len(ob(m.A)))
        if isinstance(m, (AlphaPlus, AlphaTimes)):
            return PolyMatrix.identity(len(ob(m.dom)))
        if isinstance(m, (LambdaPlus, RhoPlus, LambdaTimes, RhoTimes)):
            return PolyMatrix.identity(len(ob(m.A)))
        if isinstance(m, GammaPlus):
            return self.gamma_plus(ob(m.A), ob(m.B))
        if isinstance(m, GammaTimes):
            return self.gamma_times(ob(m.A), ob(m.B))
        if isinstance(m, Delta):
            return self.delta(ob(m.A), ob(m.B), ob(m.C))
        if isinstance(m, Epsilon):
            return self.epsilon(ob(m.A))
        raise InternalShapeError(f"no interpretation for {m!r}")


def degree_preserving(src: GradedBasis, dst: GradedBasis, entry) -> PolyMatrix:
    """Matrix ``src -> dst`` whose (i, j) entry is ``entry(i, j)`` when degrees agree, else 0."""
    return PolyMatrix.from_rows(
        [
            [entry(i, j) if dst[i] == src[j] else POLY_ZERO for j in range(len(src))]
            for i in range(len(dst))
        ],
        cols=len(src),
    )
