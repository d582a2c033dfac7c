"""Registry of coherence diagrams, derived equalities and the braiding control.

Each builder returns its diagram as a cycle with vertices listed clockwise,
so edge ``k`` always joins vertex ``k`` and vertex ``k+1`` (mod n). Edges
marked ``# typed`` are ones where the endpoints pin down the label's
arguments or direction and the obvious guess would be wrong.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diagram import (
    CommuteReport, Diagram, Edge, Orientation, Witness, check_commutes, compare, is_vacuous,
    make_diagram, max_dimension,
)
from .expr import (
    ONE, ZERO, AlphaPlus as aP, AlphaTimes as aT, Atom, Comp, Delta as delta,
    Epsilon as eps, GammaPlus as gP, GammaTimes as gT, Id, Inv, LambdaPlus as lP,
    LambdaTimes as lT, Morph, Obj, ProdM, RhoPlus as rP, RhoTimes as rT, SumM, beta,
    delta_sharp, delta_sharp_alt, lambda_star, lambda_star_alt, unit_right_forms,
)
from .model import Assignment, GradedModel, interpret_object


class ArityError(ValueError):
    pass


def _p(f: Morph, g: Morph) -> SumM:
    return SumM(f, g)


def _t(f: Morph, g: Morph) -> ProdM:
    return ProdM(f, g)


# -- the additive and multiplicative structures on their own --------------------


def add_pentagon(A, B, C, D) -> Diagram:
    v = [((A + B) + C) + D, (A + B) + (C + D), A + (B + (C + D)), A + ((B + C) + D), (A + (B + C)) + D]
    e = [
        (0, 1, aP(A + B, C, D)),
        (1, 2, aP(A, B, C + D)),
        (3, 2, _p(Id(A), aP(B, C, D))),
        (4, 3, aP(A, B + C, D)),
        (0, 4, _p(aP(A, B, C), Id(D))),
    ]
    return make_diagram("AddPentagon", v, e)


def add_hexagon(A, B, C) -> Diagram:
    v = [(A + B) + C, A + (B + C), (B + C) + A, B + (C + A), B + (A + C), (B + A) + C]
    e = [
        (0, 1, aP(A, B, C)),
        (1, 2, gP(A, B + C)),
        (2, 3, aP(B, C, A)),
        (4, 3, _p(Id(B), gP(A, C))),
        (5, 4, aP(B, A, C)),
        (0, 5, _p(gP(A, B), Id(C))),
    ]
    return make_diagram("AddHexagon", v, e)


def add_unit_assoc(A, B) -> Diagram:
    v = [(A + ZERO) + B, A + (ZERO + B), A + B]
    e = [
        (0, 1, aP(A, ZERO, B)),
        (1, 2, _p(Id(A), lP(B))),
        (0, 2, _p(rP(A), Id(B))),
    ]
    return make_diagram("AddUnitAssoc", v, e)


def add_symmetry(A, B) -> Diagram:
    return make_diagram("AddSymmetry", [A + B, B + A], [(0, 1, gP(A, B)), (1, 0, gP(B, A))])


def mul_pentagon(A, B, C, D) -> Diagram:
    v = [((A * B) * C) * D, (A * B) * (C * D), A * (B * (C * D)), A * ((B * C) * D), (A * (B * C)) * D]
    e = [
        (0, 1, aT(A * B, C, D)),
        (1, 2, aT(A, B, C * D)),
        (3, 2, _t(Id(A), aT(B, C, D))),
        (4, 3, aT(A, B * C, D)),
        (0, 4, _t(aT(A, B, C), Id(D))),
    ]
    return make_diagram("MulPentagon", v, e)


def _hexagon_vertices(A, B, C) -> list[Obj]:
    return [(A * B) * C, A * (B * C), (B * C) * A, B * (C * A), B * (A * C), (B * A) * C]


def mul_hex_front(A, B, C) -> Diagram:
    e = [
        (0, 1, aT(A, B, C)),
        (1, 2, gT(A, B * C)),
        (2, 3, aT(B, C, A)),
        (4, 3, _t(Id(B), gT(A, C))),
        (5, 4, aT(B, A, C)),
        (0, 5, _t(gT(A, B), Id(C))),
    ]
    return make_diagram("MulHexFront", _hexagon_vertices(A, B, C), e)


def mul_hex_behind(A, B, C) -> Diagram:
    e = [
        (0, 1, aT(A, B, C)),
        (2, 1, gT(B * C, A)),
        (2, 3, aT(B, C, A)),
        (3, 4, _t(Id(B), gT(C, A))),
        (5, 4, aT(B, A, C)),
        (5, 0, _t(gT(B, A), Id(C))),
    ]
    return make_diagram("MulHexBehind", _hexagon_vertices(A, B, C), e)


def mul_unit_assoc(A, B) -> Diagram:
    v = [(A * ONE) * B, A * (ONE * B), A * B]
    e = [
        (0, 1, aT(A, ONE, B)),
        (1, 2, _t(Id(A), lT(B))),
        (0, 2, _t(rT(A), Id(B))),
    ]
    return make_diagram("MulUnitAssoc", v, e)


def neg_mul_symmetry(A, B) -> Diagram:
    """The symmetry square for the product; must fail in a braided model."""
    return make_diagram("NegMulSymmetry", [A * B, B * A], [(0, 1, gT(A, B)), (1, 0, gT(B, A))])


def _swap_gamma(m: Morph) -> Morph:
    if isinstance(m, gT):
        return Inv(gT(m.B, m.A))
    if isinstance(m, Inv):
        return Inv(_swap_gamma(m.m))
    if isinstance(m, Comp):
        return Comp(_swap_gamma(m.first), _swap_gamma(m.then))
    if isinstance(m, SumM):
        return SumM(_swap_gamma(m.f), _swap_gamma(m.g))
    if isinstance(m, ProdM):
        return ProdM(_swap_gamma(m.f), _swap_gamma(m.g))
    return m


def hexagon_inverted_variant(A, B, C) -> Diagram:
    """The front hexagon with every ``gT(X,Y)`` replaced by ``inv(gT(Y,X))``.

    Up to reading an inverted edge as a reversed one, this is the
    behind hexagon; see :func:`same_up_to_inversion`.
    """
    front = mul_hex_front(A, B, C)
    edges = [Edge(e.src, e.dst, _swap_gamma(e.label)) for e in front.edges]
    return make_diagram("MulHexFrontInverted", front.vertices, edges)


def _pull_inverse(m: Morph) -> tuple[bool, Morph]:
    if isinstance(m, Inv):
        flipped, core = _pull_inverse(m.m)
        return not flipped, core
    if isinstance(m, (SumM, ProdM)):
        ff, cf = _pull_inverse(m.f)
        fg, cg = _pull_inverse(m.g)
        if isinstance(cf, Id):
            ff = fg
        elif isinstance(cg, Id):
            fg = ff
        if ff == fg:
            return ff, type(m)(cf, cg)
    return False, m


def same_up_to_inversion(d1: Diagram, d2: Diagram) -> bool:
    """Equal vertex lists and equal edges once ``x --inv(f)--> y`` is read as ``y --f--> x``."""
    if d1.vertices != d2.vertices:
        return False

    def keys(d: Diagram):
        out = []
        for e in d.edges:
            flipped, core = _pull_inverse(e.label)
            out.append((e.dst, e.src, core) if flipped else (e.src, e.dst, core))
        return sorted(out, key=repr)

    return keys(d1) == keys(d2)


# -- distributivity ---------------------------------------------------------------


def right_dist2(A, B, C) -> Diagram:
    v = [A * (B + C), A * B + A * C, A * B + A * C, A * (B + C)]
    e = [
        (0, 1, delta(A, B, C)),
        (1, 2, _p(beta(A, B), beta(A, C))),
        (3, 2, delta(A, B, C)),
        (0, 3, beta(A, B + C)),
    ]
    return make_diagram("RightDist2", v, e)


def right_dist0(A) -> Diagram:
    return make_diagram("RightDist0", [A * ZERO], [(0, 0, beta(A, ZERO))])


def dist_add_comm(A, B, C) -> Diagram:
    v = [A * (B + C), A * B + A * C, A * C + A * B, A * (C + B)]
    e = [
        (0, 1, delta(A, B, C)),
        (2, 1, gP(A * C, A * B)),
        (3, 2, delta(A, C, B)),
        (0, 3, _t(Id(A), gP(B, C))),
    ]
    return make_diagram("DistAddComm", v, e)


def dist_add_assoc(A, B, C, D) -> Diagram:
    AB, AC, AD = A * B, A * C, A * D
    v = [
        A * ((B + C) + D), A * (B + (C + D)), AB + A * (C + D),
        AB + (AC + AD), (AB + AC) + AD, A * (B + C) + AD,
    ]
    e = [
        (0, 1, _t(Id(A), aP(B, C, D))),
        (1, 2, delta(A, B, C + D)),
        (2, 3, _p(Id(AB), delta(A, C, D))),
        (4, 3, aP(AB, AC, AD)),
        (5, 4, _p(delta(A, B, C), Id(AD))),
        (0, 5, delta(A, B + C, D)),
    ]
    return make_diagram("DistAddAssoc", v, e)


def dist_zero_neutral(A, B) -> Diagram:
    AB = A * B
    v = [A * (B + ZERO), AB + A * ZERO, AB + ZERO, AB]
    e = [
        (0, 1, delta(A, B, ZERO)),
        (1, 2, _p(Id(AB), eps(A))),
        (2, 3, rP(AB)),
        (0, 3, _t(Id(A), rP(B))),  # typed: a product with 1_A, not a sum
    ]
    return make_diagram("DistZeroNeutral", v, e)


def seq_dist22(A, B, C, D) -> Diagram:
    v = [
        (A * B) * (C + D), A * (B * (C + D)), A * (B * C + B * D),
        A * (B * C) + A * (B * D), (A * B) * C + (A * B) * D,
    ]
    e = [
        (0, 1, aT(A, B, C + D)),
        (1, 2, _t(Id(A), delta(B, C, D))),
        (2, 3, delta(A, B * C, B * D)),
        (4, 3, _p(aT(A, B, C), aT(A, B, D))),
        (0, 4, delta(A * B, C, D)),
    ]
    return make_diagram("SeqDist22", v, e)


def seq_dist20(A, B) -> Diagram:
    v = [(A * B) * ZERO, A * (B * ZERO), A * ZERO, ZERO]
    e = [
        (0, 1, aT(A, B, ZERO)),
        (1, 2, _t(Id(A), eps(B))),
        (2, 3, eps(A)),
        (0, 3, eps(A * B)),
    ]
    return make_diagram("SeqDist20", v, e)


def seq_dist02(A, B) -> Diagram:
    v = [ONE * (A + B), ONE * A + ONE * B, A + B]
    e = [
        (0, 1, delta(ONE, A, B)),
        (1, 2, _p(lT(A), lT(B))),
        (0, 2, lT(A + B)),
    ]
    return make_diagram("SeqDist02", v, e)


def seq_dist00() -> Diagram:
    return make_diagram("SeqDist00", [ONE * ZERO, ZERO], [(0, 1, eps(ONE)), (0, 1, lT(ZERO))])


def expand22(A, B, C, D) -> Diagram:
    AC, AD, BC, BD = A * C, A * D, B * C, B * D
    v = [
        (A + B) * (C + D),
        (A + B) * C + (A + B) * D,
        C * (A + B) + D * (A + B),
        (C * A + C * B) + (D * A + D * B),
        (AC + BC) + (AD + BD),
        ((AC + BC) + AD) + BD,
        (AC + (BC + AD)) + BD,
        (AC + (AD + BC)) + BD,
        ((AC + AD) + BC) + BD,
        (AC + AD) + (BC + BD),
        A * (C + D) + B * (C + D),
        (C + D) * A + (C + D) * B,
        (C + D) * (A + B),
    ]
    e = [
        (0, 1, delta(A + B, C, D)),
        (1, 2, _p(gT(A + B, C), gT(A + B, D))),
        (2, 3, _p(delta(C, A, B), delta(D, A, B))),
        (4, 3, _p(_p(gT(A, C), gT(B, C)), _p(gT(A, D), gT(B, D)))),
        (5, 4, aP(AC + BC, AD, BD)),
        (5, 6, _p(aP(AC, BC, AD), Id(BD))),
        (6, 7, _p(_p(Id(AC), gP(BC, AD)), Id(BD))),
        (8, 7, _p(aP(AC, AD, BC), Id(BD))),  # typed: points from vertex 8 to 7
        (8, 9, aP(AC + AD, BC, BD)),
        (10, 9, _p(delta(A, C, D), delta(B, C, D))),
        (10, 11, _p(gT(A, C + D), gT(B, C + D))),
        (12, 11, delta(C + D, A, B)),
        (0, 12, gT(A + B, C + D)),
    ]
    return make_diagram("Expand22", v, e)


def expand20(A, B) -> Diagram:
    v = [(A + B) * ZERO, ZERO * (A + B), ZERO * A + ZERO * B, A * ZERO + B * ZERO, ZERO + ZERO, ZERO]
    e = [
        (0, 1, gT(A + B, ZERO)),
        (1, 2, delta(ZERO, A, B)),
        (3, 2, _p(gT(A, ZERO), gT(B, ZERO))),
        (3, 4, _p(eps(A), eps(B))),
        (4, 5, lP(ZERO)),
        (0, 5, eps(A + B)),
    ]
    return make_diagram("Expand20", v, e)


def expand00() -> Diagram:
    return make_diagram("Expand00", [ZERO * ZERO], [(0, 0, gT(ZERO, ZERO))])


# -- chains of intermediate diagrams between distributivity conditions ----------------


def joyal_street(A, B, C) -> Diagram:
    v = [(A * B) * C, (B * A) * C, C * (B * A), (C * B) * A, A * (C * B), A * (B * C)]
    e = [
        (0, 1, _t(gT(A, B), Id(C))),
        (1, 2, gT(B * A, C)),
        (3, 2, aT(C, B, A)),
        (4, 3, gT(A, C * B)),
        (5, 4, _t(Id(A), gT(B, C))),
        (0, 5, aT(A, B, C)),
    ]
    return make_diagram("JoyalStreet", v, e)


def lap_vii(A, B, C, D) -> Diagram:
    BA, CB, DB = B * A, C * B, D * B
    v = [
        BA * (C + D), BA * C + BA * D, C * BA + D * BA, CB * A + DB * A,
        A * CB + A * DB, A * (CB + DB), (CB + DB) * A, (B * C + B * D) * A,
        (B * (C + D)) * A, ((C + D) * B) * A, (C + D) * BA,
    ]
    e = [
        (0, 1, delta(BA, C, D)),
        (1, 2, _p(gT(BA, C), gT(BA, D))),
        (3, 2, _p(aT(C, B, A), aT(D, B, A))),
        (4, 3, _p(gT(A, CB), gT(A, DB))),
        (5, 4, delta(A, CB, DB)),
        (5, 6, gT(A, CB + DB)),
        (7, 6, _t(_p(gT(B, C), gT(B, D)), Id(A))),
        (8, 7, _t(delta(B, C, D), Id(A))),
        (8, 9, _t(gT(B, C + D), Id(A))),
        (9, 10, aT(C + D, B, A)),
        (0, 10, gT(BA, C + D)),  # typed: braids BA past C+D as one block
    ]
    return make_diagram("LapVII", v, e)


def vii_step1(A, B, C, D) -> Diagram:
    BA, AB, CB, DB = B * A, A * B, C * B, D * B
    v = [
        BA * (C + D), BA * C + BA * D, AB * C + AB * D, A * (B * C) + A * (B * D),
        A * CB + A * DB, A * (CB + DB), A * (B * C + B * D), A * (B * (C + D)),
        A * ((C + D) * B), ((C + D) * B) * A, (C + D) * BA,
    ]
    e = [
        (0, 1, delta(BA, C, D)),
        (2, 1, _p(_t(gT(A, B), Id(C)), _t(gT(A, B), Id(D)))),
        (2, 3, _p(aT(A, B, C), aT(A, B, D))),
        (3, 4, _p(_t(Id(A), gT(B, C)), _t(Id(A), gT(B, D)))),
        (5, 4, delta(A, CB, DB)),
        (6, 5, _t(Id(A), _p(gT(B, C), gT(B, D)))),
        (7, 6, _t(Id(A), delta(B, C, D))),
        (7, 8, _t(Id(A), gT(B, C + D))),
        (8, 9, gT(A, (C + D) * B)),
        (9, 10, aT(C + D, B, A)),
        (0, 10, gT(BA, C + D)),  # typed: braids BA past C+D as one block
    ]
    return make_diagram("VIIstep1", v, e)


def vii_step2(A, B, C, D) -> Diagram:
    BA, AB = B * A, A * B
    v = [
        BA * (C + D), BA * C + BA * D, AB * C + AB * D, AB * (C + D),
        A * (B * (C + D)), A * ((C + D) * B), ((C + D) * B) * A, (C + D) * BA,
    ]
    e = [
        (0, 1, delta(BA, C, D)),
        (2, 1, _p(_t(gT(A, B), Id(C)), _t(gT(A, B), Id(D)))),
        (3, 2, delta(AB, C, D)),
        (3, 4, aT(A, B, C + D)),
        (4, 5, _t(Id(A), gT(B, C + D))),
        (5, 6, gT(A, (C + D) * B)),
        (6, 7, aT(C + D, B, A)),
        (0, 7, gT(BA, C + D)),  # typed: braids BA past C+D as one block
    ]
    return make_diagram("VIIstep2", v, e)


def vii_step3(A, B, C, D) -> Diagram:
    BA, AB = B * A, A * B
    v = [BA * (C + D), AB * (C + D), A * (B * (C + D)), A * ((C + D) * B), ((C + D) * B) * A, (C + D) * BA]
    e = [
        (1, 0, _t(gT(A, B), Id(C + D))),
        (1, 2, aT(A, B, C + D)),
        (2, 3, _t(Id(A), gT(B, C + D))),
        (3, 4, gT(A, (C + D) * B)),
        (4, 5, aT(C + D, B, A)),
        (0, 5, gT(BA, C + D)),  # typed: braids BA past C+D as one block
    ]
    return make_diagram("VIIstep3", v, e)


def lap_viii(A, B, C, D) -> Diagram:
    AC, AD = A * C, A * D
    v = [
        A * (B * C + B * D), A * (C * B + D * B), A * (C * B) + A * (D * B),
        AC * B + AD * B, B * AC + B * AD, B * (AC + AD), (AC + AD) * B,
        (A * (C + D)) * B, A * ((C + D) * B), A * (B * (C + D)),
    ]
    e = [
        (0, 1, _t(Id(A), _p(gT(B, C), gT(B, D)))),
        (1, 2, delta(A, C * B, D * B)),
        (3, 2, _p(aT(A, C, B), aT(A, D, B))),
        (4, 3, _p(gT(B, AC), gT(B, AD))),
        (5, 4, delta(B, AC, AD)),
        (5, 6, gT(B, AC + AD)),  # typed: B crosses, not A
        (7, 6, _t(delta(A, C, D), Id(B))),
        (7, 8, aT(A, C + D, B)),
        (9, 8, _t(Id(A), gT(B, C + D))),
        (9, 0, _t(Id(A), delta(B, C, D))),
    ]
    return make_diagram("LapVIII", v, e)


def viii_step1(A, B, C, D) -> Diagram:
    AB, AC, AD = A * B, A * C, A * D
    v = [
        AB * C + AB * D, A * (B * C) + A * (B * D), A * (C * B) + A * (D * B),
        AC * B + AD * B, B * AC + B * AD, B * (AC + AD), (AC + AD) * B,
        (A * (C + D)) * B, A * ((C + D) * B), A * (B * (C + D)), AB * (C + D),
    ]
    e = [
        (0, 1, _p(aT(A, B, C), aT(A, B, D))),
        (1, 2, _p(_t(Id(A), gT(B, C)), _t(Id(A), gT(B, D)))),
        (3, 2, _p(aT(A, C, B), aT(A, D, B))),
        (4, 3, _p(gT(B, AC), gT(B, AD))),
        (5, 4, delta(B, AC, AD)),
        (5, 6, gT(B, AC + AD)),  # typed: B crosses, not A
        (7, 6, _t(delta(A, C, D), Id(B))),
        (7, 8, aT(A, C + D, B)),
        (9, 8, _t(Id(A), gT(B, C + D))),
        (10, 9, aT(A, B, C + D)),
        (10, 0, delta(AB, C, D)),  # typed: delta over C and D
    ]
    return make_diagram("VIIIstep1", v, e)


def viii_step2(A, B, C, D) -> Diagram:
    AB, BA, AC, AD = A * B, B * A, A * C, A * D
    v = [
        AB * C + AB * D, BA * C + BA * D, B * AC + B * AD, B * (AC + AD),
        (AC + AD) * B, (A * (C + D)) * B, A * ((C + D) * B), A * (B * (C + D)), AB * (C + D),
    ]
    e = [
        (1, 0, _p(_t(gT(B, A), Id(C)), _t(gT(B, A), Id(D)))),
        (1, 2, _p(aT(B, A, C), aT(B, A, D))),
        (3, 2, delta(B, AC, AD)),
        (3, 4, gT(B, AC + AD)),  # typed: B crosses, not A
        (5, 4, _t(delta(A, C, D), Id(B))),
        (5, 6, aT(A, C + D, B)),
        (7, 6, _t(Id(A), gT(B, C + D))),
        (8, 7, aT(A, B, C + D)),
        (8, 0, delta(AB, C, D)),  # typed: delta over C and D
    ]
    return make_diagram("VIIIstep2", v, e)


def viii_step3(A, B, C, D) -> Diagram:
    AB, BA, AC, AD = A * B, B * A, A * C, A * D
    v = [AB * C + AB * D, BA * C + BA * D, B * AC + B * AD, B * (AC + AD), B * (A * (C + D)), BA * (C + D), AB * (C + D)]
    e = [
        (1, 0, _p(_t(gT(B, A), Id(C)), _t(gT(B, A), Id(D)))),
        (1, 2, _p(aT(B, A, C), aT(B, A, D))),
        (3, 2, delta(B, AC, AD)),
        (4, 3, _t(Id(B), delta(A, C, D))),
        (5, 4, aT(B, A, C + D)),
        (5, 6, _t(gT(B, A), Id(C + D))),
        (6, 0, delta(AB, C, D)),  # typed: delta over C and D
    ]
    return make_diagram("VIIIstep3", v, e)


def lap_xvii(A, B) -> Diagram:
    v = [A * (ZERO * B), (A * ZERO) * B, ZERO * B, B * ZERO, ZERO, A * ZERO, A * (B * ZERO)]
    e = [
        (1, 0, aT(A, ZERO, B)),
        (1, 2, _t(eps(A), Id(B))),
        (3, 2, gT(B, ZERO)),
        (3, 4, eps(B)),
        (5, 4, eps(A)),
        (6, 5, _t(Id(A), eps(B))),
        (6, 0, _t(Id(A), gT(B, ZERO))),  # typed: gT(B, 0)
    ]
    return make_diagram("LapXVII", v, e)


def xvii_step1(A, B) -> Diagram:
    v = [A * (ZERO * B), (A * ZERO) * B, B * (A * ZERO), B * ZERO, ZERO, A * ZERO, A * (B * ZERO)]
    e = [
        (1, 0, aT(A, ZERO, B)),
        (2, 1, gT(B, A * ZERO)),
        (2, 3, _t(Id(B), eps(A))),
        (3, 4, eps(B)),
        (5, 4, eps(A)),
        (6, 5, _t(Id(A), eps(B))),
        (6, 0, _t(Id(A), gT(B, ZERO))),  # typed: gT(B, 0)
    ]
    return make_diagram("XVIIstep1", v, e)


def xvii_step2(A, B) -> Diagram:
    v = [(A * B) * ZERO, A * (B * ZERO), A * ZERO, ZERO, B * ZERO, B * (A * ZERO), (B * A) * ZERO]
    e = [
        (0, 1, aT(A, B, ZERO)),
        (1, 2, _t(Id(A), eps(B))),
        (2, 3, eps(A)),
        (4, 3, eps(B)),
        (5, 4, _t(Id(B), eps(A))),
        (6, 5, aT(B, A, ZERO)),
        (6, 0, _t(gT(B, A), Id(ZERO))),
    ]
    return make_diagram("XVIIstep2", v, e)


def xvii_step3(A, B) -> Diagram:
    v = [(A * B) * ZERO, ZERO, (B * A) * ZERO]
    e = [
        (0, 1, eps(A * B)),
        (2, 1, eps(B * A)),
        (2, 0, _t(gT(B, A), Id(ZERO))),
    ]
    return make_diagram("XVIIstep3", v, e)


# -- derived equalities ---------------------------------------------------------------


def unit_triple(X) -> Diagram:
    """``rho_X = gT(X,1) ; lT(X)`` as a triangle; the full three-way check is
    :func:`unit_triple_check`."""
    v = [X * ONE, ONE * X, X]
    e = [(0, 1, gT(X, ONE)), (1, 2, lT(X)), (0, 2, rT(X))]
    return make_diagram("UnitTriple", v, e)


def delta_sharp_pair(A, B, C) -> Diagram:
    v = [(A + B) * C, A * C + B * C]
    return make_diagram("DeltaSharpAlt", v, [(0, 1, delta_sharp(A, B, C)), (0, 1, delta_sharp_alt(A, B, C))])


def lambda_star_pair(A) -> Diagram:
    v = [ZERO * A, ZERO]
    return make_diagram("LambdaStarAlt", v, [(0, 1, lambda_star(A)), (0, 1, lambda_star_alt(A))])


def unit_triple_check(model: GradedModel, assignment: Assignment, X: Obj) -> CommuteReport:
    """Compare the three isomorphisms ``X*1 -> X`` pairwise."""
    mats = [model.interpret_morphism(m, assignment) for m in unit_right_forms(X)]
    for i in range(3):
        for j in range(i + 1, 3):
            report = compare("UnitTriple", mats[i], mats[j])
            if not report.commutes:
                return report
    return compare("UnitTriple", mats[0], mats[1])


# -- registry ---------------------------------------------------------------------------


class ConditionName(enum.Enum):
    AddPentagon = "AddPentagon"
    AddHexagon = "AddHexagon"
    AddUnitAssoc = "AddUnitAssoc"
    AddSymmetry = "AddSymmetry"
    MulPentagon = "MulPentagon"
    MulHexFront = "MulHexFront"
    MulHexBehind = "MulHexBehind"
    MulUnitAssoc = "MulUnitAssoc"
    RightDist2 = "RightDist2"
    RightDist0 = "RightDist0"
    DistAddComm = "DistAddComm"
    DistAddAssoc = "DistAddAssoc"
    DistZeroNeutral = "DistZeroNeutral"
    SeqDist22 = "SeqDist22"
    SeqDist20 = "SeqDist20"
    SeqDist02 = "SeqDist02"
    SeqDist00 = "SeqDist00"
    Expand22 = "Expand22"
    Expand20 = "Expand20"
    Expand00 = "Expand00"
    JoyalStreet = "JoyalStreet"
    LapVII = "LapVII"
    VIIstep1 = "VIIstep1"
    VIIstep2 = "VIIstep2"
    VIIstep3 = "VIIstep3"
    LapVIII = "LapVIII"
    VIIIstep1 = "VIIIstep1"
    VIIIstep2 = "VIIIstep2"
    VIIIstep3 = "VIIIstep3"
    LapXVII = "LapXVII"
    XVIIstep1 = "XVIIstep1"
    XVIIstep2 = "XVIIstep2"
    XVIIstep3 = "XVIIstep3"
    UnitTriple = "UnitTriple"
    DeltaSharpAlt = "DeltaSharpAlt"
    LambdaStarAlt = "LambdaStarAlt"
    NegMulSymmetry = "NegMulSymmetry"


@dataclass(frozen=True)
class ConditionInfo:
    name: ConditionName
    figure: str
    builder: Callable[..., Diagram]
    arity: int
    group: str
    laplaza: str | None = None
    expected: str = "commutes"


_N = ConditionName
REGISTRY: dict[ConditionName, ConditionInfo] = {
    info.name: info
    for info in [
        ConditionInfo(_N.AddPentagon, "F1", add_pentagon, 4, "additive"),
        ConditionInfo(_N.AddHexagon, "F2", add_hexagon, 3, "additive"),
        ConditionInfo(_N.AddUnitAssoc, "F3", add_unit_assoc, 2, "additive"),
        ConditionInfo(_N.AddSymmetry, "F4", add_symmetry, 2, "additive"),
        ConditionInfo(_N.MulPentagon, "F5", mul_pentagon, 4, "multiplicative"),
        ConditionInfo(_N.MulHexFront, "F6", mul_hex_front, 3, "multiplicative"),
        ConditionInfo(_N.MulHexBehind, "F7", mul_hex_behind, 3, "multiplicative"),
        ConditionInfo(_N.MulUnitAssoc, "F8", mul_unit_assoc, 2, "multiplicative"),
        ConditionInfo(_N.RightDist2, "F9L", right_dist2, 3, "distributivity"),
        ConditionInfo(_N.RightDist0, "F9R", right_dist0, 1, "distributivity"),
        ConditionInfo(_N.DistAddComm, "F10", dist_add_comm, 3, "distributivity", "I"),
        ConditionInfo(_N.DistAddAssoc, "F11", dist_add_assoc, 4, "distributivity", "V"),
        ConditionInfo(_N.DistZeroNeutral, "F12", dist_zero_neutral, 2, "distributivity", "XXI"),
        ConditionInfo(_N.SeqDist22, "F13", seq_dist22, 4, "distributivity", "VI"),
        ConditionInfo(_N.SeqDist20, "F14", seq_dist20, 2, "distributivity", "XVIII"),
        ConditionInfo(_N.SeqDist02, "F15", seq_dist02, 2, "distributivity", "XXIII"),
        ConditionInfo(_N.SeqDist00, "F16", seq_dist00, 0, "distributivity", "XIV"),
        ConditionInfo(_N.Expand22, "F17", expand22, 4, "distributivity", "IX"),
        ConditionInfo(_N.Expand20, "F18L", expand20, 2, "distributivity", "XII"),
        ConditionInfo(_N.Expand00, "F18R", expand00, 0, "distributivity", "X"),
        ConditionInfo(_N.JoyalStreet, "F19", joyal_street, 3, "proof"),
        ConditionInfo(_N.LapVII, "F20", lap_vii, 4, "proof", "VII"),
        ConditionInfo(_N.VIIstep1, "F21", vii_step1, 4, "proof"),
        ConditionInfo(_N.VIIstep2, "F22", vii_step2, 4, "proof"),
        ConditionInfo(_N.VIIstep3, "F23", vii_step3, 4, "proof"),
        ConditionInfo(_N.LapVIII, "F24", lap_viii, 4, "proof", "VIII"),
        ConditionInfo(_N.VIIIstep1, "F25", viii_step1, 4, "proof"),
        ConditionInfo(_N.VIIIstep2, "F26", viii_step2, 4, "proof"),
        ConditionInfo(_N.VIIIstep3, "F27", viii_step3, 4, "proof"),
        ConditionInfo(_N.LapXVII, "F28", lap_xvii, 2, "proof", "XVII"),
        ConditionInfo(_N.XVIIstep1, "F29", xvii_step1, 2, "proof"),
        ConditionInfo(_N.XVIIstep2, "F30", xvii_step2, 2, "proof"),
        ConditionInfo(_N.XVIIstep3, "F31", xvii_step3, 2, "proof"),
        ConditionInfo(_N.UnitTriple, "unit", unit_triple, 1, "derived"),
        ConditionInfo(_N.DeltaSharpAlt, "dsharp", delta_sharp_pair, 3, "derived", "II"),
        ConditionInfo(_N.LambdaStarAlt, "lstar", lambda_star_pair, 1, "derived", "XV"),
        ConditionInfo(_N.NegMulSymmetry, "control", neg_mul_symmetry, 2, "control", expected="fails"),
    ]
}

DISTRIBUTIVITY = tuple(n for n, i in REGISTRY.items() if i.group == "distributivity")
PROOF_CHAIN = tuple(n for n, i in REGISTRY.items() if i.group == "proof")
DEFAULT_ATOMS = ("A", "B", "C", "D")
DEFAULT_ASSIGNMENT: dict[str, tuple[int, ...]] = {a: (0, 1) for a in DEFAULT_ATOMS}


def lookup(key: str | ConditionName) -> ConditionName:
    """Resolve a condition by name, short tag (``F17``) or classical label (``lapIX``), ignoring case."""
    if isinstance(key, ConditionName):
        return key
    k = key.strip().lower()
    for name, info in REGISTRY.items():
        if k in (name.value.lower(), info.figure.lower()):
            return name
        if info.laplaza and k in (f"lap{info.laplaza}".lower(), f"laplaza{info.laplaza}".lower()):
            return name
    raise KeyError(f"unknown condition {key!r}")


def build(name: str | ConditionName, atoms: Sequence[Obj | str]) -> Diagram:
    """Instantiate a registered diagram at the given atoms (exactly its arity)."""
    info = REGISTRY[lookup(name)]
    if len(atoms) != info.arity:
        raise ArityError(f"{info.name.value} takes {info.arity} atoms, got {len(atoms)}")
    objs = [Atom(a) if isinstance(a, str) else a for a in atoms]
    return info.builder(*objs)


# -- suite ---------------------------------------------------------------------------------


@dataclass
class ConditionResult:
    name: str
    figure: str
    verdict: str
    expected: str
    status: str  # "pass" | "vacuous" | "mismatch"
    base_vertex: int
    witness: Witness | None
    vacuous: bool
    max_dim: int
    seconds: float

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "figure": self.figure,
            "verdict": self.verdict,
            "expected": self.expected,
            "base_vertex": self.base_vertex,
            "status": self.status,
            "vacuous": self.vacuous,
            "max_dim": self.max_dim,
            "seconds": round(self.seconds, 6),
        }
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


@dataclass
class SuiteReport:
    results: list[ConditionResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def by_name(self) -> dict[str, ConditionResult]:
        return {r.name: r for r in self.results}

    def to_json(self) -> list[dict]:
        return [r.to_dict() for r in self.results]


def control_is_vacuous(model: GradedModel, assignment: Assignment, A: Obj, B: Obj) -> bool:
    """The symmetry control says nothing when every braiding weight between A and B is 1."""
    if model.symmetric:
        return True
    da, db = interpret_object(A, assignment), interpret_object(B, assignment)
    return all(x * y == 0 for x in da for y in db)


def run_condition(
    name: ConditionName,
    model: GradedModel,
    assignment: Assignment,
    expected: str | None = None,
    atoms: Sequence[str] = DEFAULT_ATOMS,
) -> ConditionResult:
    info = REGISTRY[name]
    expected = expected or info.expected
    t0 = time.perf_counter()
    objs = [Atom(a) for a in atoms[: info.arity]]
    d = info.builder(*objs)
    if name is ConditionName.UnitTriple:
        report = unit_triple_check(model, assignment, objs[0])
    else:
        report = check_commutes(d, model, assignment)
    vacuous = is_vacuous(d, model, assignment)
    verdict = report.verdict
    if verdict == expected:
        status = "pass"
    elif expected == "fails" and (
        control_is_vacuous(model, assignment, *objs[:2]) if name is ConditionName.NegMulSymmetry else vacuous
    ):
        status = "vacuous"
    else:
        status = "mismatch"
    return ConditionResult(
        name=name.value,
        figure=info.figure,
        verdict=verdict,
        expected=expected,
        status=status,
        base_vertex=report.base_vertex,
        witness=report.witness,
        vacuous=vacuous,
        max_dim=max_dimension(d, model, assignment),
        seconds=time.perf_counter() - t0,
    )


def run_suite(
    model: GradedModel,
    assignment: Assignment = DEFAULT_ASSIGNMENT,
    names: Iterable[ConditionName] | None = None,
    expect: dict[ConditionName, str] | None = None,
    atoms: Sequence[str] = DEFAULT_ATOMS,
) -> SuiteReport:
    """Check every selected condition and collect verdicts against expectations."""
    expect = expect or {}
    t0 = time.perf_counter()
    results = [
        run_condition(n, model, assignment, expect.get(n), atoms)
        for n in (names if names is not None else REGISTRY)
    ]
    return SuiteReport(results, time.perf_counter() - t0)


__all__ = [
    "ArityError", "ConditionName", "ConditionInfo", "REGISTRY", "DISTRIBUTIVITY", "PROOF_CHAIN",
    "DEFAULT_ASSIGNMENT", "DEFAULT_ATOMS", "build", "lookup", "run_suite", "run_condition",
    "hexagon_inverted_variant", "same_up_to_inversion", "unit_triple_check", "SuiteReport",
    "ConditionResult", "Orientation",
]
