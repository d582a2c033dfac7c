"""Cycle diagrams of isomorphisms and their commutativity check.

A diagram is a simple cycle once arrow directions are ignored. Walking along
the cycle, an arrow met in its own direction contributes its label and an
arrow met backwards contributes the inverse of its label. The diagram
commutes when the two arcs between any two vertices give the same morphism;
equivalently, when the word read all the way round is the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .expr import Id, Inv, Morph, MorphTypeError, Obj, compose_all, show_object, typecheck
from .laurent import LaurentPoly
from .matrix import PolyMatrix
from .model import Assignment, GradedModel


class Orientation(enum.Enum):
    CLOCKWISE = "cw"
    COUNTERCLOCKWISE = "ccw"

    @property
    def opposite(self) -> Orientation:
        return Orientation.COUNTERCLOCKWISE if self is Orientation.CLOCKWISE else Orientation.CLOCKWISE


class DiagramError(ValueError):
    pass


class NotACycle(DiagramError):
    pass


class EdgeTypeMismatch(DiagramError):
    def __init__(self, edge_index: int, message: str):
        self.edge_index = edge_index
        super().__init__(f"edge {edge_index}: {message}")


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    label: Morph


@dataclass(frozen=True)
class Diagram:
    """Validated cycle diagram; build with :func:`make_diagram`.

    ``cycle`` lists ``(vertex, edge_index)`` pairs in clockwise order: walking
    clockwise from ``cycle[k][0]`` crosses edge ``cycle[k][1]`` to reach
    ``cycle[k+1][0]``. Clockwise starts at vertex 0 and leaves through the
    lowest-numbered edge touching it.
    """

    name: str
    vertices: tuple[Obj, ...]
    edges: tuple[Edge, ...]
    cycle: tuple[tuple[int, int], ...] = field(repr=False)

    def position(self, v: int) -> int:
        for k, (u, _) in enumerate(self.cycle):
            if u == v:
                return k
        raise IndexError(v)

    def __len__(self) -> int:
        return len(self.vertices)


def _walk_cycle(n: int, edges: Sequence[Edge]) -> tuple[tuple[int, int], ...]:
    if n == 0:
        raise NotACycle("a diagram needs at least one vertex")
    if len(edges) != n:
        raise NotACycle(f"{n} vertices but {len(edges)} edges")
    degree = [0] * n
    for k, e in enumerate(edges):
        for v in (e.src, e.dst):
            if not 0 <= v < n:
                raise NotACycle(f"edge {k} refers to missing vertex {v}")
        degree[e.src] += 1
        degree[e.dst] += 1
    if any(d != 2 for d in degree):
        raise NotACycle(f"vertex degrees {degree} are not all 2")
    if n == 1:
        return ((0, 0),)
    if any(e.src == e.dst for e in edges):
        raise NotACycle("loop edge in a diagram with more than one vertex")
    walk = []
    used = set()
    v = 0
    for _ in range(n):
        k = min((i for i, e in enumerate(edges) if i not in used and v in (e.src, e.dst)), default=None)
        if k is None:
            raise NotACycle("edges do not form a single cycle through every vertex")
        used.add(k)
        walk.append((v, k))
        e = edges[k]
        v = e.dst if e.src == v else e.src
    if v != 0 or len({u for u, _ in walk}) != n:
        raise NotACycle("edges do not form a single cycle through every vertex")
    return tuple(walk)


def make_diagram(name: str, vertices: Sequence[Obj], edges: Sequence) -> Diagram:
    """Validate and build a diagram.

    ``edges`` may hold :class:`Edge` values or ``(src, dst, label)`` triples.
    Raises NotACycle for a bad shape and EdgeTypeMismatch when a label's
    domain or codomain differs from its endpoint vertices.
    """
    edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
    vertices = tuple(vertices)
    cycle = _walk_cycle(len(vertices), edges)
    for k, e in enumerate(edges):
        try:
            d, c = typecheck(e.label)
        except MorphTypeError as err:
            raise EdgeTypeMismatch(k, str(err)) from err
        if d != vertices[e.src]:
            raise EdgeTypeMismatch(
                k, f"label domain {show_object(d)} is not vertex {e.src} = {show_object(vertices[e.src])}"
            )
        if c != vertices[e.dst]:
            raise EdgeTypeMismatch(
                k, f"label codomain {show_object(c)} is not vertex {e.dst} = {show_object(vertices[e.dst])}"
            )
    return Diagram(name, vertices, edges, cycle)


def _steps(d: Diagram, x: int, y: int, orientation: Orientation, full_turn: bool) -> list[Morph]:
    n = len(d.cycle)
    pos = d.position(x)
    steps: list[Morph] = []
    while True:
        if d.cycle[pos][0] == y and (steps or not full_turn):
            return steps
        if orientation is Orientation.CLOCKWISE:
            v, k = d.cycle[pos]
            pos = (pos + 1) % n
        else:
            pos = (pos - 1) % n
            v, k = d.cycle[pos]
            v = d.cycle[(pos + 1) % n][0]
        e = d.edges[k]
        # a loop edge is always read forwards when walking clockwise
        forward = e.src == v and (e.src != e.dst or orientation is Orientation.CLOCKWISE)
        steps.append(e.label if forward else Inv(e.label))


def path_morphism(
    d: Diagram,
    x: int,
    y: int,
    orientation: Orientation = Orientation.CLOCKWISE,
    full_turn: bool = False,
) -> Morph:
    """The word read along the arc from ``x`` to ``y``.

    With ``x == y`` the arc is empty (the identity) unless ``full_turn`` is
    set, in which case it is the whole cycle.
    """
    steps = _steps(d, x, y, orientation, full_turn)
    if not steps:
        return Id(d.vertices[x])
    return compose_all(*steps)


@dataclass(frozen=True)
class Witness:
    row: int
    col: int
    left: LaurentPoly
    right: LaurentPoly

    def to_dict(self) -> dict:
        return {"row": self.row, "col": self.col, "left": str(self.left), "right": str(self.right)}


@dataclass(frozen=True)
class CommuteReport:
    name: str
    commutes: bool
    base_vertex: int
    target_vertex: int
    orientation: Orientation
    witness: Witness | None = None
    left: PolyMatrix | None = field(default=None, repr=False, compare=False)
    right: PolyMatrix | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.commutes and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def verdict(self) -> str:
        return "commutes" if self.commutes else "fails"


def compare(name: str, left: PolyMatrix, right: PolyMatrix, base: int = 0, target: int = 0,
            orientation: Orientation = Orientation.CLOCKWISE) -> CommuteReport:
    mismatch = left.first_mismatch(right)
    witness = Witness(*mismatch) if mismatch else None
    return CommuteReport(name, mismatch is None, base, target, orientation, witness, left, right)


def check_commutes(
    d: Diagram,
    model: GradedModel,
    assignment: Assignment,
    base: int = 0,
    target: int | None = None,
    orientation: Orientation = Orientation.CLOCKWISE,
) -> CommuteReport:
    """Evaluate both arcs from ``base`` to ``target`` and compare them exactly.

    ``left`` is the arc taken in ``orientation``, ``right`` the other one.
    When ``target`` is omitted it defaults to ``base``: the arcs are then the
    full turn and the empty path, so the check compares the loop word with the
    identity and a witness reads ``(loop entry, identity entry)``.
    """
    if target is None:
        target = base
    if target == base:
        left = model.interpret_morphism(path_morphism(d, base, base, orientation, full_turn=True), assignment)
        right = PolyMatrix.identity(left.rows)
    else:
        left = model.interpret_morphism(path_morphism(d, base, target, orientation), assignment)
        right = model.interpret_morphism(path_morphism(d, base, target, orientation.opposite), assignment)
    return compare(d.name, left, right, base, target, orientation)


def edge_matrices(d: Diagram, model: GradedModel, assignment: Assignment) -> list[PolyMatrix]:
    return [model.interpret_morphism(e.label, assignment) for e in d.edges]


def is_vacuous(d: Diagram, model: GradedModel, assignment: Assignment) -> bool:
    """True when every edge evaluates to an identity matrix, so commuting says nothing."""
    return all(m.is_identity() for m in edge_matrices(d, model, assignment))


def max_dimension(d: Diagram, model: GradedModel, assignment: Assignment) -> int:
    return max(len(model.interpret_object(v, assignment)) for v in d.vertices)
