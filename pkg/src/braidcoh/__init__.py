"""Exact coherence checking for a braided product distributing over a symmetric sum."""

from .braid import BraidWord, FreeWord, artin_images, braid_equal, strict_image
from .conditions import REGISTRY, ConditionName, build, run_suite
from .diagram import Diagram, Orientation, check_commutes, make_diagram, path_morphism
from .expr import ONE, ZERO, Atom, compose, show_morphism, show_object, typecheck
from .laurent import LaurentPoly
from .matrix import PolyMatrix
from .model import GradedModel
from .syntax import parse_diagram, parse_morphism, parse_object

__all__ = [
    "BraidWord", "FreeWord", "artin_images", "braid_equal", "strict_image",
    "REGISTRY", "ConditionName", "build", "run_suite",
    "Diagram", "Orientation", "check_commutes", "make_diagram", "path_morphism",
    "ONE", "ZERO", "Atom", "compose", "show_morphism", "show_object", "typecheck",
    "LaurentPoly", "PolyMatrix", "GradedModel",
    "parse_diagram", "parse_morphism", "parse_object",
]
