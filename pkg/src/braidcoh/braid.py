"""Braid words, the Artin action on a free group, and the strict image of ⊗-words.

A generator is stored as a signed index: ``+i`` is sigma_i, ``-i`` its inverse.
Free-group letters use the same convention for x_i and x_i^-1.

Words are read left to right. The image of x_j under a word ``w s`` is obtained
by substituting the images under ``w`` into the image of x_j under ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .expr import AlphaTimes, Atom, Comp, GammaTimes, Id, Inv, Morph, Obj, Prod, ProdM, show_morphism, typecheck


class UnsupportedNode(ValueError):
    """The term leaves the pure ⊗ fragment over a single atom."""


class StrandMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    gens: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.gens:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise StrandMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.gens + other.gens)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-g for g in reversed(self.gens)))

    def shifted(self, offset: int, strands: int) -> BraidWord:
        return BraidWord(strands, tuple(g + offset if g > 0 else g - offset for g in self.gens))

    def __str__(self) -> str:
        if not self.gens:
            return "e"
        return " ".join(f"s{abs(g)}" + ("'" if g < 0 else "") for g in self.gens)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a == -b for a, b in zip(self.letters, self.letters[1:])):
            raise ValueError("free word is not reduced")

    @classmethod
    def reduce(cls, letters: Iterable[int]) -> FreeWord:
        out: list[int] = []
        for x in letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return cls(tuple(out))

    @classmethod
    def gen(cls, i: int) -> FreeWord:
        return cls((i,))

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord.reduce(self.letters + other.letters)

    def substitute(self, images: Sequence[FreeWord]) -> FreeWord:
        """Replace each x_k by ``images[k-1]``."""
        out: list[int] = []
        for x in self.letters:
            w = images[abs(x) - 1]
            out.extend(w.letters if x > 0 else w.inverse().letters)
        return FreeWord.reduce(out)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def _generator_images(g: int, n: int) -> list[FreeWord]:
    i = abs(g)
    xs = [FreeWord.gen(k) for k in range(1, n + 1)]
    a, b = xs[i - 1], xs[i]
    if g > 0:
        xs[i - 1], xs[i] = a * b * a.inverse(), a
    else:
        xs[i - 1], xs[i] = b, b.inverse() * a * b
    return xs


def artin_images(w: BraidWord) -> list[FreeWord]:
    images = [FreeWord.gen(k) for k in range(1, w.strands + 1)]
    for g in w.gens:
        images = [x.substitute(images) for x in _generator_images(g, w.strands)]
    return images


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"{w1.strands} vs {w2.strands} strands")
    return artin_images(w1) == artin_images(w2)


def block_crossing(a: int, b: int) -> BraidWord:
    """The first ``a`` strands pass over the last ``b``, as positive crossings."""
    gens = [j for i in range(a, 0, -1) for j in range(i, i + b)]
    return BraidWord(max(a + b, 1), tuple(gens))


def strand_count(o: Obj, x: Atom | None = None) -> int:
    if isinstance(o, Atom):
        if x is not None and o != x:
            raise UnsupportedNode(f"atom {o.name} is not the generating atom {x.name}")
        return 1
    if isinstance(o, Prod):
        return strand_count(o.left, x) + strand_count(o.right, x)
    raise UnsupportedNode(f"object {o!r} is outside the pure product fragment")


def strict_image(m: Morph, x: Atom | None = None) -> BraidWord:
    """Braid word of a ⊗-only structural term; associators vanish.

    With ``x`` given, every atom must be ``x``. Otherwise any atoms are
    accepted and only their positions matter.
    """
    typecheck(m)
    return _image(m, x)


def _image(m: Morph, x: Atom | None) -> BraidWord:
    if isinstance(m, Id):
        return BraidWord(strand_count(m.A, x))
    if isinstance(m, AlphaTimes):
        return BraidWord(strand_count(m.dom, x))
    if isinstance(m, GammaTimes):
        return block_crossing(strand_count(m.A, x), strand_count(m.B, x))
    if isinstance(m, Inv):
        return _image(m.m, x).inverse()
    if isinstance(m, Comp):
        return _image(m.first, x) * _image(m.then, x)
    if isinstance(m, ProdM):
        f, g = _image(m.f, x), _image(m.g, x)
        n = f.strands + g.strands
        return BraidWord(n, f.gens) * g.shifted(f.strands, n)
    raise UnsupportedNode(f"{show_morphism(m)} is outside the pure product fragment")


def power(x: Obj, a: int) -> Obj:
    """Left-nested product of ``a`` copies of ``x``."""
    if a < 1:
        raise ValueError("power needs a >= 1")
    o = x
    for _ in range(a - 1):
        o = Prod(o, x)
    return o


__all__ = [
    "BraidWord", "FreeWord", "UnsupportedNode", "StrandMismatch", "artin_images", "braid_equal",
    "block_crossing", "strict_image", "strand_count", "power",
]
