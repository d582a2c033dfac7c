import itertools

import pytest
from hypothesis import given, strategies as st

from braidcoh.braid import (
    BraidWord, FreeWord, StrandMismatch, UnsupportedNode, artin_images, block_crossing, braid_equal, power,
    strict_image,
)
from braidcoh.conditions import joyal_street, mul_hex_behind, mul_hex_front, mul_pentagon
from braidcoh.diagram import Orientation, path_morphism
from braidcoh.expr import AlphaTimes, Atom, Comp, Delta, GammaTimes, Id, LambdaTimes, ProdM, beta

x = Atom("x")


@st.composite
def braid_words(draw, n=4, max_len=8):
    gens = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return BraidWord(n, tuple(gens))


def test_generator_images():
    imgs = artin_images(BraidWord(2, (1,)))
    assert [str(w) for w in imgs] == ["x1x2x1^-1", "x1"]
    assert artin_images(BraidWord(2, (1, -1))) == [FreeWord.gen(1), FreeWord.gen(2)]


def test_braid_relation():
    assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not braid_equal(BraidWord(2, (1,)), BraidWord(2, (-1,)))
    assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        braid_equal(BraidWord(2, (1,)), BraidWord(3, (1,)))
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


def test_strict_images():
    assert strict_image(GammaTimes(x, x)).gens == (1,)
    assert strict_image(beta(x, x)).gens == (1, 1)
    lower = Comp(ProdM(GammaTimes(x, x), Id(x)), Comp(AlphaTimes(x, x, x), ProdM(Id(x), GammaTimes(x, x))))
    assert strict_image(lower).gens == (1, 2)
    assert not braid_equal(strict_image(beta(x, x)), BraidWord(2))


def test_block_crossing_shape():
    assert block_crossing(2, 1).gens == (2, 1)
    assert block_crossing(1, 2).gens == (1, 2)
    assert block_crossing(2, 2).gens == (2, 3, 1, 2)


def test_unsupported_nodes():
    with pytest.raises(UnsupportedNode):
        strict_image(Delta(x, x, x))
    with pytest.raises(UnsupportedNode):
        strict_image(LambdaTimes(x))
    with pytest.raises(UnsupportedNode):
        strict_image(GammaTimes(x, Atom("y")), x)


@pytest.mark.parametrize("builder", [mul_pentagon, mul_hex_front, mul_hex_behind, joyal_street])
def test_braided_figures_at_powers(builder):
    arity = builder.__code__.co_argcount
    for powers in itertools.product(range(1, 4), repeat=arity):
        d = builder(*[power(x, a) for a in powers])
        for t in range(1, len(d.vertices)):
            cw = strict_image(path_morphism(d, 0, t, Orientation.CLOCKWISE))
            ccw = strict_image(path_morphism(d, 0, t, Orientation.COUNTERCLOCKWISE))
            assert braid_equal(cw, ccw), (builder.__name__, powers, t)


def test_behind_hexagon_uses_inverse_crossings():
    d = mul_hex_behind(x, x, x)
    words = [strict_image(e.label) for e in d.edges]
    arcs = [strict_image(path_morphism(d, 0, 2, o)) for o in Orientation]
    assert any(g < 0 for w in arcs for g in w.gens)
    assert all(g > 0 for w in words for g in w.gens)


@given(braid_words(), braid_words())
def test_artin_action_is_a_homomorphism(u, v):
    uv = artin_images(u * v)
    assert uv == [w.substitute(artin_images(u)) for w in artin_images(v)]


@given(braid_words())
def test_inverse_cancels(w):
    assert braid_equal(w * w.inverse(), BraidWord(w.strands))


@given(braid_words())
def test_images_are_reduced(w):
    for img in artin_images(w):
        letters = img.letters
        assert all(a != -b for a, b in zip(letters, letters[1:]))
