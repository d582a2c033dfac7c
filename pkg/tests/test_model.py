import pytest
from hypothesis import given, settings, strategies as st

from braidcoh.expr import ONE, ZERO, Atom, Delta, Epsilon, GammaPlus, GammaTimes, Id, Inv, beta
from braidcoh.laurent import LaurentPoly
from braidcoh.matrix import PolyMatrix
from braidcoh.model import GradedModel, UnassignedAtom, injection, interpret_object, projection

A, B, C = Atom("A"), Atom("B"), Atom("C")
q = LaurentPoly.q()
degree_lists = st.lists(st.integers(-2, 3), min_size=0, max_size=3)


def test_object_bases():
    asg = {"A": (0, 1), "B": (2,)}
    assert interpret_object(ZERO, asg) == ()
    assert interpret_object(ONE, asg) == (0,)
    assert interpret_object(A + B, asg) == (0, 1, 2)
    assert interpret_object(A * B, asg) == (2, 3)
    assert interpret_object(A * A, asg) == (0, 1, 1, 2)
    with pytest.raises(UnassignedAtom):
        interpret_object(C, asg)


def test_gamma_times_single_vectors():
    m = GradedModel().interpret_morphism(GammaTimes(A, B), {"A": [1], "B": [1]})
    assert m == PolyMatrix.from_rows([[q]])


def test_beta_is_q_squared():
    m = GradedModel().interpret_morphism(beta(A, B), {"A": [1], "B": [1]})
    assert m == PolyMatrix.from_rows([[q**2]])


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_beta_weight(m, n):
    mat = GradedModel().interpret_morphism(beta(A, B), {"A": [m], "B": [n]})
    assert mat[0, 0] == LaurentPoly.monomial(2 * m * n)


def test_delta_permutation():
    mat = GradedModel().interpret_morphism(Delta(A, B, C), {"A": [0, 0], "B": [0], "C": [0]})
    expected = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    assert mat == PolyMatrix.from_rows(expected)


def test_epsilon_is_empty():
    mat = GradedModel().interpret_morphism(Epsilon(A), {"A": [0, 1, 2]})
    assert mat.shape == (0, 0)


def test_q_one_specialization_is_symmetric():
    asg = {"A": [1, 2], "B": [3]}
    assert GradedModel(specialize_q=1).interpret_morphism(beta(A, B), asg).is_identity()
    assert not GradedModel().interpret_morphism(beta(A, B), asg).is_identity()
    with pytest.raises(ValueError):
        GradedModel(specialize_q=2)


def test_memo_does_not_leak_between_assignments():
    model = GradedModel()
    a = model.interpret_morphism(GammaTimes(A, B), {"A": [1], "B": [1]})
    b = model.interpret_morphism(GammaTimes(A, B), {"A": [1], "B": [2]})
    assert a[0, 0] == q and b[0, 0] == q**2


@given(degree_lists, degree_lists)
def test_gamma_plus_is_involutive(a, b):
    model = GradedModel()
    asg = {"A": a, "B": b}
    g = model.interpret_morphism(GammaPlus(A, B), asg)
    h = model.interpret_morphism(GammaPlus(B, A), asg)
    assert (h @ g).is_identity()


@given(degree_lists, degree_lists)
def test_gamma_times_inverse(a, b):
    model = GradedModel()
    asg = {"A": a, "B": b}
    g = model.interpret_morphism(GammaTimes(A, B), asg)
    gi = model.interpret_morphism(Inv(GammaTimes(A, B)), asg)
    assert (gi @ g).is_identity() and (g @ gi).is_identity()


@settings(max_examples=50)
@given(degree_lists, degree_lists)
def test_projection_injection(a, b):
    for i in (1, 2):
        assert (projection(a, b, i) @ injection(a, b, i)).is_identity()
    total = injection(a, b, 1) @ projection(a, b, 1) + injection(a, b, 2) @ projection(a, b, 2)
    assert total.is_identity()


def test_memo_off_gives_same_result():
    asg = {"A": [1, 0], "B": [2], "C": [1]}
    m = Delta(A, B, C)
    assert GradedModel(memoize=False).interpret_morphism(m, asg) == GradedModel().interpret_morphism(m, asg)
    assert GradedModel().interpret_morphism(Id(ONE), {}) == PolyMatrix.identity(1)
