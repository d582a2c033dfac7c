import pytest

from braidcoh.expr import (
    ONE, ZERO, AlphaPlus, Atom, Comp, Delta, Epsilon, GammaPlus, GammaTimes, Id, Inv, LambdaPlus,
    MorphTypeError, ProdM, SumM, beta, cod, compose, compose_all, delta_sharp, delta_sharp_alt,
    delta_sharp_split, dom, is_well_typed, lambda_star, lambda_star_alt, show_morphism, show_object,
    typecheck, unit_right_forms,
)

A, B, C = Atom("A"), Atom("B"), Atom("C")


def test_primitive_boundaries():
    assert typecheck(Delta(A, B, C)) == (A * (B + C), A * B + A * C)
    assert typecheck(Epsilon(A)) == (A * ZERO, ZERO)
    assert typecheck(AlphaPlus(A, B, C)) == ((A + B) + C, A + (B + C))
    assert typecheck(Inv(GammaTimes(A, B))) == (B * A, A * B)


def test_compose_reports_both_boundaries():
    with pytest.raises(MorphTypeError) as err:
        compose(Epsilon(A), LambdaPlus(B))
    msg = str(err.value)
    assert "codomain 0" in msg and "domain 0+B" in msg


def test_nested_error_path():
    bad = SumM(Id(A), Comp(GammaPlus(A, B), Id(A + B)))
    with pytest.raises(MorphTypeError) as err:
        typecheck(bad)
    assert err.value.path and not is_well_typed(bad)


def test_compose_all_is_right_nested():
    f, g, h = GammaPlus(A, B), GammaPlus(B, A), Id(A + B)
    assert compose_all(f, g, h) == Comp(f, Comp(g, h))


def test_derived_boundaries():
    assert typecheck(beta(A, B)) == (A * B, A * B)
    for make in (delta_sharp, delta_sharp_split, delta_sharp_alt):
        assert typecheck(make(A, B, C)) == ((A + B) * C, A * C + B * C)
    for make in (lambda_star, lambda_star_alt):
        assert typecheck(make(A)) == (ZERO * A, ZERO)
    assert all(typecheck(m) == (A * ONE, A) for m in unit_right_forms(A))


def test_object_printing_precedence():
    assert show_object(A + B * C) == "A+B*C"
    assert show_object((A + B) * C) == "(A+B)*C"
    assert show_object(A + (B + C)) == "A+(B+C)"
    assert show_object((A * B) * C) == "A*B*C"


def test_morphism_printing():
    m = Comp(ProdM(GammaTimes(A, B), Id(C)), Inv(ProdM(GammaTimes(A, B), Id(C))))
    assert show_morphism(m) == "gT(A,B) (x) id(C) ; inv(gT(A,B) (x) id(C))"
    assert show_morphism(SumM(Id(A), SumM(Id(B), Id(C)))) == "id(A) (+) (id(B) (+) id(C))"
    assert dom(m) == (A * B) * C
    with pytest.raises(MorphTypeError):
        cod(Comp(Id(A), Id(B)))
