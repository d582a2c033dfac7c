import pytest
from hypothesis import given, strategies as st

from braidcoh.laurent import LaurentPoly
from braidcoh.matrix import InternalShapeError, PolyMatrix

q = LaurentPoly.q()
units = st.tuples(st.sampled_from([1, -1]), st.integers(-3, 3)).map(lambda t: LaurentPoly.monomial(t[1], t[0]))


@st.composite
def monomial_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(n)))
    coefs = draw(st.lists(units, min_size=n, max_size=n))
    return PolyMatrix.monomial_map(n, n, lambda j: (perm[j], coefs[j]))


@st.composite
def small_matrices(draw, rows=None, cols=None):
    r = draw(st.integers(0, 3)) if rows is None else rows
    c = draw(st.integers(0, 3)) if cols is None else cols
    entries = st.dictionaries(st.integers(-2, 2), st.integers(-2, 2), max_size=2).map(LaurentPoly)
    return PolyMatrix.from_rows([[draw(entries) for _ in range(c)] for _ in range(r)], cols=c)


def test_identity_and_str():
    i2 = PolyMatrix.identity(2)
    assert i2.is_identity() and i2.is_monomial()
    assert str(i2) == "[ 1  0 ]\n[ 0  1 ]"
    assert str(PolyMatrix.zeros(0, 0)) == "[] (0x0)"
    assert PolyMatrix.zeros(0, 0).is_identity()


def test_shape_errors():
    with pytest.raises(InternalShapeError):
        PolyMatrix.identity(2) @ PolyMatrix.identity(3)
    with pytest.raises(InternalShapeError):
        PolyMatrix.identity(2).first_mismatch(PolyMatrix.identity(3))


def test_kron_index_convention():
    a = PolyMatrix.from_rows([[1, 0], [0, q]])
    b = PolyMatrix.from_rows([[0, 1], [1, 0]])
    k = a.kron(b)
    # row i*2+k, col j*2+l
    assert k[3, 2] == q and k[0, 1] == LaurentPoly.constant(1) and k[2, 3] == q


def test_first_mismatch_is_row_major():
    a = PolyMatrix.from_rows([[1, 0], [0, 1]])
    b = PolyMatrix.from_rows([[1, 0], [q, q]])
    assert a.first_mismatch(b) == (1, 0, LaurentPoly.constant(0), q)
    assert a.first_mismatch(a) is None


def test_gauss_jordan_inverse_of_non_monomial():
    m = PolyMatrix.from_rows([[1, q], [0, 1]])
    assert not m.is_monomial()
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(ZeroDivisionError):
        PolyMatrix.from_rows([[1 + q]]).inverse()


@given(monomial_matrices())
def test_monomial_inverse(m):
    assert (m @ m.inverse()).is_identity()
    assert (m.inverse() @ m).is_identity()


@given(monomial_matrices(3), monomial_matrices(3), monomial_matrices(3), monomial_matrices(3))
def test_kron_mixed_product(a, b, c, d):
    if a.shape == c.shape and b.shape == d.shape:
        assert (a @ c).kron(b @ d) == a.kron(b) @ c.kron(d)


@given(small_matrices(), small_matrices())
def test_direct_sum_blocks(a, b):
    s = a.direct_sum(b)
    assert s.shape == (a.rows + b.rows, a.cols + b.cols)
    for i, j, x in a.nonzeros():
        assert s[i, j] == x
    for i, j, x in b.nonzeros():
        assert s[a.rows + i, a.cols + j] == x
    assert sum(1 for _ in s.nonzeros()) == sum(1 for _ in a.nonzeros()) + sum(1 for _ in b.nonzeros())


@given(small_matrices(2, 2), small_matrices(2, 2), small_matrices(2, 2))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
