import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from compactcat.matcat import (
    UNIT,
    Morphism,
    NotAScalar,
    ObjectMismatch,
    TensorObject,
    compose,
    compose_all,
    identity,
    permutation,
    scalar,
    scalar_action,
    scalar_mul,
    symmetry,
    tensor,
    zero,
)
from compactcat.semiring import Bool, CRat, NNRat, SemiringMismatch

from conftest import SEMIRINGS, morphisms, objects


def as_array(f):
    # object arrays keep exact semiring arithmetic inside numpy's kron/dot
    return np.array([list(r) for r in f.rows], dtype=object)


def from_array(a, dom, cod, S):
    return Morphism._raw(tuple(tuple(r) for r in a), dom, cod, S)


def test_objects():
    A = TensorObject.parse("2x3*")
    assert A == TensorObject.of(2, (3, True))
    assert A.total_dim == 6
    assert A.dual == TensorObject.of((2, True), 3)
    assert UNIT.total_dim == 1
    assert A @ UNIT == A
    assert TensorObject.parse("I") == UNIT
    with pytest.raises(ValueError):
        TensorObject.of(0)


def test_shape_checks():
    with pytest.raises(ObjectMismatch):
        Morphism([[1, 2]], 3, 1, CRat)
    with pytest.raises(SemiringMismatch):
        Morphism([[CRat(1)]], 1, 1, Bool)


def test_boolean_product():
    g = Morphism([[1, 1], [0, 1]], 2, 2, Bool)
    f = Morphism([[1, 0], [1, 0]], 2, 2, Bool)
    assert compose(g, f) == Morphism([[1, 0], [1, 0]], 2, 2, Bool)


def test_scalars_commute():
    s, t = scalar(2, CRat), scalar(3, CRat)
    assert compose(s, t) == compose(t, s) == scalar(6, CRat)


def test_kronecker_convention():
    a, b, c, d = (CRat(k) for k in (2, 3, 5, 7))
    f = Morphism([[a, b]], 2, 1, CRat)
    g = Morphism([[c], [d]], 1, 2, CRat)
    assert tensor(f, g).rows == ((a * c, b * c), (a * d, b * d))


def test_unit_is_strict():
    f = Morphism([[1, 2], [3, 4]], 2, 2, CRat)
    assert tensor(f, identity(UNIT, CRat)) == f
    assert tensor(identity(UNIT, CRat), f) == f
    assert symmetry(UNIT, TensorObject.of(3), CRat) == identity(3, CRat)


def test_symmetry_2_2_swaps_middle_rows():
    s = symmetry(2, 2, CRat)
    expected = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    assert s == Morphism(expected, TensorObject.of(2, 2), TensorObject.of(2, 2), CRat)


def test_compose_type_error():
    f = Morphism([[1, 2]], 2, 1, CRat)
    with pytest.raises(ObjectMismatch):
        compose(f, f)


def test_scalar_multiplication():
    f = Morphism([[1, 2]], 2, 1, NNRat)
    assert scalar_mul(scalar(1, NNRat), f) == f
    assert scalar_mul(scalar(0, Bool), Morphism([[1, 1]], 2, 1, Bool)).is_zero()
    with pytest.raises(NotAScalar):
        scalar_mul(f, f)


def test_literal_roundtrip():
    f = Morphism([["1+i", "0"], ["-1/2", "i"]], TensorObject.of((2, True)), 2, CRat)
    assert f.literal() == "[[1+i,0],[-1/2,i]] : 2* -> 2"


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_compose_matches_numpy(S, data):
    A, B, C = (data.draw(objects()) for _ in range(3))
    f = data.draw(morphisms(S, A, B))
    g = data.draw(morphisms(S, B, C))
    want = as_array(g).dot(as_array(f)) if B.total_dim else None
    assert compose(g, f) == from_array(want, A, C, S)


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_tensor_matches_numpy_kron(S, data):
    f = data.draw(morphisms(S))
    g = data.draw(morphisms(S))
    want = np.kron(as_array(f), as_array(g))
    assert tensor(f, g) == from_array(want, f.dom @ g.dom, f.cod @ g.cod, S)


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_category_laws(S, data):
    A, B, C, D = (data.draw(objects()) for _ in range(4))
    f = data.draw(morphisms(S, A, B))
    g = data.draw(morphisms(S, B, C))
    h = data.draw(morphisms(S, C, D))
    assert compose(identity(B, S), f) == f == compose(f, identity(A, S))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f) == compose_all(h, g, f)
    assert compose(zero(B, C, S), f).is_zero()


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_interchange(S, data):
    A, B, C, D, E, F = (data.draw(objects(max_factors=1)) for _ in range(6))
    p, f = data.draw(morphisms(S, A, B)), data.draw(morphisms(S, B, C))
    q, g = data.draw(morphisms(S, D, E)), data.draw(morphisms(S, E, F))
    assert compose(tensor(f, g), tensor(p, q)) == tensor(compose(f, p), compose(g, q))


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_tensor_associative_and_functorial(S, data):
    f, g, h = (data.draw(morphisms(S, max_dim=2)) for _ in range(3))
    assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))
    A, B = data.draw(objects()), data.draw(objects())
    assert tensor(identity(A, S), identity(B, S)) == identity(A @ B, S)


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_symmetry(S, data):
    A, B = data.draw(objects()), data.draw(objects())
    f = data.draw(morphisms(S, A, data.draw(objects())))
    g = data.draw(morphisms(S, B, data.draw(objects())))
    assert compose(symmetry(B, A, S), symmetry(A, B, S)) == identity(A @ B, S)
    # naturality
    assert (compose(symmetry(f.cod, g.cod, S), tensor(f, g))
            == compose(tensor(g, f), symmetry(A, B, S)))


@given(data=st.data())
def test_permutation_generalizes_symmetry(data):
    A, B = data.draw(objects(max_factors=1, allow_unit=False)), data.draw(
        objects(max_factors=1, allow_unit=False))
    assert permutation(A @ B, [1, 0], CRat) == symmetry(A, B, CRat)
    assert permutation(A @ B, [0, 1], CRat) == identity(A @ B, CRat)


@given(data=st.data())
def test_scalar_laws(data):
    S = CRat
    f = data.draw(morphisms(S, TensorObject.of(2), TensorObject.of(3)))
    g = data.draw(morphisms(S, TensorObject.of(3), TensorObject.of(2)))
    r, s = data.draw(morphisms(S, UNIT, UNIT)), data.draw(morphisms(S, UNIT, UNIT))
    assert (compose(scalar_mul(s, g), scalar_mul(r, f))
            == scalar_mul(compose(s, r), compose(g, f)))
    assert scalar_action(s, f.cod) == scalar_mul(s, identity(f.cod, S))
