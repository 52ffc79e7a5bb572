import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compactcat import compact as cc
from compactcat.matcat import (
    UNIT,
    Morphism,
    ObjectMismatch,
    TensorObject,
    compose,
    compose_all,
    identity,
    scalar,
    scalar_mul,
    symmetry,
    tensor,
)
from compactcat.semiring import Bool, CRat, NNRat, NotInvertible

from conftest import SEMIRINGS, morphisms, objects

T = TensorObject.of


def column(values, cod, S=CRat):
    return Morphism([[v] for v in values], UNIT, cod, S)


def test_unit_and_counit_entries():
    A = T(2)
    assert cc.unit(A, CRat) == column([1, 0, 0, 1], A.dual @ A)
    assert cc.counit(A, CRat) == Morphism([[1, 0, 0, 1]], A @ A.dual, UNIT, CRat)
    assert cc.unit(T(1), CRat) == column([1], T((1, True), 1))


@pytest.mark.parametrize("S", SEMIRINGS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_compact_structure_small_dims(S, n):
    A = T(n)
    one = identity(A, S)
    # triangle identities
    assert compose(tensor(cc.counit(A, S), one), tensor(one, cc.unit(A, S))) == one
    Ad = A.dual
    assert (compose(tensor(identity(Ad, S), cc.counit(A, S)), tensor(cc.unit(A, S), identity(Ad, S)))
            == identity(Ad, S))
    # twist: sigma o eta_A = eta_{A*}
    assert compose(symmetry(Ad, A, S), cc.unit(A, S)) == cc.unit(Ad, S)
    # a closed loop is the dimension
    loop = compose_all(cc.counit(A, S), symmetry(Ad, A, S), cc.unit(A, S))
    assert loop == scalar(S.from_int(n))


def test_adjoint_example():
    f = Morphism([["1+i", 0], [2, 1]], 2, 2, CRat)
    assert cc.adjoint(f) == Morphism([["1-i", 2], [0, 1]], 2, 2, CRat)


def test_name_example():
    # entry (i, j) of |f| is f.rows[j][i]: the name of [[1,2],[3,4]] is (1,3,2,4)
    f = Morphism([[1, 2], [3, 4]], 2, 2, CRat)
    assert cc.name(f) == column([1, 3, 2, 4], T((2, True), 2))
    assert cc.coname(f) == Morphism([[1, 3, 2, 4]], T(2, (2, True)), UNIT, CRat)


def test_names_of_identities():
    A = T(3)
    assert cc.name(identity(A, CRat)) == cc.unit(A, CRat)
    assert cc.coname(identity(A, CRat)) == cc.counit(A, CRat)


def test_conjugate_of_identity():
    A = T(2, (3, True))
    assert cc.conjugate(identity(A, CRat)) == identity(A.dual, CRat)


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_transpose_and_name_agree_with_composites(S, data):
    f = data.draw(morphisms(S))
    assert cc.transpose(f) == cc.transpose_composite(f)
    assert cc.name(f) == cc.name_composite(f)
    assert cc.coname(f) == cc.coname_composite(f)
    assert cc.unname(cc.name(f), f.dom, f.cod) == f
    assert cc.unconame(cc.coname(f), f.dom, f.cod) == f


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_dagger_functor(S, data):
    A, B, C = (data.draw(objects()) for _ in range(3))
    f, g = data.draw(morphisms(S, A, B)), data.draw(morphisms(S, B, C))
    h = data.draw(morphisms(S))
    assert cc.adjoint(cc.adjoint(f)) == f
    assert cc.adjoint(compose(g, f)) == compose(cc.adjoint(f), cc.adjoint(g))
    assert cc.adjoint(tensor(f, h)) == tensor(cc.adjoint(f), cc.adjoint(h))
    assert cc.adjoint(f) == cc.transpose(cc.conjugate(f))
    assert cc.conjugate(compose(g, f)) == compose(cc.conjugate(g), cc.conjugate(f))


@given(data=st.data())
def test_name_adjoint_is_coname_of_conjugate(data):
    f = data.draw(morphisms(CRat))
    assert cc.adjoint(cc.name(f)) == cc.coname(cc.conjugate(f))


def test_strong_counit_is_counit_in_matrices():
    A = T(3)
    assert cc.strong_counit(A, CRat) == cc.counit(A, CRat)


# -- trace ---------------------------------------------------------------------

def test_trace_of_two_by_two_is_its_diagonal_sum():
    f = Morphism([[1, 2], [3, 4]], 2, 2, CRat)
    assert cc.trace(f, UNIT, UNIT, T(2)) == scalar(5, CRat)


def test_trace_of_identity_is_dimension():
    A, C = T(2), T(3)
    assert cc.trace(identity(A @ C, CRat), A, A, C) == scalar_mul(scalar(3, CRat), identity(A, CRat))


def test_trace_rejects_bad_types():
    with pytest.raises(ObjectMismatch):
        cc.trace(identity(T(2, 3), CRat), T(2), T(2), T(2))


def test_trace_of_relations_is_exists_z():
    # exhaustive over relations (X x Z) -> (Y x Z) with |X| = |Y| = 1 and |Z| = 2,
    # plus random ones at |X| = |Y| = |Z| = 2
    import random
    rng = random.Random(3)
    cases = [(1, 1, 2, bits) for bits in itertools.product((0, 1), repeat=4)]
    cases += [(2, 2, 2, [rng.randint(0, 1) for _ in range(16)]) for _ in range(100)]
    for nx, ny, nz, bits in cases:
        rows = [list(bits[r * nx * nz:(r + 1) * nx * nz]) for r in range(ny * nz)]
        R = Morphism(rows, T(nx, nz), T(ny, nz), Bool)
        tr = cc.trace(R, T(nx), T(ny), T(nz))
        for x in range(nx):
            for y in range(ny):
                want = any(rows[y * nz + z][x * nz + z] for z in range(nz))
                assert bool(tr.rows[y][x]) == want


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_trace_composite_equals_index_sum(S, data):
    A, B, C = (data.draw(objects(max_factors=1)) for _ in range(3))
    f = data.draw(morphisms(S, A @ C, B @ C))
    assert cc.trace_composite(f, A, B, C) == cc.trace_index_sum(f, A, B, C)


def test_trace_over_trailing_factors():
    f = identity(T(2, 3, 2), CRat)
    assert cc.trace_over(f, T(3, 2)) == scalar_mul(scalar(6, CRat), identity(T(2), CRat))
    with pytest.raises(ObjectMismatch):
        cc.split_trailing(T(2, 3), T(2))


# -- projectors and inner products ---------------------------------------------

def test_projector_examples():
    one = identity(T(1), CRat)
    assert cc.projector(one).rows == ((CRat(1),),)
    P = cc.projector(identity(T(2), CRat))
    corners = {(0, 0), (0, 3), (3, 0), (3, 3)}
    assert all((x == CRat(1)) == ((j, i) in corners) for j, r in enumerate(P.rows)
               for i, x in enumerate(r))


def test_normalization_examples():
    assert compose(cc.coname(cc.conjugate(identity(T(2), CRat))), cc.name(identity(T(2), CRat))) \
        == scalar(2, CRat)
    assert cc.normalization_scalar(identity(T(2), CRat)) == scalar(CRat.parse("1/2"))
    f = Morphism([["1+i"]], 1, 1, CRat)
    assert cc.normalization_scalar(f) == scalar(CRat.parse("1/2"))
    with pytest.raises(NotInvertible):
        cc.normalization_scalar(Morphism([[0]], 1, 1, CRat))


@given(data=st.data())
def test_projector_laws(data):
    f = data.draw(morphisms(CRat, data.draw(objects(max_factors=1)), data.draw(objects(max_factors=1))))
    P = cc.projector(f)
    assert cc.adjoint(P) == P
    if not f.is_zero():
        Q = cc.normalized_projector(f)
        assert compose(Q, Q) == Q
        assert compose(Q, cc.name(f)) == cc.name(f)
        assert compose(cc.coname(cc.conjugate(f)), Q) == cc.coname(cc.conjugate(f))


def test_relational_inner_product():
    A = T(3)

    def subset(xs):
        return column([1 if k in xs else 0 for k in range(3)], A, Bool)

    assert cc.inner_product(subset({0}), subset({0, 1})) == scalar(Bool.one)
    assert cc.inner_product(subset({0}), subset({1, 2})) == scalar(Bool.zero)


def test_complex_inner_product():
    psi = column([1, "i"], T(2))
    assert cc.inner_product(psi, psi) == scalar(2, CRat)
    with pytest.raises(ObjectMismatch):
        cc.inner_product(psi, column([1], T(1)))


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_inner_product_forms_agree(S, data):
    A = data.draw(objects(allow_unit=False))
    psi, phi = data.draw(morphisms(S, UNIT, A)), data.draw(morphisms(S, UNIT, A))
    assert cc.inner_product(psi, phi) == cc.inner_product_counit(psi, phi)


def test_unitarity_examples():
    perm = Morphism([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 3, 3, NNRat)
    assert cc.is_unitary(perm)
    assert not cc.is_unitary(Morphism([[1, 1], [0, 1]], 2, 2, CRat))
    assert cc.is_unitary(Morphism([["i", 0], [0, 1]], 2, 2, CRat))
    assert not cc.is_unitary(Morphism([[1, 0]], 2, 1, CRat))
