from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compactcat.semiring import (
    CONJUGATION,
    EMBED_NNRAT,
    HOMS,
    SUPPORT,
    SUPPORT_NNRAT,
    Bool,
    CRat,
    NNRat,
    NotInvertible,
    SemiringError,
    SemiringMismatch,
    check_hom_laws,
    get_hom,
    get_semiring,
    parse_literal,
)

from conftest import SEMIRINGS, values


def test_bool_addition_is_idempotent():
    assert Bool.one + Bool.one == Bool.one


def test_crat_addition():
    assert CRat(1, 2) + CRat(3, -2) == CRat(4)


def test_nnrat_addition():
    assert NNRat(Fraction(1, 3)) + NNRat(Fraction(1, 6)) == NNRat(Fraction(1, 2))


def test_conjugate():
    assert CRat(3, 4).conj() == CRat(3, -4)
    assert str(CRat(3, 4).conj()) == "3-4i"


def test_inverses():
    assert NNRat(2).inverse() == NNRat(Fraction(1, 2))
    assert CRat(1, 1).inverse() == CRat(Fraction(1, 2), Fraction(-1, 2))
    assert Bool.one.inverse() == Bool.one
    for S in SEMIRINGS:
        with pytest.raises(NotInvertible):
            S.zero.inverse()


def test_nnrat_rejects_negatives():
    with pytest.raises(SemiringError):
        NNRat(-1)


def test_mixing_semirings_fails():
    with pytest.raises(SemiringMismatch):
        CRat(1) + NNRat(1)


@pytest.mark.parametrize("text, re, im", [
    ("3", 3, 0), ("-1/2", Fraction(-1, 2), 0), ("1+2i", 1, 2), ("2-1/3i", 2, Fraction(-1, 3)),
    ("-i", 0, -1), ("5i", 0, 5), ("i", 0, 1), ("true", 1, 0), ("false", 0, 0),
])
def test_parse_literal(text, re, im):
    lit = parse_literal(text)
    assert (lit.re, lit.im) == (re, im)


def test_parse_rejects_out_of_semiring_values():
    with pytest.raises(SemiringError):
        NNRat.parse("-1")
    with pytest.raises(SemiringError):
        NNRat.parse("1+i")
    with pytest.raises(SemiringError):
        Bool.parse("2")


def test_get_semiring_and_hom():
    assert get_semiring("crat") is CRat
    assert get_hom("crat-bool") is SUPPORT
    with pytest.raises(SemiringError):
        get_semiring("reals")
    with pytest.raises(SemiringError):
        get_hom("bool-crat")


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_semiring_axioms(S, data):
    x, y, z = (data.draw(values(S)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + S.zero == x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * S.one == x
    assert x * (y + z) == x * y + x * z
    assert x * S.zero == S.zero
    assert x.conj().conj() == x
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()


@pytest.mark.parametrize("S", SEMIRINGS)
@given(data=st.data())
def test_inverse_is_two_sided(S, data):
    x = data.draw(values(S))
    if x:
        assert x * x.inverse() == S.one


def test_support_examples():
    assert SUPPORT(CRat(5, -2)) == Bool.one
    assert SUPPORT(CRat(0)) == Bool.zero
    h = Fraction(1, 2)
    assert SUPPORT_NNRAT(NNRat(h) + NNRat(h)) == SUPPORT_NNRAT(NNRat(h)) + SUPPORT_NNRAT(NNRat(h))


def test_support_is_strictly_subadditive_at_one_minus_one():
    x, y = CRat(1), CRat(-1)
    assert SUPPORT(x + y) == Bool.zero
    assert SUPPORT(x) + SUPPORT(y) == Bool.one
    assert SUPPORT(x + y) < SUPPORT(x) + SUPPORT(y)


@pytest.mark.parametrize("name", sorted(HOMS))
@given(data=st.data())
def test_hom_laws(name, data):
    h = HOMS[name]
    xs = [data.draw(values(h.source)) for _ in range(5)]
    ys = [data.draw(values(h.source)) for _ in range(5)]
    assert check_hom_laws(h, xs, ys) == []


def test_hom_law_checker_reports_violations():
    # support, declared exact, is caught at 1 + (-1)
    from dataclasses import replace
    exact = replace(SUPPORT, lax=False)
    assert check_hom_laws(exact, [CRat(1)], [CRat(-1)]) != []


def test_hom_rejects_wrong_source():
    with pytest.raises(SemiringMismatch):
        SUPPORT(NNRat(1))
    assert EMBED_NNRAT(NNRat(Fraction(2, 3))) == CRat(Fraction(2, 3))
    assert CONJUGATION(CRat(0, 1)) == CRat(0, -1)


def test_lax_needs_ordered_target():
    from compactcat.semiring import SemiringHom
    with pytest.raises(SemiringError):
        SemiringHom("bad", Bool, CRat, lambda x: CRat(int(bool(x))), lax=True)
