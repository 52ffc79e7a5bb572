import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from compactcat.matcat import Morphism, TensorObject
from compactcat.semiring import Bool, CRat, NNRat

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")

SEMIRINGS = (Bool, NNRat, CRat)

small_q = st.builds(Fraction, st.integers(-6, 6), st.sampled_from((1, 2, 3)))
small_nnq = st.builds(Fraction, st.integers(0, 6), st.sampled_from((1, 2, 3)))


def values(S):
    if S is Bool:
        return st.booleans().map(Bool)
    if S is NNRat:
        return small_nnq.map(NNRat._of)
    return st.tuples(small_q, small_q).map(lambda p: CRat._of(*p))


@st.composite
def objects(draw, max_factors=2, max_dim=3, allow_unit=True):
    n = draw(st.integers(0 if allow_unit else 1, max_factors))
    return TensorObject(tuple((draw(st.integers(1, max_dim)), draw(st.booleans()))
                              for _ in range(n)))


@st.composite
def morphisms(draw, S, dom=None, cod=None, max_dim=3):
    dom = dom if dom is not None else draw(objects(max_dim=max_dim))
    cod = cod if cod is not None else draw(objects(max_dim=max_dim))
    # entries come from a drawn RNG: drawing each one through hypothesis is slow
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    density = draw(st.sampled_from((0.3, 0.7, 1.0)))
    rows = tuple(tuple(S.random(rng, density) for _ in range(dom.total_dim))
                 for _ in range(cod.total_dim))
    return Morphism._raw(rows, dom, cod, S)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
