from hypothesis import given
from hypothesis import strategies as st

from cellkit.laurent import LaurentPoly, V_PLUS_VINV

polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-20, max_value=20),
    max_size=6,
).map(LaurentPoly)


def test_basic_arithmetic():
    v = LaurentPoly.v(1)
    vinv = LaurentPoly.v(-1)
    assert (v + vinv) == V_PLUS_VINV
    assert (v + vinv) * (v - vinv) == LaurentPoly({2: 1, -2: -1})
    assert LaurentPoly({1: 1, 2: 3}).bar() == LaurentPoly({-1: 1, -2: 3})
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly({0: 1}) == 1


def test_degree_valuation():
    p = LaurentPoly({-3: 2, 5: 1})
    assert p.degree() == 5
    assert p.valuation() == -3
    assert LaurentPoly.zero().degree() is None
    assert p.coeff(-3) == 2 and p.coeff(0) == 0


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == LaurentPoly.zero()


@given(polys)
def test_bar_is_involutive_automorphism(p):
    assert p.bar().bar() == p


@given(polys, polys)
def test_bar_multiplicative(a, b):
    assert (a * b).bar() == a.bar() * b.bar()


@given(polys)
def test_shift(p):
    assert p.shift(3).shift(-3) == p
    assert p.shift(2) == p * LaurentPoly.v(2)


def test_format():
    assert LaurentPoly({0: 1, 1: 1}).format("q") == "1+q"
    assert LaurentPoly({-1: 1, 1: 1}).format() == "v^-1+v"
    assert LaurentPoly({1: -2}).format() == "-2v"
    assert LaurentPoly.zero().format() == "0"


def test_subs():
    p = LaurentPoly({-1: 1, 1: 1})
    assert p.subs_one() == 2
    assert LaurentPoly({0: 3, 2: 1}).subs_int(2) == 7
