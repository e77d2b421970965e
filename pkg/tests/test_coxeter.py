import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellkit.coxeter import INFINITE, datum_from_type, trivial_datum
from cellkit.errors import GuardExceeded, InvalidInput


def test_cartan_matrices(datum):
    assert datum("A2").coxeter_matrix == ((1, 3), (3, 1))
    assert datum("G2").coxeter_matrix == ((1, 6), (6, 1))
    b3 = datum("B3").coxeter_matrix
    assert b3[0][1] == 3 and b3[1][2] == 4  # the last bond is the 4-bond
    f4 = datum("F4").coxeter_matrix
    assert f4[1][2] == 4 and f4[0][1] == 3 and f4[2][3] == 3
    prod = datum("A1xA1").coxeter_matrix
    assert prod == ((1, 2), (2, 1))


def test_bad_labels():
    with pytest.raises(InvalidInput):
        datum_from_type("X9")
    with pytest.raises(InvalidInput):
        datum_from_type("E5")
    with pytest.raises(InvalidInput):
        datum_from_type("[[1,3],[4,1]]")  # asymmetric


def test_normalize_examples(datum):
    d = datum("A2")
    assert d.normalize([0, 0]).word == ()
    # [2,1,2] and [1,2,1] are braid-equivalent; ShortLex picks [1,2,1]
    assert d.normalize([1, 0, 1]).word == (0, 1, 0)
    assert d.normalize([0, 1, 0]).word == (0, 1, 0)
    d3 = datum("A3")
    w0 = d3.longest_element()
    assert w0.length == 6  # n(n+1)/2


def test_multiply_inverse_descents(datum):
    d = datum("A2")
    s1, s2 = d.generator(0), d.generator(1)
    assert d.multiply(s1, s2).word == (0, 1)
    w0 = d.longest_element()
    assert d.right_descents(w0) == frozenset({0, 1})
    assert d.left_descents(w0) == frozenset({0, 1})
    rng = random.Random(7)
    for _ in range(200):
        w = d.normalize([rng.randrange(2) for _ in range(rng.randrange(8))])
        assert d.multiply(w, d.inverse(w)) == d.identity


@pytest.mark.parametrize(
    "label,order",
    [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12),
     ("A1xA1", 4), ("D4", 192), ("F4", 1152)],
)
def test_enumeration_counts(datum, label, order):
    d = datum(label)
    assert d.order() == order
    if order <= 200:
        elements = d.enumerate_elements()
        assert len(elements) == order
        assert len(set(e.word for e in elements)) == order
        # sorted by (length, ShortLex)
        keys = [(e.length, e.word) for e in elements]
        assert keys == sorted(keys)


def test_f4_order_only(datum):
    # enumeration is exercised once here to confirm the classified order
    assert len(datum("F4").enumerate_elements()) == 1152


@pytest.mark.parametrize("label", ["A2", "B2", "A3", "G2"])
def test_multiplication_associative_bulk(datum, label):
    d = datum(label)
    rng = random.Random(hash(label) & 0xFFFF)
    n = d.generator_count
    for _ in range(10_000):
        x = d.normalize([rng.randrange(n) for _ in range(rng.randrange(5))])
        y = d.normalize([rng.randrange(n) for _ in range(rng.randrange(5))])
        z = d.normalize([rng.randrange(n) for _ in range(rng.randrange(5))])
        assert d.multiply(d.multiply(x, y), z) == d.multiply(x, d.multiply(y, z))


@given(st.lists(st.integers(min_value=0, max_value=2), max_size=12))
def test_normalize_idempotent(word):
    d = datum_from_type("A3")
    w = d.normalize(word)
    assert d.normalize(w.word) == w


@given(st.lists(st.integers(min_value=0, max_value=2), max_size=12))
def test_length_steps_and_descents(word):
    d = datum_from_type("B3")
    w = d.normalize(word)
    for s in range(3):
        ws = d.multiply(w, d.generator(s))
        assert abs(ws.length - w.length) == 1
        assert (s in d.right_descents(w)) == (ws.length < w.length)


def test_bruhat(datum):
    d = datum("A2")
    e = d.identity
    for w in d.enumerate_elements():
        assert d.bruhat_leq(e, w)
    assert d.bruhat_leq(d.generator(0), d.normalize([0, 1]))
    assert not d.bruhat_leq(d.generator(1), d.generator(0))
    d3 = datum("A3")
    elements = d3.enumerate_elements()
    w0 = elements[-1]
    for x in elements:
        assert d3.bruhat_leq(x, w0)
    # antisymmetry, exhaustively over all 24^2 pairs
    for x in elements:
        for y in elements:
            if d3.bruhat_leq(x, y) and d3.bruhat_leq(y, x):
                assert x == y
            if d3.bruhat_leq(x, y):
                assert x.length <= y.length


def test_diagram_automorphisms(datum):
    d = datum("A1xA1")
    swap = d.diagram_automorphism([1, 0])
    x = d.normalize([0])
    assert swap.apply(x).word == (1,)
    a3 = datum("A3")
    flip = a3.diagram_automorphism([2, 1, 0])
    w = a3.normalize([0, 1])
    assert flip.apply(w) == a3.normalize([2, 1])
    with pytest.raises(InvalidInput):
        datum("B3").diagram_automorphism([2, 1, 0])  # breaks the 4-bond


def test_general_engine_dihedral_and_affine():
    i5 = datum_from_type("[[1,5],[5,1]]")
    assert i5.finite and i5.order() == 10
    assert len(i5.enumerate_elements()) == 10
    assert i5.normalize([1, 0, 1, 0, 1, 0, 1]).word == (0, 1, 0)

    aff = datum_from_type(f"[[1,{INFINITE}],[{INFINITE},1]]")
    assert not aff.finite
    x = aff.normalize([0, 1, 0, 1, 0])
    assert x.length == 5
    assert aff.multiply(x, aff.inverse(x)) == aff.identity
    with pytest.raises(GuardExceeded):
        aff.enumerate_elements()
    with pytest.raises(GuardExceeded):
        aff.normalize([0, 1] * 40)


def test_h3_via_matrix():
    h3 = datum_from_type("[[1,5,2],[5,1,3],[2,3,1]]")
    assert h3.finite and h3.order() == 120


def test_trivial_datum():
    t = trivial_datum()
    assert t.finite and t.order() == 1
    assert t.enumerate_elements() == [t.identity]


def test_unsupported_bond_rejected():
    with pytest.raises(InvalidInput):
        datum_from_type("[[1,7],[7,1]]")
