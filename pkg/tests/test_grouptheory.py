import itertools

import numpy as np
import pytest

from cellkit.errors import GuardExceeded
from cellkit.grouptheory import (
    FiniteGroup,
    character_table,
    subgroup_classes,
    sylow_subgroup,
)
from cellkit.guards import Guards


def test_generation_examples():
    g1 = FiniteGroup.from_generators([(1, 0, 2, 3), (1, 2, 3, 0)], 4)
    assert g1.order == 24
    g2 = FiniteGroup.from_generators([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], 5)
    assert g2.order == 120
    kl = FiniteGroup.from_generators([(1, 0, 3, 2), (2, 3, 0, 1)], 4)
    assert kl.order == 4
    assert len(kl.center()) == 4


def test_identity_first_and_tables(S4):
    assert S4.elements[0] == (0, 1, 2, 3)
    t = S4.mult_table()
    inv = S4.inverse_table()
    rng = np.random.default_rng(0)
    for _ in range(100):
        i, j = rng.integers(0, 24, 2)
        pi, pj = S4.elements[i], S4.elements[j]
        assert S4.elements[t[i, j]] == tuple(pi[pj[x]] for x in range(4))
    for i in range(24):
        assert t[i, inv[i]] == 0


def test_conjugacy_classes(S4, S5):
    assert sorted(len(c) for c in S4.conjugacy_classes()) == [1, 3, 6, 6, 8]
    assert sorted(len(c) for c in S5.conjugacy_classes()) == [1, 10, 15, 20, 20, 24, 30]
    # identity class first
    assert S5.conjugacy_classes()[0] == (0,)


def test_cycle_types(S5):
    types = {}
    for i in range(S5.order):
        t = S5.cycle_type(i)
        types[t] = types.get(t, 0) + 1
    assert types == {(): 1, (2,): 10, (2, 2): 15, (3,): 20, (2, 3): 20, (4,): 30, (5,): 24}


def test_subgroup_classes_counts(S4, S5):
    assert len(subgroup_classes(FiniteGroup.cyclic(6))) == 4
    assert len(subgroup_classes(S4)) == 11
    assert len(subgroup_classes(S5)) == 19


def test_subgroup_classes_s4_brute_force(S4):
    """Exhaustive cross-check: every subgroup of S4 is generated by at most
    three elements (orders <= 12 except S4 itself), so closing all <=3-subsets
    finds them all."""
    found = set()
    elems = range(S4.order)
    for a in elems:
        found.add(S4.subgroup_closure([a]))
    for a, b in itertools.combinations(elems, 2):
        found.add(S4.subgroup_closure([a, b]))
    for a, b, c in itertools.combinations(range(1, S4.order), 3):
        found.add(S4.subgroup_closure([a, b, c]))
    canon = {S4.canonical_conjugate(s) for s in found}
    classes = subgroup_classes(S4)
    assert len(canon) == len(classes) == 11
    assert canon == {c.indices for c in classes}


def test_subgroup_guard(S5):
    with pytest.raises(GuardExceeded):
        subgroup_classes(S5, Guards({"subgroup_group_order": 100}))


def test_character_degrees(S3, S5):
    assert character_table(S3).degrees == [1, 1, 2]
    assert character_table(S5).degrees == [1, 1, 4, 4, 5, 5, 6]
    assert character_table(FiniteGroup.alternating(5)).degrees == [1, 3, 3, 4, 5]
    assert character_table(FiniteGroup.dihedral(4)).degrees == [1, 1, 1, 1, 2]
    assert character_table(FiniteGroup.trivial()).degrees == [1]


def _q8():
    mul_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    enc = lambda s, ax: ax * 2 + (0 if s == 1 else 1)
    dec = lambda i: (1 if i % 2 == 0 else -1, i // 2)
    tab = [[0] * 8 for _ in range(8)]
    for a in range(8):
        for b in range(8):
            sa, xa = dec(a)
            sb, xb = dec(b)
            s, x = mul_axis[(xa, xb)]
            tab[a][b] = enc(sa * sb * s, x)
    return FiniteGroup.from_mult_table(tab)


def test_q8_character_table():
    q8 = _q8()
    assert q8.order == 8 and q8.exponent() == 4
    ct = character_table(q8)
    assert ct.degrees == [1, 1, 1, 1, 2]
    assert sum(d * d for d in ct.degrees) == 8


def test_character_table_determinism(S4):
    other = FiniteGroup.symmetric(4)
    a = character_table(S4)
    b = character_table(other)
    assert a.degrees == b.degrees
    assert [[(v.n, v.coeffs) for v in row] for row in a._values] == [
        [(v.n, v.coeffs) for v in row] for row in b._values
    ]


def test_degrees_divide_order():
    for G in [FiniteGroup.symmetric(4), FiniteGroup.alternating(4),
              FiniteGroup.dihedral(6), _q8()]:
        for d in character_table(G).degrees:
            assert G.order % d == 0


def test_sylow(S4, S5):
    assert len(sylow_subgroup(S4, 2)) == 8
    assert len(sylow_subgroup(S4, 3)) == 3
    assert len(sylow_subgroup(S5, 2)) == 8
    assert len(sylow_subgroup(S5, 3)) == 3
    assert len(sylow_subgroup(S5, 5)) == 5
    syl = sylow_subgroup(S5, 2)
    assert S5.is_closed(syl)


def test_double_cosets(S4):
    s2 = sorted(S4.subgroup_closure([S4.index[(1, 0, 2, 3)]]))
    cosets = S4.double_cosets(s2, s2)
    sizes = sorted(len(c) for _, c in cosets)
    assert sizes == [2, 2, 4, 4, 4, 4, 4]
    assert sum(sizes) == 24


def test_coset_space(S4):
    s3 = sorted(S4.subgroup_closure([S4.index[(1, 0, 2, 3)], S4.index[(0, 2, 1, 3)]]))
    reps, action = S4.coset_space(s3)
    assert action.shape == (24, 4)
    assert sorted(np.unique(action[0]).tolist()) == [0, 1, 2, 3]
