import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellkit.cyclotomic import Cyc
from cellkit.errors import IntegrityError, InvalidInput
from cellkit.grouptheory import FiniteGroup, character_table, h2_classes
from cellkit.grouptheory.cohomology import (
    TwoCocycle,
    ZpaEchelon,
    are_cohomologous,
    central_extension_from_cocycle,
    cocycle_is_trivial,
    common_modulus,
    irrep_count_with_central_character,
    projective_irrep_count,
    projective_irrep_degrees,
    regular_classes,
)


# ---------------------------------------------------------------------------
# the Z/p^a echelon itself, against brute force
# ---------------------------------------------------------------------------


@st.composite
def small_systems(draw):
    p, a = draw(st.sampled_from([(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)]))
    m = p**a
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    mat = draw(
        st.lists(
            st.lists(st.integers(0, m - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return p, a, np.array(mat, dtype=np.int64)


@given(small_systems())
@settings(max_examples=120, deadline=None)
def test_echelon_kernel_brute_force(system):
    p, a, A = system
    m = p**a
    rows, cols = A.shape
    ech = ZpaEchelon(p, a, cols)
    for row in A:
        if row.any():
            ech.insert(row.copy())
    gens = ech.kernel_generators()
    # every generator solves the system
    for g in gens:
        assert not ((A @ g) % m).any()
    # generated subgroup equals the brute-force kernel
    brute = {
        vec
        for vec in itertools.product(range(m), repeat=cols)
        if not ((A @ np.array(vec)) % m).any()
    }
    span = {tuple([0] * cols)}
    frontier = [np.zeros(cols, dtype=np.int64)]
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = tuple(((v + g) % m).tolist())
                if w not in span:
                    span.add(w)
                    new.append(np.array(w, dtype=np.int64))
        frontier = new
    assert span == brute
    # reduce() is a canonical form for row-space membership
    for row in A:
        assert not ech.reduce(row.copy()).any()


# ---------------------------------------------------------------------------
# Klein four-group, brute force over all 2-cochains
# ---------------------------------------------------------------------------


def test_klein_brute_force_class_count(klein):
    """Enumerate all 512 normalized mod-2 cochains on the Klein group, keep
    the cocycles, and quotient by coboundaries plus character carries."""
    n = klein.order
    t = klein.mult_table()
    pairs = [(g, h) for g in range(1, n) for h in range(1, n)]
    idx = {p: i for i, p in enumerate(pairs)}

    def full(vec):
        tab = np.zeros((n, n), dtype=np.int64)
        for (g, h), i in idx.items():
            tab[g, h] = vec[i]
        return tab

    cocycles = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        tab = full(bits)
        ok = True
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    if (tab[g, h] + tab[t[g, h], k] - tab[h, k] - tab[g, t[h, k]]) % 2:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            cocycles.append(bits)
    # boundary subgroup: d(delta_x) and the carry cocycles chi cup chi
    bounds = set()
    gens = []
    for x in range(1, n):
        vec = [0] * len(pairs)
        for (g, h), i in idx.items():
            vec[i] = (int(g == x) + int(h == x) - int(t[g, h] == x)) % 2
        gens.append(tuple(vec))
    for chi_bits in itertools.product((0, 1), repeat=n - 1):
        chi = [0] + list(chi_bits)
        if any((chi[g] + chi[h] - chi[t[g, h]]) % 2 for g in range(n) for h in range(n)):
            continue
        vec = [chi[g] * chi[h] for (g, h) in pairs]
        gens.append(tuple(vec))
    span = {tuple([0] * len(pairs))}
    frontier = list(span)
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % 2 for a, b in zip(v, g))
                if w not in span:
                    span.add(w)
                    new.append(w)
        frontier = new
    classes = {min(tuple((a + b) % 2 for a, b in zip(c, s)) for s in span) for c in cocycles}
    assert len(classes) == 2
    # and the production path agrees
    assert h2_classes(klein).class_count == 2


# ---------------------------------------------------------------------------
# class counts across a zoo of groups
# ---------------------------------------------------------------------------


def _z33():
    return FiniteGroup.from_generators([(1, 2, 0, 4, 5, 3, 7, 8, 6), (3, 4, 5, 6, 7, 8, 0, 1, 2)], 9)


def _z4xz2():
    return FiniteGroup.from_generators([(1, 2, 3, 0, 4, 5), (0, 1, 2, 3, 5, 4)], 6)


def _z4xz4():
    a = tuple(list(range(4))[1:] + [0]) + tuple(range(4, 8))
    b = tuple(range(4)) + tuple(list(range(4, 8))[1:] + [4])
    # act on 4 + 4 points as Z4 x Z4
    return FiniteGroup.from_generators([(1, 2, 3, 0, 4, 5, 6, 7), (0, 1, 2, 3, 5, 6, 7, 4)], 8)


@pytest.mark.parametrize(
    "maker,count",
    [
        (lambda: FiniteGroup.cyclic(1), 1),
        (lambda: FiniteGroup.cyclic(4), 1),
        (lambda: FiniteGroup.cyclic(6), 1),
        (lambda: FiniteGroup.symmetric(3), 1),
        (lambda: FiniteGroup.dihedral(4), 2),
        (lambda: FiniteGroup.dihedral(5), 1),
        (lambda: FiniteGroup.dihedral(6), 2),
        (lambda: FiniteGroup.alternating(4), 2),
        (lambda: FiniteGroup.symmetric(4), 2),
        (_z33, 3),
        (_z4xz2, 2),
        (_z4xz4, 4),
    ],
)
def test_h2_class_counts(maker, count):
    assert h2_classes(maker()).class_count == count


def test_h2_every_subgroup_of_s3(S3):
    from cellkit.grouptheory import subgroup_classes

    for cls in subgroup_classes(S3):
        assert h2_classes(cls.representative).class_count == 1


def test_h2_explicit_modulus(S4):
    assert h2_classes(S4, 2).class_count == 2
    assert h2_classes(S4, 12).class_count == 2
    z33 = _z33()
    assert h2_classes(z33, 3).class_count == 3
    with pytest.raises(InvalidInput):
        h2_classes(z33, 2)  # misses the 3-torsion; error advises a larger n


def test_h2_representative_integrity(klein):
    result = h2_classes(klein)
    assert result.class_orders == [1, 2]
    for rep in result.representatives:
        rep.verify()
    psi = result.representatives[1]
    assert not cocycle_is_trivial(psi)
    assert cocycle_is_trivial(psi.baer_sum(psi))


# ---------------------------------------------------------------------------
# cocycle calculus
# ---------------------------------------------------------------------------


def test_restrict_trivial(klein, S4):
    triv = TwoCocycle.trivial(S4, 2)
    sub = S4.subgroup(sorted(S4.subgroup_closure([S4.index[(1, 0, 3, 2)]])))
    assert triv.restrict(sub).is_identically_zero


def test_baer_sum_inverse_is_trivial(klein, nontrivial_cocycle):
    psi = nontrivial_cocycle(klein)
    assert cocycle_is_trivial(psi.baer_sum(psi.invert()))
    assert are_cohomologous(psi, psi)


def test_conjugation_preserves_class_on_klein_in_s4(S4, nontrivial_cocycle):
    # the Klein subgroup is normal in S4; conjugation permutes it
    kl_idx = sorted(
        S4.subgroup_closure([S4.index[(1, 0, 3, 2)], S4.index[(2, 3, 0, 1)]])
    )
    kl = S4.subgroup(kl_idx)
    psi = nontrivial_cocycle(kl)
    for g in range(S4.order):
        conj = psi.conjugate(S4.elements[g])
        assert conj.group.elements == kl.elements  # normal subgroup
        conj2 = TwoCocycle(kl, conj.modulus, conj.values)
        assert are_cohomologous(conj2, psi)


def test_restriction_well_defined_on_classes():
    d8 = FiniteGroup.dihedral(4)
    result = h2_classes(d8)
    psi = result.representatives[1]
    # restrict to the rotation subgroup Z4: must become trivial (cyclic)
    rot = d8.subgroup(sorted(d8.subgroup_closure([d8.index[(1, 2, 3, 0)]])))
    assert cocycle_is_trivial(psi.restrict(rot))


def test_rescale_and_common_modulus(klein, nontrivial_cocycle):
    psi = nontrivial_cocycle(klein)
    up = psi.rescale(4)
    assert up.modulus == 4
    a, b = common_modulus(up, psi)
    assert a.modulus == b.modulus == 4
    assert (a.values == b.values).all()
    with pytest.raises(InvalidInput):
        psi.rescale(3)


# ---------------------------------------------------------------------------
# central extensions and projective counts
# ---------------------------------------------------------------------------


def test_trivial_extension_is_direct_product(klein):
    ext = central_extension_from_cocycle(klein, TwoCocycle.trivial(klein, 2))
    assert ext.total.order == 8
    assert ext.total.exponent() == 2  # Z/2 x Klein


def test_klein_nonsplit_extension(klein, nontrivial_cocycle):
    psi = nontrivial_cocycle(klein)
    ext = central_extension_from_cocycle(klein, psi)
    assert ext.total.order == 8
    assert ext.total.exponent() == 4  # D8 or Q8
    assert irrep_count_with_central_character(ext, 1) == 1
    # section and projection are consistent
    for h in range(4):
        assert ext.projection[ext.section[h]] == h


def test_s4_binary_extension(S4, nontrivial_cocycle):
    psi = nontrivial_cocycle(S4)
    ext = central_extension_from_cocycle(S4, psi)
    assert ext.total.order == 48
    assert irrep_count_with_central_character(ext, 1) == 3  # the 2.S4 row


def test_central_character_counts_sum(klein, nontrivial_cocycle):
    psi = nontrivial_cocycle(klein)
    ext = central_extension_from_cocycle(klein, psi)
    total = sum(irrep_count_with_central_character(ext, r) for r in range(2))
    assert total == character_table(ext.total).irrep_count


def test_regular_classes_and_projective_counts(klein, S5, nontrivial_cocycle):
    assert projective_irrep_count(klein, None) == 4
    psi = nontrivial_cocycle(klein)
    assert len(regular_classes(klein, psi)) == 1
    assert projective_irrep_count(klein, psi) == 1
    assert projective_irrep_degrees(klein, psi) == [2]
    psi5 = nontrivial_cocycle(S5)
    assert projective_irrep_count(S5, psi5) == 5
    assert projective_irrep_count(S5, None) == 7


def test_a5_binary_count():
    a5 = FiniteGroup.alternating(5)
    result = h2_classes(a5)
    assert result.class_count == 2
    assert projective_irrep_count(a5, result.representatives[1]) == 4  # 2.A5 spin reps
