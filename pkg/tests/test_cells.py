import pytest

from cellkit import cells as C
from cellkit.basedring import fpdim
from cellkit.coxeter import datum_from_type, trivial_datum
from cellkit.errors import IntegrityError
from cellkit.grouptheory import FiniteGroup
from cellkit.hecke import ExtendedHeckeDatum

from oracles import element_to_permutation, rsk, shape


def partition_of(label):
    return C.cell_partition(datum_from_type(label))


def left_cell_containing(p, key):
    return [k for k in p.keys if p.left_id[k] == p.left_id[key]]


def gamma_gamma_inv(p, cell_member):
    gam = left_cell_containing(p, cell_member)
    inv = {p.inverse_key(k) for k in gam}
    return sorted(set(gam) & inv, key=lambda k: (k.length, k.word))


def test_a1_cells():
    p = partition_of("A1")
    assert [len(c) for c in p.two_cells] == [1, 1]
    assert p.a_value == {0: 0, 1: 1}


def test_a2_cells_and_a_values():
    p = partition_of("A2")
    assert sorted(len(c) for c in p.two_cells) == [1, 1, 4]
    assert p.a_value == {0: 0, 1: 1, 2: 3}
    assert len(p.left_cells) == 4


def test_a3_counts():
    p = partition_of("A3")
    assert len(p.two_cells) == 5     # partitions of 4
    assert len(p.left_cells) == 10   # involutions of S4


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "G2"])
def test_a_function_boundary_values(label):
    p = partition_of(label)
    d = p.datum
    e_cell = p.two_id[d.identity]
    w0_cell = p.two_id[d.longest_element()]
    assert p.a_value[e_cell] == 0
    assert p.a_value[w0_cell] == d.longest_element().length


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rsk_cells_small(n):
    label = f"A{n - 1}"
    p = partition_of(label)
    d = p.datum
    by_q, by_p, by_shape = {}, {}, {}
    for k in p.keys:
        P, Q = rsk(element_to_permutation(d, k))
        by_q.setdefault(Q, set()).add(k)
        by_p.setdefault(P, set()).add(k)
        by_shape.setdefault(shape(P), set()).add(k)
    assert {frozenset(c) for c in p.left_cells} == {frozenset(v) for v in by_q.values()}
    assert {frozenset(c) for c in p.right_cells} == {frozenset(v) for v in by_p.values()}
    assert {frozenset(c) for c in p.two_cells} == {frozenset(v) for v in by_shape.values()}


def test_j_ring_singleton_e():
    p = partition_of("A2")
    ring = C.j_ring(p, [p.datum.identity])
    assert ring.rank == 1 and ring.gamma(0, 0, 0) == 1


def test_j_ring_a2_gamma_gamma_inv():
    p = partition_of("A2")
    s1 = p.datum.generator(0)
    subset = gamma_gamma_inv(p, s1)
    assert subset == [s1]
    ring = C.j_ring(p, subset)
    assert ring.rank == 1 and ring.gamma(0, 0, 0) == 1


def test_j_ring_g2_middle():
    p = partition_of("G2")
    s1 = p.datum.generator(0)
    subset = gamma_gamma_inv(p, s1)
    assert len(subset) == 3
    ring = C.j_ring(p, subset)
    dims, total = fpdim(ring)
    assert sorted(round(x, 6) for x in dims) == [1.0, 1.0, 2.0]
    assert abs(total - 6.0) < 1e-8


@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_gamma_symmetry(label):
    # gamma_{x,y,z} = gamma_{y^-1, x^-1, z^-1} on every two-sided cell
    p = partition_of(label)
    for cid, cell in enumerate(p.two_cells):
        a = p.a_value[cid]
        members = cell[: min(len(cell), 6)]
        for x in members:
            for y in members:
                row = p.gamma(x, y, a)
                back = p.gamma(p.inverse_key(y), p.inverse_key(x), a)
                assert {p.inverse_key(k): c for k, c in row.items()} == back


def test_distinguished_involutions_a2():
    p = partition_of("A2")
    found = []
    for cid in range(len(p.two_cells)):
        found += C.distinguished_involutions(p, cid)
    words = sorted(k.word for k in found)
    assert words == sorted([(), (0,), (1,), (0, 1, 0)])


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "G2"])
def test_distinguished_involution_counts(label):
    p = partition_of(label)
    for cid, cell in enumerate(p.two_cells):
        dis = C.distinguished_involutions(p, cid)
        n_left = len({p.left_id[k] for k in cell})
        assert len(dis) == n_left
        for d in dis:
            assert p.multiply_keys(d, d) == p.identity_key()


def test_cell_module_characters_a2():
    p = partition_of("A2")
    d = p.datum
    triv = C.cell_module_character(p, [d.identity])
    assert all(v == 1 for v in triv.character.values())
    sign = C.cell_module_character(p, [d.longest_element()])
    assert sign.character[(0,)] == -1
    mid = C.cell_module_character(p, left_cell_containing(p, d.generator(0)))
    assert mid.dimension == 2
    assert mid.character[()] == 2 and mid.character[(0, 1)] == -1


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_fact_star_small(label):
    p = partition_of(label)
    for c1 in p.left_cells:
        for c2 in p.left_cells:
            assert C.hom_dim(p, c1, c2) == C.intersection_count(p, c1, c2)


def test_cell_characters_are_genuine(datum):
    p = partition_of("A3")
    for cell in p.left_cells:
        C.cell_module_character(p, cell, validate=True)


def test_extended_trivial_omega_identity_correspondence():
    d = datum_from_type("A2")
    base = C.cell_partition(d)
    om = FiniteGroup.trivial(1)
    ed = ExtendedHeckeDatum(d, om, (d.identity_automorphism(),))
    ext = C.compute_cells(ed)
    mapping = C.extended_cell_orbits(base, ext)
    assert mapping == {i: frozenset({i}) for i in range(len(base.two_cells))}


def test_extended_swap_fuses_middle_cells():
    d = datum_from_type("A1xA1")
    om = FiniteGroup.symmetric(2)
    ed = ExtendedHeckeDatum(
        d, om, (d.identity_automorphism(), d.diagram_automorphism([1, 0]))
    )
    base = C.cell_partition(d)
    ext = C.compute_cells(ed)
    mapping = C.extended_cell_orbits(base, ext)
    sizes = sorted(len(v) for v in mapping.values())
    assert sizes == [1, 1, 2]
    assert len(ext.two_cells) == 3


def test_example_one_cell_trivial_coxeter_part():
    td = trivial_datum()
    om = FiniteGroup.cyclic(2)
    ed = ExtendedHeckeDatum(td, om, tuple(td.identity_automorphism() for _ in range(2)))
    ext = C.compute_cells(ed)
    assert len(ext.two_cells) == 1
    assert len(ext.two_cells[0]) == 2
    mapping = C.extended_cell_orbits(C.compute_cells(td), ext)
    assert mapping == {0: frozenset({0})}
    # its asymptotic ring is the group ring Z[Z/2]
    ring = C.j_ring(ext, ext.two_cells[0])
    assert ring.rank == 2
    assert sorted(ring.unit_components) == [0]
    assert ring.gamma(1, 1, 0) == 1


def test_extended_distinguished_involutions():
    d = datum_from_type("A1xA1")
    om = FiniteGroup.symmetric(2)
    ed = ExtendedHeckeDatum(
        d, om, (d.identity_automorphism(), d.diagram_automorphism([1, 0]))
    )
    ext = C.compute_cells(ed)
    for cid, cell in enumerate(ext.two_cells):
        dis = C.distinguished_involutions(ext, cid)
        assert len(dis) == len({ext.left_id[k] for k in cell})
