"""Cells in finite (and extended) Hecke algebras.

Left/right/two-sided preorders are generated by occurrence in KL products
b_x b_w (the left relation varies the left factor, the right relation the
right factor) and closed transitively; cells are the strongly connected
components.  The a-function is the v^-1-degree bound of the structure
constants h_{x,y,z}; gamma constants are the coefficients at v^-a(c) and
assemble into based rings with the distinguished involutions as unit
components.

Extended data (Coxeter part tensored with a length-zero group Omega acting
by diagram automorphisms) are handled on the basis C_{(y, o)} directly:
(b_{y1} (x) o1)(b_{y2} (x) o2) = b_{y1} b_{Y(o1) y2} (x) o1 o2, so all
extended structure constants are base constants reindexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .basedring import BasedRing
from .coxeter import CoxeterDatum, GroupElement
from .errors import IntegrityError, InvalidInput
from .guards import DEFAULT, Guards
from .hecke import ExtendedHeckeDatum, HeckeEngine, hecke_engine, kl_table


# ---------------------------------------------------------------------------
# Strongly connected components (iterative Tarjan)
# ---------------------------------------------------------------------------


def _strong_components(n: int, edges: list[set[int]]) -> list[int]:
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, iter(sorted(edges[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(edges[w]))))
                    advanced = True
                    break
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


# ---------------------------------------------------------------------------
# Cell partitions
# ---------------------------------------------------------------------------


@dataclass
class CellPartition:
    """Left / right / two-sided cell decomposition with a-values."""

    kind: str                       # "plain" or "extended"
    datum: CoxeterDatum
    extended: ExtendedHeckeDatum | None
    keys: list                      # GroupElement or (GroupElement, omega index)
    key_pos: dict
    left_id: dict
    right_id: dict
    two_id: dict
    left_cells: list[list]
    right_cells: list[list]
    two_cells: list[list]
    a_value: dict                   # two-sided cell id -> a
    _engine: HeckeEngine
    _omega_maps: np.ndarray | None  # extended: omega x |W| element-index action

    # -- generic key arithmetic ------------------------------------------------

    def inverse_key(self, key):
        if self.kind == "plain":
            return self.datum.inverse(key)
        y, o = key
        om = self.extended.omega
        oi = om.inv(o)
        return (self.extended.apply(oi, self.datum.inverse(y)), oi)

    def multiply_keys(self, k1, k2):
        if self.kind == "plain":
            return self.datum.multiply(k1, k2)
        (y1, o1), (y2, o2) = k1, k2
        return (
            self.datum.multiply(y1, self.extended.apply(o1, y2)),
            self.extended.omega.mult(o1, o2),
        )

    def identity_key(self):
        return self.datum.identity if self.kind == "plain" else (self.datum.identity, 0)

    # -- gamma constants ----------------------------------------------------------

    def structure_h(self, k1, k2) -> dict:
        """All h-structure constants of C_{k1} C_{k2} as {key: LaurentPoly}."""
        engine = self._engine
        if self.kind == "plain":
            ix = self.datum.element_index(k1)
            iy = self.datum.element_index(k2)
            row = engine.products_for_y(iy)[ix]
            return {
                engine.elements[z]: engine.vector_to_poly(row[z])
                for z in np.nonzero(row.any(axis=1))[0]
            }
        (y1, o1), (y2, o2) = k1, k2
        y2p = self.extended.apply(o1, y2)
        ix = self.datum.element_index(y1)
        iy = self.datum.element_index(y2p)
        oo = self.extended.omega.mult(o1, o2)
        row = engine.products_for_y(iy)[ix]
        return {
            (engine.elements[z], oo): engine.vector_to_poly(row[z])
            for z in np.nonzero(row.any(axis=1))[0]
        }

    def gamma(self, k1, k2, a: int) -> dict:
        """Coefficients of v^-a in the structure constants of C_{k1} C_{k2}."""
        out = {}
        for key, poly in self.structure_h(k1, k2).items():
            c = poly.coeff(-a)
            if c:
                out[key] = c
        return out

    def left_cells_of(self, two_cell_id: int) -> list[list]:
        return [
            cell
            for cell in self.left_cells
            if self.two_id[self.key_pos_key(cell[0])] == two_cell_id
        ]

    def key_pos_key(self, key):
        return key

    def summary(self) -> dict:
        return {
            "elements": len(self.keys),
            "two_sided": [
                {
                    "id": cid,
                    "size": len(cell),
                    "a": self.a_value[cid],
                    "left_cells": sum(
                        1 for lc in self.left_cells if self.two_id[lc[0]] == cid
                    ),
                }
                for cid, cell in enumerate(self.two_cells)
            ],
        }


def _key_sort(key) -> tuple:
    if isinstance(key, tuple):
        y, o = key
        return (y.length, y.word, o)
    return (key.length, key.word)


def compute_cells(
    source: CoxeterDatum | ExtendedHeckeDatum, guards: Guards = DEFAULT
) -> CellPartition:
    """Cell partition of a finite datum or an extended datum."""
    if isinstance(source, ExtendedHeckeDatum):
        extended: ExtendedHeckeDatum | None = source
        datum = source.datum
        omega_order = source.omega.order
    else:
        extended = None
        datum = source
        omega_order = 1
    if not datum.finite:
        raise InvalidInput("cell computation needs a finite Coxeter part")
    guards.check("cell_elements", (datum.order() or 1) * omega_order)

    engine = hecke_engine(datum, guards)
    n = engine.n
    left_occ = engine.left_occurrences()
    right_occ = engine.right_occurrences()
    a_base = engine.a_values()

    if extended is None:
        keys = list(engine.elements)
        nk = len(keys)
        left_edges = [set(left_occ[y]) for y in range(nk)]
        right_edges = [set(right_occ[x]) for x in range(nk)]
        a_of_key = [int(a_base[i]) for i in range(nk)]
    else:
        om = extended.omega
        auto_map = np.zeros((om.order, n), dtype=np.int64)
        for o in range(om.order):
            for i, e in enumerate(engine.elements):
                auto_map[o, i] = datum.element_index(extended.apply(o, e))
        keys = [(e, o) for e in engine.elements for o in range(om.order)]
        pos = {(engine.index[e.word], o): k for k, (e, o) in enumerate(keys)}
        nk = len(keys)
        left_edges = [set() for _ in range(nk)]
        right_edges = [set() for _ in range(nk)]
        for k, (e, o2) in enumerate(keys):
            y = engine.index[e.word]
            for o1 in range(om.order):
                oo = om.mult(o1, o2)
                for z in left_occ[int(auto_map[o1, y])]:
                    left_edges[k].add(pos[(z, oo)])
        for k, (e, o1) in enumerate(keys):
            x = engine.index[e.word]
            for o2 in range(om.order):
                oo = om.mult(o1, o2)
                # z ranges over right occurrences of x; the omega part is free
                for z in right_occ[x]:
                    right_edges[k].add(pos[(z, oo)])
        a_of_key = [int(a_base[engine.index[e.word]]) for (e, o) in keys]

    two_edges = [left_edges[k] | right_edges[k] for k in range(nk)]
    left_comp = _strong_components(nk, left_edges)
    right_comp = _strong_components(nk, right_edges)
    two_comp = _strong_components(nk, two_edges)

    def group_cells(comp):
        cells: dict[int, list] = {}
        for k, c in enumerate(comp):
            cells.setdefault(c, []).append(keys[k])
        for cell in cells.values():
            cell.sort(key=_key_sort)
        return cells

    two_cells_raw = group_cells(two_comp)
    # a-function must be constant on two-sided cells
    a_of_cell = {}
    for cid, cell in two_cells_raw.items():
        values = {a_of_key[keys.index(k)] for k in cell}
        if len(values) != 1:
            raise IntegrityError("a-function is not constant on a two-sided cell")
        a_of_cell[cid] = values.pop()
    order_two = sorted(two_cells_raw, key=lambda c: (a_of_cell[c], _key_sort(two_cells_raw[c][0])))
    two_renum = {old: new for new, old in enumerate(order_two)}
    two_cells = [two_cells_raw[old] for old in order_two]
    a_value = {two_renum[old]: a_of_cell[old] for old in order_two}

    key_pos = {k: i for i, k in enumerate(keys)}
    two_id = {keys[k]: two_renum[two_comp[k]] for k in range(nk)}

    def finalize(comp):
        raw = group_cells(comp)
        order = sorted(raw, key=lambda c: (two_id[raw[c][0]], _key_sort(raw[c][0])))
        cells = [raw[old] for old in order]
        ids = {}
        for new, cell in enumerate(cells):
            for k in cell:
                ids[k] = new
        return cells, ids

    left_cells, left_id = finalize(left_comp)
    right_cells, right_id = finalize(right_comp)

    # refinement and inverse-swap invariants
    for cell in left_cells:
        if len({two_id[k] for k in cell}) != 1:
            raise IntegrityError("left cells do not refine two-sided cells")
    for cell in right_cells:
        if len({two_id[k] for k in cell}) != 1:
            raise IntegrityError("right cells do not refine two-sided cells")

    partition = CellPartition(
        kind="plain" if extended is None else "extended",
        datum=datum,
        extended=extended,
        keys=keys,
        key_pos=key_pos,
        left_id=left_id,
        right_id=right_id,
        two_id=two_id,
        left_cells=left_cells,
        right_cells=right_cells,
        two_cells=two_cells,
        a_value=a_value,
        _engine=engine,
        _omega_maps=None,
    )
    for k in keys:
        ki = partition.inverse_key(k)
        if partition.left_id[k] != partition.right_id[ki]:
            raise IntegrityError("inverse does not swap left and right cells")
    return partition


def cell_partition(datum: CoxeterDatum, guards: Guards = DEFAULT) -> CellPartition:
    cached = getattr(datum, "_cell_partition", None)
    if cached is None:
        cached = compute_cells(datum, guards)
        datum._cell_partition = cached
    return cached


def a_function(partition: CellPartition, key) -> int:
    return partition.a_value[partition.two_id[key]]


# ---------------------------------------------------------------------------
# J-rings and distinguished involutions
# ---------------------------------------------------------------------------


def j_ring(partition: CellPartition, subset: list, guards: Guards = DEFAULT) -> BasedRing:
    """The based ring on gamma constants of a subset of one two-sided cell.

    The subset is either a whole two-sided cell or Gamma intersect
    Gamma^-1 for a left cell Gamma; it must be closed under inversion.
    """
    subset = sorted(subset, key=_key_sort)
    cell_ids = {partition.two_id[k] for k in subset}
    if len(cell_ids) != 1:
        raise InvalidInput("subset must lie in a single two-sided cell")
    a = partition.a_value[cell_ids.pop()]
    pos = {k: i for i, k in enumerate(subset)}
    for k in subset:
        if partition.inverse_key(k) not in pos:
            raise InvalidInput("subset is not closed under inversion")
    structure = {}
    for i, k1 in enumerate(subset):
        for j, k2 in enumerate(subset):
            row = {}
            for key, c in partition.gamma(k1, k2, a).items():
                if key in pos:
                    row[pos[key]] = c
            if row:
                structure[(i, j)] = row
    dist = distinguished_involutions_in(partition, subset, a)
    ring = BasedRing(
        labels=tuple(_key_label(k) for k in subset),
        structure=structure,
        unit_components=frozenset(pos[d] for d in dist),
        involution=tuple(pos[partition.inverse_key(k)] for k in subset),
    )
    ring.validate()
    return ring


def _key_label(key) -> str:
    if isinstance(key, tuple):
        y, o = key
        word = ".".join(str(i + 1) for i in y.word) or "e"
        return f"{word}|{o}"
    return ".".join(str(i + 1) for i in key.word) or "e"


def distinguished_involutions_in(partition: CellPartition, subset: list, a: int) -> list:
    """Distinguished involutions lying in the subset (via the gamma criterion)."""
    out = []
    seen_left = set()
    for k in subset:
        lid = partition.left_id[k]
        if lid in seen_left:
            continue
        seen_left.add(lid)
    # for each left cell meeting the subset, find its distinguished involution
    for lid in sorted(seen_left):
        gamma_cols: dict = {}
        members = [k for k in partition.keys if partition.left_id[k] == lid]
        candidates = None
        for x in members:
            row = partition.gamma(partition.inverse_key(x), x, a)
            ones = {key for key, c in row.items() if c == 1}
            candidates = ones if candidates is None else (candidates & ones)
        if candidates is None:
            continue
        found = sorted(candidates, key=_key_sort)
        found = [
            d
            for d in found
            if partition.multiply_keys(d, d) == partition.identity_key()
            and partition.left_id[d] == lid
        ]
        if len(found) != 1:
            raise IntegrityError(
                f"left cell {lid} has {len(found)} distinguished involutions"
            )
        if found[0] in subset:
            out.append(found[0])
    return sorted(out, key=_key_sort)


def distinguished_involutions(partition: CellPartition, two_cell_id: int) -> list:
    """The distinguished involutions of a two-sided cell, one per left cell."""
    cell = partition.two_cells[two_cell_id]
    a = partition.a_value[two_cell_id]
    out = distinguished_involutions_in(partition, cell, a)
    n_left = len({partition.left_id[k] for k in cell})
    if len(out) != n_left:
        raise IntegrityError(
            "distinguished involution count differs from the left cell count"
        )
    return out


# ---------------------------------------------------------------------------
# Cell modules and hom dimensions (plain finite data)
# ---------------------------------------------------------------------------


@dataclass
class CellModule:
    left_cell: list
    character: dict   # element word -> integer character value

    @property
    def dimension(self) -> int:
        return len(self.left_cell)


def _cell_action_matrices(partition: CellPartition, cell: list) -> list[np.ndarray]:
    """Matrices of H_{s_i} at v = 1 on the left cell module (b-basis image)."""
    datum = partition.datum
    table = kl_table(datum)
    pos = {k: i for i, k in enumerate(cell)}
    mats = []
    for s_index in range(datum.generator_count):
        B = np.zeros((len(cell), len(cell)), dtype=np.int64)
        s = datum.generator(s_index)
        for k in cell:
            j = pos[k]
            if s_index in datum.left_descents(k):
                B[j, j] += 2  # (v + v^-1) at v = 1
            else:
                sk = datum.multiply(s, k)
                if sk in pos:
                    B[pos[sk], j] += 1
                for uw, m in table._mu_column(k).items():
                    u = GroupElement(datum, uw)
                    if m and s_index in datum.left_descents(u) and u in pos:
                        B[pos[u], j] += m
        rho = B - np.eye(len(cell), dtype=np.int64)
        if (rho @ rho != np.eye(len(cell), dtype=np.int64)).any():
            raise IntegrityError("cell module generator is not an involution")
        mats.append(rho)
    return mats


def cell_module_character(partition: CellPartition, left_cell: list,
                          validate: bool = True) -> CellModule:
    """Lusztig's cell representation of a left cell, as a W-character at v = 1.

    Computed from the v = 1 action on the KL-basis span of the cell and
    twisted by sign, which converts the self-dual basis normalization to
    the classical labels ([{e}] is trivial, [{w0}] is sign).
    """
    if partition.kind != "plain":
        raise InvalidInput("cell modules are defined over the plain Coxeter part")
    datum = partition.datum
    cell = sorted(left_cell, key=_key_sort)
    mats = _cell_action_matrices(partition, cell)
    d = len(cell)
    character = {}
    for w in datum.enumerate_elements():
        M = np.eye(d, dtype=np.int64)
        for s_index in w.word:
            M = mats[s_index] @ M
        character[w.word] = int(M.trace()) * (-1) ** w.length
    module = CellModule(left_cell=cell, character=character)
    if character[()] != d:
        raise IntegrityError("cell character dimension mismatch")
    if validate:
        _validate_character(partition, module)
    return module


def _coxeter_as_finite_group(datum: CoxeterDatum):
    """The Weyl group as a FiniteGroup via its faithful action on roots."""
    from .grouptheory import FiniteGroup

    cached = getattr(datum, "_as_finite_group", None)
    if cached is None:
        if datum.generator_count == 0:
            cached = (FiniteGroup.trivial(1), {(): 0})
            datum._as_finite_group = cached
            return cached
        gens = [tuple(p) for p in datum._gen_perms]
        G = FiniteGroup.from_generators(gens, 2 * datum._n_pos)
        word_to_idx = {}
        for w in datum.enumerate_elements():
            word_to_idx[w.word] = G.index[datum._perm_of(w.word)]
        cached = (G, word_to_idx)
        datum._as_finite_group = cached
    return cached


def _validate_character(partition: CellPartition, module: CellModule):
    from .grouptheory import character_table

    G, word_to_idx = _coxeter_as_finite_group(partition.datum)
    ct = character_table(G)
    vals = np.zeros(G.order, dtype=np.int64)
    for word, c in module.character.items():
        vals[word_to_idx[word]] = c
    inv = G.inverse_table()
    for i in range(ct.irrep_count):
        total = 0j
        row = ct.complex_table()[i]
        class_of = G.class_of()
        for g in range(G.order):
            total += vals[g] * row[class_of[inv[g]]]
        total /= G.order
        if abs(total.imag) > 1e-8 or abs(total.real - round(total.real)) > 1e-8:
            raise IntegrityError("cell character has a non-integral multiplicity")
        if round(total.real) < 0:
            raise IntegrityError("cell character has a negative multiplicity")


def hom_dim(partition: CellPartition, cell1: list, cell2: list) -> int:
    """dim Hom([Gamma_1], [Gamma_2]) = <chi_1, chi_2> over W, exactly."""
    m1 = cell_module_character(partition, cell1, validate=False)
    m2 = cell_module_character(partition, cell2, validate=False)
    datum = partition.datum
    total = Fraction(0)
    for w in datum.enumerate_elements():
        wi = datum.inverse(w)
        total += Fraction(m1.character[w.word] * m2.character[wi.word])
    total /= datum.order()
    if total.denominator != 1:
        raise IntegrityError("character inner product is not an integer")
    return int(total)


def intersection_count(partition: CellPartition, cell1: list, cell2: list) -> int:
    """|Gamma_1 intersect Gamma_2^-1|."""
    inv2 = {partition.inverse_key(k) for k in cell2}
    return len(set(cell1) & inv2)


# ---------------------------------------------------------------------------
# Extended two-sided cells versus Omega-orbits
# ---------------------------------------------------------------------------


def extended_cell_orbits(
    base: CellPartition, ext: CellPartition
) -> dict[int, frozenset[int]]:
    """The bijection extended two-sided cells <-> Omega-orbits of base cells.

    Verified, not assumed: a failure is an integrity error since this is a
    theorem for the occurrence preorders in question.
    """
    if ext.kind != "extended":
        raise InvalidInput("second argument must be an extended partition")
    ed = ext.extended
    om = ed.omega
    # Omega-orbits of base two-sided cells
    n_base = len(base.two_cells)
    orbit_of = list(range(n_base))

    def find(x):
        while orbit_of[x] != x:
            orbit_of[x] = orbit_of[orbit_of[x]]
            x = orbit_of[x]
        return x

    for cid, cell in enumerate(base.two_cells):
        rep = cell[0]
        for o in range(om.order):
            image_key = ed.apply(o, rep)
            other = base.two_id[image_key]
            ra, rb = find(cid), find(other)
            if ra != rb:
                orbit_of[ra] = rb
    orbits: dict[int, set[int]] = {}
    for cid in range(n_base):
        orbits.setdefault(find(cid), set()).add(cid)
    orbit_sets = {frozenset(v) for v in orbits.values()}

    mapping: dict[int, frozenset[int]] = {}
    for eid, cell in enumerate(ext.two_cells):
        bases = frozenset(base.two_id[y] for (y, o) in cell)
        mapping[eid] = bases
    if set(mapping.values()) != orbit_sets or len(mapping) != len(orbit_sets):
        raise IntegrityError("extended cells do not biject with Omega-orbits")
    # extended a-value equals the base a-value on each orbit
    for eid, bases in mapping.items():
        base_as = {base.a_value[b] for b in bases}
        if base_as != {ext.a_value[eid]}:
            raise IntegrityError("extended a-function differs from the base a-function")
    return mapping
