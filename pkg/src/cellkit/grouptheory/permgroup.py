"""Finite permutation groups with deterministic element indexing.

Elements are permutation tuples of a fixed degree, enumerated by closure and
sorted lexicographically, which puts the identity at index 0 and makes every
derived object (classes, subgroup representatives, character tables)
reproducible across runs.  All data is immutable after construction; lazily
built tables are insert-once and safe for concurrent readers.
"""

from __future__ import annotations

import numpy as np

from ..errors import GuardExceeded, IntegrityError, InvalidInput
from ..guards import DEFAULT, Guards

Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def _invert(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


class FiniteGroup:
    """A finite permutation group with a canonical element order."""

    def __init__(self, elements: list[Perm], generators: list[Perm], degree: int):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(sorted(elements))
        self.order = len(self.elements)
        self.index: dict[Perm, int] = {p: i for i, p in enumerate(self.elements)}
        ident = tuple(range(degree))
        if self.elements[0] != ident:
            raise IntegrityError("identity is not at index 0")
        self.generator_indices: tuple[int, ...] = tuple(
            sorted({self.index[g] for g in generators} - {0})
        ) or ((0,) if self.order == 1 else ())
        self._mult_table: np.ndarray | None = None
        self._inverse: np.ndarray | None = None
        self._classes: list[tuple[int, ...]] | None = None
        self._class_of: np.ndarray | None = None
        self._orders: list[int] | None = None

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def from_generators(gens, degree: int | None = None,
                        guards: Guards = DEFAULT) -> "FiniteGroup":
        gens = [tuple(g) for g in gens]
        if degree is None:
            degree = max((len(g) for g in gens), default=1)
        gens = [g + tuple(range(len(g), degree)) for g in gens]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise InvalidInput(f"not a permutation of 0..{degree - 1}: {g}")
        ident = tuple(range(degree))
        limit = guards.limit("group_order")
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = _compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
                        if len(seen) > limit:
                            raise GuardExceeded("group_order", len(seen), limit)
            frontier = new
        return FiniteGroup(sorted(seen), gens, degree)

    @staticmethod
    def symmetric(n: int, guards: Guards = DEFAULT) -> "FiniteGroup":
        if n <= 1:
            return FiniteGroup.trivial(max(n, 1))
        gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
        return FiniteGroup.from_generators(gens, n, guards)

    @staticmethod
    def alternating(n: int, guards: Guards = DEFAULT) -> "FiniteGroup":
        if n <= 2:
            return FiniteGroup.trivial(max(n, 1))
        gens = []
        for i in range(n - 2):
            c = list(range(n))
            c[i], c[i + 1], c[i + 2] = c[i + 1], c[i + 2], c[i]
            gens.append(tuple(c))
        return FiniteGroup.from_generators(gens, n, guards)

    @staticmethod
    def cyclic(n: int, guards: Guards = DEFAULT) -> "FiniteGroup":
        if n == 1:
            return FiniteGroup.trivial(1)
        return FiniteGroup.from_generators([tuple(range(1, n)) + (0,)], n, guards)

    @staticmethod
    def dihedral(n: int, guards: Guards = DEFAULT) -> "FiniteGroup":
        """Dihedral group of order 2n acting on n points."""
        rot = tuple(range(1, n)) + (0,)
        ref = tuple((n - i) % n for i in range(n))
        return FiniteGroup.from_generators([rot, ref], n, guards)

    @staticmethod
    def trivial(degree: int = 1) -> "FiniteGroup":
        ident = tuple(range(degree))
        return FiniteGroup([ident], [], degree)

    @staticmethod
    def from_mult_table(table) -> "FiniteGroup":
        """Group from an explicit multiplication table, via left translations."""
        n = len(table)
        perms = [tuple(int(x) for x in row) for row in table]
        for p in perms:
            if sorted(p) != list(range(n)):
                raise InvalidInput("multiplication table rows must be permutations")
        return FiniteGroup(sorted(perms), perms, n)

    # -- core arithmetic -----------------------------------------------------------

    def mult_table(self) -> np.ndarray:
        if self._mult_table is None:
            n = self.order
            table = np.empty((n, n), dtype=np.int32)
            arange = np.arange(n, dtype=np.int32)
            # row of g = left translation x -> g x, built by composing index maps
            rows: dict[int, np.ndarray] = {0: arange}
            gen_rows = {}
            for gi in self.generator_indices:
                g = self.elements[gi]
                gen_rows[gi] = np.array(
                    [self.index[_compose(g, x)] for x in self.elements], dtype=np.int32
                )
            frontier = [0]
            rows_done = {0}
            while frontier:
                new = []
                for i in frontier:
                    for gi, grow in gen_rows.items():
                        j = int(grow[i])
                        if j not in rows_done:
                            rows_done.add(j)
                            rows[j] = grow[rows[i]]
                            new.append(j)
                frontier = new
            if len(rows) != n:
                raise IntegrityError("generators do not generate the stored elements")
            for i in range(n):
                table[i] = rows[i]
            self._mult_table = table
        return self._mult_table

    def mult(self, i: int, j: int) -> int:
        return int(self.mult_table()[i, j])

    def inverse_table(self) -> np.ndarray:
        if self._inverse is None:
            self._inverse = np.array(
                [self.index[_invert(p)] for p in self.elements], dtype=np.int32
            )
        return self._inverse

    def inv(self, i: int) -> int:
        return int(self.inverse_table()[i])

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        t = self.mult_table()
        return int(t[t[g, x], self.inv(g)])

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
        if self._orders[i] == 0:
            k, j = 1, i
            while j != 0:
                j = self.mult(j, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def exponent(self) -> int:
        out = 1
        for i in range(self.order):
            o = self.element_order(i)
            out = out * o // _gcd(out, o)
        return out

    def cycle_type(self, i: int) -> tuple[int, ...]:
        """Sorted nontrivial cycle lengths of the permutation."""
        p = self.elements[i]
        seen = [False] * self.degree
        lens = []
        for start in range(self.degree):
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = p[x]
                length += 1
            if length > 1:
                lens.append(length)
        return tuple(sorted(lens))

    # -- classes, centralizers, normalizers -------------------------------------------

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        if self._classes is None:
            t = self.mult_table()
            inv = self.inverse_table()
            assigned = np.full(self.order, -1, dtype=np.int64)
            classes = []
            for start in range(self.order):
                if assigned[start] >= 0:
                    continue
                orbit = {start}
                frontier = [start]
                while frontier:
                    x = frontier.pop()
                    for gi in self.generator_indices or (0,):
                        y = int(t[t[gi, x], inv[gi]])
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                cid = len(classes)
                for x in orbit:
                    assigned[x] = cid
                classes.append(tuple(sorted(orbit)))
            order_key = lambda c: (self.element_order(c[0]), len(c), c[0])
            perm = sorted(range(len(classes)), key=lambda k: order_key(classes[k]))
            classes = [classes[k] for k in perm]
            self._class_of = np.empty(self.order, dtype=np.int64)
            for cid, cls in enumerate(classes):
                for x in cls:
                    self._class_of[x] = cid
            self._classes = classes
        return self._classes

    def class_of(self) -> np.ndarray:
        self.conjugacy_classes()
        return self._class_of

    def centralizer(self, i: int) -> tuple[int, ...]:
        t = self.mult_table()
        return tuple(int(x) for x in np.nonzero(t[:, i] == t[i, :])[0])

    def center(self) -> tuple[int, ...]:
        t = self.mult_table()
        return tuple(int(i) for i in range(self.order) if (t[i, :] == t[:, i]).all())

    def subgroup_closure(self, seed) -> frozenset[int]:
        t = self.mult_table()
        cur = np.unique(np.concatenate([np.array(sorted(set(seed)), dtype=np.int64), [0]]))
        while True:
            nxt = np.unique(t[np.ix_(cur, cur)])
            if len(nxt) == len(cur):
                return frozenset(int(x) for x in cur)
            cur = nxt

    def is_closed(self, indices) -> bool:
        idx = set(int(i) for i in indices)
        t = self.mult_table()
        return all(int(t[i, j]) in idx for i in idx for j in idx)

    def normalizer(self, indices) -> tuple[int, ...]:
        h = frozenset(int(i) for i in indices)
        t = self.mult_table()
        inv = self.inverse_table()
        out = []
        for g in range(self.order):
            if all(int(t[t[g, x], inv[g]]) in h for x in h):
                out.append(g)
        return tuple(out)

    def conjugate_set(self, indices, g: int) -> frozenset[int]:
        t = self.mult_table()
        ig = self.inv(g)
        return frozenset(int(t[t[g, x], ig]) for x in indices)

    def canonical_conjugate(self, indices) -> tuple[int, ...]:
        """Lex-least sorted index tuple among all conjugates of the subset."""
        t = self.mult_table()
        inv = self.inverse_table()
        arr = np.array(sorted(set(int(i) for i in indices)), dtype=np.int64)
        gx = t[:, arr]                                  # gx[g, j] = g * x_j
        conj = np.sort(t[gx, inv[:, None]], axis=1)     # g * x_j * g^-1, sorted rows
        best = min(map(tuple, conj.tolist()))
        return tuple(int(x) for x in best)

    def subgroup(self, indices) -> "FiniteGroup":
        """The subgroup on the given element indices, as its own FiniteGroup."""
        idx = sorted(set(int(i) for i in indices))
        elements = [self.elements[i] for i in idx]
        if len(self.subgroup_closure(idx)) != len(idx):
            raise InvalidInput("index set is not a subgroup")
        gens = _small_generating_set(self, idx)
        return FiniteGroup(elements, [self.elements[i] for i in gens], self.degree)

    def embedding_of(self, sub: "FiniteGroup") -> np.ndarray:
        """Map subgroup element indices to this group's indices (by permutation)."""
        try:
            return np.array([self.index[p] for p in sub.elements], dtype=np.int64)
        except KeyError as exc:
            raise InvalidInput("not a subgroup by permutations") from exc

    # -- cosets ------------------------------------------------------------------------

    def double_cosets(self, h1_indices, h2_indices) -> list[tuple[int, frozenset[int]]]:
        """[(min-index representative, coset H1 g H2)], sorted by representative."""
        t = self.mult_table()
        h1 = sorted(int(i) for i in h1_indices)
        h2 = sorted(int(i) for i in h2_indices)
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for g in range(self.order):
            if seen[g]:
                continue
            block = t[np.ix_(np.array(h1), t[g, np.array(h2)])]
            coset = frozenset(int(x) for x in np.unique(block))
            for x in coset:
                seen[x] = True
            out.append((g, coset))
        return out

    def coset_space(self, h_indices) -> tuple[list[int], np.ndarray]:
        """Left cosets gH: (sorted min representatives, action[g, coset] array)."""
        t = self.mult_table()
        h = np.array(sorted(int(i) for i in h_indices), dtype=np.int64)
        rep_of = np.full(self.order, -1, dtype=np.int64)
        reps = []
        for g in range(self.order):
            if rep_of[g] >= 0:
                continue
            coset = np.unique(t[g, h])
            rep_of[coset] = len(reps)
            reps.append(g)
        action = np.empty((self.order, len(reps)), dtype=np.int64)
        for g in range(self.order):
            action[g] = rep_of[t[g, np.array(reps)]]
        return reps, action

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, degree={self.degree})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _small_generating_set(G: FiniteGroup, idx: list[int]) -> list[int]:
    """Greedy generating set for the subgroup on `idx` (deterministic)."""
    target = set(idx)
    gens: list[int] = []
    have = {0}
    for i in sorted(idx, key=lambda j: (-G.element_order(j), j)):
        if i in have:
            continue
        gens.append(i)
        have = set(G.subgroup_closure(gens))
        if have == target:
            break
    return gens


# ---------------------------------------------------------------------------
# Subgroup classification and Sylow subgroups
# ---------------------------------------------------------------------------


class SubgroupClass:
    """A conjugacy class of subgroups, with its lex-least representative."""

    def __init__(self, parent: FiniteGroup, indices: tuple[int, ...]):
        self.parent = parent
        self.indices = tuple(sorted(indices))
        self.representative = parent.subgroup(self.indices)
        self.order = len(self.indices)
        self.conjugacy_class_size = parent.order // len(parent.normalizer(self.indices))

    def descriptor(self) -> tuple[int, tuple]:
        """(order, multiset of cycle types): distinguishes classes in S4 and S5."""
        types: dict[tuple[int, ...], int] = {}
        for i in self.indices:
            t = self.parent.cycle_type(i)
            types[t] = types.get(t, 0) + 1
        return (self.order, tuple(sorted(types.items())))

    def __repr__(self):
        return f"SubgroupClass(order={self.order}, size={self.conjugacy_class_size})"


def subgroup_classes(G: FiniteGroup, guards: Guards = DEFAULT) -> list[SubgroupClass]:
    """All subgroups up to conjugacy, by one-generator extensions with
    conjugacy dedup.  Deterministic: representatives are lex-least."""
    guards.check("subgroup_group_order", G.order)
    G.mult_table()
    seen: dict[tuple[int, ...], frozenset[int]] = {}
    trivial = frozenset({0})
    seen[(0,)] = trivial
    frontier = [trivial]
    canon_memo: dict[frozenset[int], tuple[int, ...]] = {}
    while frontier:
        new = []
        for h in frontier:
            for g in range(1, G.order):
                if g in h:
                    continue
                k = G.subgroup_closure(set(h) | {g})
                key = canon_memo.get(k)
                if key is None:
                    key = G.canonical_conjugate(k)
                    canon_memo[k] = key
                if key not in seen:
                    seen[key] = frozenset(key)
                    new.append(frozenset(key))
        frontier = new
    classes = [SubgroupClass(G, key) for key in seen]
    classes.sort(key=lambda c: (c.order, c.indices))
    return classes


def sylow_subgroup(G: FiniteGroup, p: int) -> tuple[int, ...]:
    """Element indices of a Sylow p-subgroup (normalizer-growth algorithm)."""
    target = 1
    n = G.order
    while n % p == 0:
        target *= p
        n //= p
    current = frozenset({0})
    while len(current) < target:
        norm = G.normalizer(current)
        grown = False
        for g in norm:
            if g in current:
                continue
            o = G.element_order(g)
            # strip the prime-to-p part so the new generator is a p-element
            m = o
            while m % p == 0:
                m //= p
            gp = 0
            if m:
                gp = g
                for _ in range(m - 1):
                    gp = G.mult(gp, g)
            if gp not in current and G.element_order(gp) % p == 0:
                nxt = G.subgroup_closure(set(current) | {gp})
                if len(nxt) % p == 0 and len(nxt) <= target and len(nxt) > len(current):
                    current = nxt
                    grown = True
                    break
        if not grown:
            raise IntegrityError("Sylow growth stalled")  # pragma: no cover
    return tuple(sorted(current))
