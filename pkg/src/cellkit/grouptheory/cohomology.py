"""Second cohomology H^2(H, C*) by exact linear algebra mod n.

A normalized 2-cocycle is determined by its values psi(g, s) on Cayley
edges (s running over a fixed generating set): every other value is a
linear combination of edge values through the cocycle identities whose
third argument is a generator, and those identities already imply the
full identity (for a normalized cochain F = d(psi) is a 3-cocycle, and
F(.,.,s) = 0 for generators s forces F = 0).  So the cochain complex is
eliminated in a definitional column order: a small residual system over
the edge columns remains, and kernel / coboundary bookkeeping happens in
that coordinate space.

Coboundaries over C* (not just over mu_n) are handled by the standard
Kummer-sequence correction: the kernel of H^2(H, mu_n) -> H^2(H, C*) is
spanned by the carry cocycles of the n-torsion characters chi, i.e. by
d(chi^(1/n)) computed at modulus n^2 and divided back down.  Everything
is per prime power and recombined by CRT.

Every representative returned is re-verified against the full cocycle
identity on all |H|^3 triples, vectorized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import GuardExceeded, IntegrityError, InvalidInput
from ..guards import DEFAULT, Guards
from ..cyclotomic import Cyc
from .chartable import character_table
from .permgroup import FiniteGroup, _compose, _invert, sylow_subgroup


# ---------------------------------------------------------------------------
# Cocycles
# ---------------------------------------------------------------------------


class TwoCocycle:
    """Normalized 2-cocycle on a finite group with values in Z/n (additive).

    values[g, h] means the root of unity exp(2 pi i values[g,h] / n).
    """

    def __init__(self, group: FiniteGroup, modulus: int, values, check: bool = True):
        self.group = group
        self.modulus = int(modulus)
        arr = np.asarray(values, dtype=np.int64) % self.modulus if self.modulus > 1 else np.zeros((group.order, group.order), dtype=np.int64)
        if arr.shape != (group.order, group.order):
            raise InvalidInput("cocycle table has the wrong shape")
        self.values = arr
        if check:
            self.verify()

    @staticmethod
    def trivial(group: FiniteGroup, modulus: int = 1) -> "TwoCocycle":
        return TwoCocycle(group, modulus, np.zeros((group.order, group.order), dtype=np.int64), check=False)

    def verify(self):
        n = self.group.order
        m = self.modulus
        v = self.values
        if v[0, :].any() or v[:, 0].any():
            raise IntegrityError("cocycle is not normalized")
        t = self.group.mult_table()
        lhs = v[:, :, None] + v[t, :]          # psi(g,h) + psi(gh, k)
        rhs = v[None, :, :] + v[:, t]          # psi(h,k) + psi(g, hk)
        if ((lhs - rhs) % m).any():
            raise IntegrityError("cocycle identity failed")

    @property
    def is_identically_zero(self) -> bool:
        return not self.values.any()

    def invert(self) -> "TwoCocycle":
        return TwoCocycle(self.group, self.modulus, (-self.values) % self.modulus, check=False)

    def baer_sum(self, other: "TwoCocycle") -> "TwoCocycle":
        if other.group is not self.group and other.group.elements != self.group.elements:
            raise InvalidInput("Baer sum needs cocycles on the same group")
        if other.modulus != self.modulus:
            raise InvalidInput("Baer sum needs equal moduli (use rescale first)")
        return TwoCocycle(self.group, self.modulus, (self.values + other.values) % self.modulus, check=False)

    def rescale(self, new_modulus: int) -> "TwoCocycle":
        """Reinterpret at a larger modulus (same element of C*)."""
        if new_modulus % self.modulus:
            raise InvalidInput("rescale target must be a multiple of the modulus")
        k = new_modulus // self.modulus
        return TwoCocycle(self.group, new_modulus, self.values * k, check=False)

    def restrict(self, sub: FiniteGroup) -> "TwoCocycle":
        emb = self.group.embedding_of(sub)
        return TwoCocycle(sub, self.modulus, self.values[np.ix_(emb, emb)], check=False)

    def conjugate(self, g_perm) -> "TwoCocycle":
        """psi^g(a, b) = psi(g^-1 a g, g^-1 b g) on the group g H g^-1."""
        g = tuple(g_perm)
        gi = _invert(g)
        conj_elements = [_compose(_compose(g, x), gi) for x in self.group.elements]
        new_group = FiniteGroup(
            sorted(conj_elements),
            [_compose(_compose(g, self.group.elements[i]), gi) for i in self.group.generator_indices],
            self.group.degree,
        )
        # index map: new element a = g x g^-1  ->  old index of x
        old_of_new = np.empty(self.group.order, dtype=np.int64)
        for old_idx, p in enumerate(conj_elements):
            old_of_new[new_group.index[p]] = old_idx
        vals = self.values[np.ix_(old_of_new, old_of_new)]
        return TwoCocycle(new_group, self.modulus, vals, check=False)

    def __repr__(self):
        return f"TwoCocycle(order={self.group.order}, n={self.modulus}, zero={self.is_identically_zero})"


def common_modulus(a: TwoCocycle, b: TwoCocycle) -> tuple[TwoCocycle, TwoCocycle]:
    m = a.modulus * b.modulus // _gcd(a.modulus, b.modulus)
    return a.rescale(m), b.rescale(m)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Echelon arithmetic over Z/p^a (insertion form with Howell saturation)
# ---------------------------------------------------------------------------


class ZpaEchelon:
    """Row echelon over Z/p^a supporting canonical reduction and kernels."""

    def __init__(self, p: int, a: int, width: int):
        self.p = p
        self.a = a
        self.m = p**a
        self.width = width
        self.pivots: dict[int, tuple[int, np.ndarray]] = {}  # col -> (val, row)

    def _valuation(self, x: int) -> int:
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
            if v >= self.a:
                return self.a
        return v

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        """Canonical residue modulo the current row space."""
        vec = vec.copy() % self.m
        for col in sorted(self.pivots):
            c = int(vec[col])
            if c:
                val, row = self.pivots[col]
                q = c // self.p**val
                if q:
                    vec = (vec - q * row) % self.m
        return vec

    def insert(self, vec: np.ndarray) -> bool:
        """Insert a row; returns True if the row space grew."""
        grew = False
        queue = [vec % self.m]
        while queue:
            cur = self.reduce(queue.pop())
            nz = np.nonzero(cur)[0]
            if not len(nz):
                continue
            col = int(nz[0])
            val = self._valuation(int(cur[col]))
            unit = int(cur[col]) // self.p**val
            cur = (cur * pow(unit, -1, self.m)) % self.m
            old = self.pivots.get(col)
            if old is not None and old[0] <= val:
                # reduce() already stripped what it could; a leftover with
                # higher valuation means old[0] > val, so this is unreachable
                raise IntegrityError("echelon insertion invariant broken")
            self.pivots[col] = (val, cur)
            grew = True
            if old is not None:
                queue.append(old[1])
            if val:
                queue.append((cur * self.p ** (self.a - val)) % self.m)
            # re-reduce existing rows above this pivot for canonical forms
            for c2, (v2, r2) in list(self.pivots.items()):
                if c2 == col:
                    continue
                q = int(r2[col]) // self.p**val
                if q:
                    self.pivots[c2] = (v2, (r2 - q * cur) % self.m)
        return grew

    def span_size_log(self) -> int:
        """log_p of the row-space cardinality."""
        return sum(self.a - val for val, _ in self.pivots.values())

    def kernel_generators(self) -> list[np.ndarray]:
        """Generators of {x : R x = 0 mod p^a} for the stored rows."""
        cols = sorted(self.pivots)
        gens: list[np.ndarray] = []
        for seed_col in range(self.width):
            seed_vals = [self.p**t for t in range(self.a)]
            for seed in seed_vals:
                x = np.zeros(self.width, dtype=np.int64)
                ok = True
                x[seed_col] = seed
                for col in reversed(cols):
                    val, row = self.pivots[col]
                    rhs = int((row * x).sum() - row[col] * x[col]) % self.m
                    if col == seed_col:
                        # seed sits on a pivot column: total must still vanish
                        tot = (rhs + self.p**val * seed) % self.m
                        if tot % self.m:
                            ok = False
                            break
                        continue
                    need = (-rhs) % self.m
                    if need % self.p**val:
                        ok = False
                        break
                    x[col] = (need // self.p**val) % self.m
                if ok:
                    gens.append(x % self.m)
                    break
        # torsion generators on pivot columns
        for col in cols:
            val, _ = self.pivots[col]
            if val == 0:
                continue
            x = np.zeros(self.width, dtype=np.int64)
            x[col] = self.p ** (self.a - val)
            ok = True
            for c2 in reversed(cols):
                if c2 >= col:
                    continue
                v2, row2 = self.pivots[c2]
                rhs = int((row2 * x).sum() - row2[c2] * x[c2]) % self.m
                need = (-rhs) % self.m
                if need % self.p**v2:
                    ok = False
                    break
                x[c2] = (need // self.p**v2) % self.m
            if ok:
                gens.append(x % self.m)
        # drop duplicates / zeros
        out, seen = [], set()
        for g in gens:
            if g.any():
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(g)
        return out


# ---------------------------------------------------------------------------
# The Cayley-edge cocycle solver for one prime power
# ---------------------------------------------------------------------------


@dataclass
class _EdgeContext:
    group: FiniteGroup
    p: int
    a: int
    gens: list[int]                 # generator element indices, deduplicated
    tree_parent: np.ndarray         # element -> parent element (index), -1 for e
    tree_slot: np.ndarray           # element -> generator slot used from parent
    edge_col: np.ndarray            # (order, slots) -> column id or -1 (g = e)
    rep: np.ndarray                 # (order, order, D): psi(g,h) as edge combination
    width: int

    @property
    def m(self) -> int:
        return self.p**self.a


def _generating_set(G: FiniteGroup) -> list[int]:
    gens = []
    have = frozenset({0})
    for i in sorted(range(1, G.order), key=lambda j: (-G.element_order(j), j)):
        if i in have:
            continue
        gens.append(i)
        have = G.subgroup_closure(gens)
        if len(have) == G.order:
            break
    if len(have) != G.order and G.order > 1:
        raise IntegrityError("failed to find a generating set")
    return gens


def _edge_context(G: FiniteGroup, p: int, a: int) -> _EdgeContext:
    n = G.order
    t = G.mult_table()
    gens = _generating_set(G)
    slots = len(gens)
    tree_parent = np.full(n, -1, dtype=np.int64)
    tree_slot = np.full(n, -1, dtype=np.int64)
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        for slot, g in enumerate(gens):
            y = int(t[x, g])
            if y not in seen:
                seen.add(y)
                tree_parent[y] = x
                tree_slot[y] = slot
                order.append(y)
    edge_col = np.full((n, slots), -1, dtype=np.int64)
    col = 0
    for g in range(1, n):
        for s in range(slots):
            edge_col[g, s] = col
            col += 1
    D = col
    rep = np.zeros((n, n, D), dtype=np.int64)
    # base: psi(g, gen_s) is the edge coordinate itself (for g != e)
    for g in range(1, n):
        for slot, ge in enumerate(gens):
            if ge != 0:
                rep[g, ge, edge_col[g, slot]] += 1
    # definitional fill along the BFS tree:
    # psi(g, k) = psi(g, pk) + psi(g pk, s) - psi(pk, s),  k = pk * gen_s
    for k in order:
        pk = int(tree_parent[k])
        if pk <= 0:
            continue  # e itself or a generator at level 1 (parent is e)
        slot = int(tree_slot[k])
        rep[:, k, :] = rep[:, pk, :]
        gpk = t[:, pk]
        mask = gpk != 0
        rows = np.nonzero(mask)[0]
        np.add.at(rep, (rows, np.full(len(rows), k), edge_col[gpk[rows], slot]), 1)
        rep[1:, k, edge_col[pk, slot]] -= 1
        rep[0, k, :] = 0  # psi(e, .) = 0
    m = p**a
    rep %= m
    return _EdgeContext(G, p, a, gens, tree_parent, tree_slot, edge_col, rep, D)


def _residual_rows(ctx: _EdgeContext) -> np.ndarray:
    """Remaining cocycle identities C(g, h, s) as edge-space rows."""
    G, t = ctx.group, ctx.group.mult_table()
    n, D, m = G.order, ctx.width, ctx.m
    rows = []
    for h in range(1, n):
        for slot, ge in enumerate(ctx.gens):
            hs = int(t[h, ge])
            if hs != 0 and int(ctx.tree_parent[hs]) == h and int(ctx.tree_slot[hs]) == slot:
                continue  # this identity defined rep[., hs]
            block = ctx.rep[:, h, :].copy()  # psi(g, h)
            gh = t[:, h]
            mask = gh != 0
            rws = np.nonzero(mask)[0]
            np.add.at(block, (rws, ctx.edge_col[gh[rws], slot]), 1)   # + psi(gh, s)
            if h != 0:
                block[1:, ctx.edge_col[h, slot]] -= 1                 # - psi(h, s)
            if hs != 0:
                block -= ctx.rep[:, hs, :]                            # - psi(g, hs)
            block[0, :] = 0
            rows.append(block[1:] % m)
    if not rows:
        return np.zeros((0, D), dtype=np.int64)
    return np.concatenate(rows, axis=0) % m


def _coboundary_rows(ctx: _EdgeContext) -> np.ndarray:
    """Edge restrictions of d(delta_x) for x != e, plus carry cocycles q_chi."""
    G, t = ctx.group, ctx.group.mult_table()
    n, D, m = G.order, ctx.width, ctx.m
    inv = G.inverse_table()
    out = np.zeros((n - 1, D), dtype=np.int64)
    for x in range(1, n):
        row = out[x - 1]
        # d(phi)(g, s) = phi(g) + phi(s) - phi(g s), phi = indicator of x
        for slot, ge in enumerate(ctx.gens):
            row[ctx.edge_col[x, slot]] += 1
            if ge == x:
                for g in range(1, n):
                    row[ctx.edge_col[g, slot]] += 1
            g = int(t[x, inv[ge]])  # the g with g*ge = x
            if g != 0:
                row[ctx.edge_col[g, slot]] -= 1
    # characters H -> Z/m: kernel of chi(h) + chi(s) - chi(hs) over all h, s
    hom_ech = ZpaEchelon(ctx.p, ctx.a, n - 1)
    for h in range(n):
        for ge in ctx.gens:
            hs = int(t[h, ge])
            row = np.zeros(n - 1, dtype=np.int64)
            for idx, sign in ((h, 1), (ge, 1), (hs, -1)):
                if idx != 0:
                    row[idx - 1] += sign
            hom_ech_insert_row = row % ctx.m
            if hom_ech_insert_row.any():
                hom_ech.insert(hom_ech_insert_row)
    carries = []
    for chi in hom_ech.kernel_generators():
        lift = np.concatenate([[0], chi]).astype(np.int64)  # chi(e) = 0
        q = np.zeros(D, dtype=np.int64)
        for g in range(1, n):
            for slot, ge in enumerate(ctx.gens):
                gs = int(t[g, ge])
                carry = (int(lift[g]) + int(lift[ge]) - int(lift[gs])) // ctx.m
                if carry:
                    q[ctx.edge_col[g, slot]] += carry
        carries.append(q % ctx.m)
    if carries:
        out = np.concatenate([out % m, np.stack(carries)], axis=0)
    return out % m


class _PrimePowerH2:
    """H^2(H, C*)[p^a] with class representatives, in edge coordinates."""

    def __init__(self, G: FiniteGroup, p: int, a: int, guards: Guards):
        self.ctx = _edge_context(G, p, a)
        self.p, self.a, self.m = p, a, p**a
        ech = ZpaEchelon(p, a, self.ctx.width)
        for row in _residual_rows(self.ctx):
            if row.any():
                ech.insert(row)
        self.constraint_ech = ech
        kernel = ech.kernel_generators()
        # sanity: |rowspace| * |kernel span| = m^width
        kspan = ZpaEchelon(p, a, self.ctx.width)
        for g in kernel:
            kspan.insert(g)
        if kspan.span_size_log() + ech.span_size_log() != a * self.ctx.width:
            raise IntegrityError("kernel computation lost solutions")
        self.bound_ech = ZpaEchelon(p, a, self.ctx.width)
        for row in _coboundary_rows(self.ctx):
            if row.any():
                if kspan.reduce(row).any():
                    raise IntegrityError("coboundary is not a cocycle solution")
                self.bound_ech.insert(row)
        # enumerate classes: BFS in kernel / coboundary quotient
        limit = guards.limit("h2_class_count")
        zero = np.zeros(self.ctx.width, dtype=np.int64)
        reps: dict[bytes, np.ndarray] = {self.bound_ech.reduce(zero).tobytes(): zero}
        frontier = [zero]
        while frontier:
            new = []
            for r in frontier:
                for g in kernel:
                    cand = (r + g) % self.m
                    key = self.bound_ech.reduce(cand).tobytes()
                    if key not in reps:
                        if len(reps) >= limit:
                            raise GuardExceeded("h2_class_count", len(reps) + 1, limit)
                        reps[key] = self.bound_ech.reduce(cand)
                        new.append(cand)
            frontier = new
        self.class_reps = sorted(reps.values(), key=lambda v: v.tobytes())
        self.class_reps.sort(key=lambda v: (v.any(), v.tobytes()))

    def class_count(self) -> int:
        return len(self.class_reps)

    def full_table(self, edge_vec: np.ndarray) -> np.ndarray:
        return (self.ctx.rep @ (edge_vec % self.m)) % self.m

    def edge_vector(self, psi: TwoCocycle) -> np.ndarray:
        vec = np.zeros(self.ctx.width, dtype=np.int64)
        for g in range(1, psi.group.order):
            for slot, ge in enumerate(self.ctx.gens):
                vec[self.ctx.edge_col[g, slot]] = psi.values[g, ge]
        return vec % self.m

    def class_key(self, psi: TwoCocycle) -> bytes:
        return self.bound_ech.reduce(self.edge_vector(psi)).tobytes()


# ---------------------------------------------------------------------------
# Public API: h2_classes and friends
# ---------------------------------------------------------------------------


@dataclass
class H2Result:
    """Representatives of H^2(H, C*) classes visible at the given modulus."""

    group: FiniteGroup
    modulus: int
    representatives: list[TwoCocycle]   # trivial class first
    class_orders: list[int]

    @property
    def class_count(self) -> int:
        return len(self.representatives)


def _factorize(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _h2_prime_power(G: FiniteGroup, p: int, a: int, guards: Guards) -> _PrimePowerH2:
    cache = getattr(G, "_h2_solvers", None)
    if cache is None:
        cache = G._h2_solvers = {}
    if (p, a) not in cache:
        if p == 2 and a == 1:
            guards.check("h2_mod2_order", G.order)
        else:
            guards.check("h2_general_order", G.order)
        cache[(p, a)] = _PrimePowerH2(G, p, a, guards)
    return cache[(p, a)]


def _multiplier_exponent_at(G: FiniteGroup, p: int, guards: Guards) -> int:
    """Exponent of the p-part of H^2(G, C*), by stabilization over p-powers.

    |H^2[p^a]| = |H^2[p^(a+1)]| forces H^2[p^a] to be the whole p-part,
    and the multiplier exponent divides |G|, so the loop terminates.
    """
    prev = 1
    a = 1
    while True:
        count = _h2_prime_power(G, p, a, guards).class_count()
        if count == prev:
            return p ** (a - 1)
        prev = count
        a += 1
        if p**a > G.order * p:
            raise IntegrityError("multiplier exponent failed to stabilize")


def h2_classes(G: FiniteGroup, n: int | None = None,
               guards: Guards = DEFAULT) -> H2Result:
    """Representatives of H^2(G, C*) through mu_n.

    With n = None the modulus is chosen automatically and soundly: for each
    prime p dividing |G| the p-part of the Schur multiplier injects into the
    multiplier of a Sylow p-subgroup, whose exponent is computed exactly by
    stabilizing over p-power moduli; nontrivial primes are then computed on
    G itself at that exponent.  With an explicit n only the image of
    H^2(G, mu_n) is classified, and an error is raised if the Sylow analysis
    shows that this misses classes.
    """
    if G.order == 1:
        return H2Result(G, 1, [TwoCocycle.trivial(G)], [1])
    need: dict[int, int] = {}
    for p in _factorize(G.order):
        syl = G.subgroup(sylow_subgroup(G, p))
        if syl.order == 1:
            continue
        e_p = _multiplier_exponent_at(syl, p, guards)
        if e_p > 1:
            need[p] = e_p
    if n is None:
        moduli = need
    else:
        nf = _factorize(n)
        moduli = {p: p ** nf[p] for p in nf}
        for p, e_p in need.items():
            if e_p > moduli.get(p, 1):
                raise InvalidInput(
                    f"modulus {n} misses H^2 classes of order {e_p} at prime {p}; "
                    f"use n = {n * e_p // _gcd(n, e_p)} or the automatic mode"
                )
    solvers = {}
    for p, pe in sorted(moduli.items()):
        a = 0
        while p**a < pe:
            a += 1
        if a == 0:
            continue
        solvers[p] = _h2_prime_power(G, p, a, guards)
    if not solvers:
        return H2Result(G, 1, [TwoCocycle.trivial(G)], [1])
    total_modulus = 1
    for p, solver in solvers.items():
        total_modulus *= solver.m
    # CRT-combine one representative per tuple of per-prime classes
    combos: list[tuple] = [()]
    for p in sorted(solvers):
        combos = [c + (r,) for c in combos for r in range(solvers[p].class_count())]
    reps: list[TwoCocycle] = []
    orders: list[int] = []
    for combo in combos:
        table = np.zeros((G.order, G.order), dtype=np.int64)
        order = 1
        for (p, solver), idx in zip(sorted(solvers.items()), combo):
            part = solver.full_table(solver.class_reps[idx])
            # exp(2 pi i part / m_p) = exp(2 pi i (part * total/m_p) / total)
            table = (table + part * (total_modulus // solver.m)) % total_modulus
            o = _class_order(solver, solver.class_reps[idx])
            order = order * o // _gcd(order, o)
        psi = TwoCocycle(G, total_modulus, table, check=True)
        reps.append(psi)
        orders.append(order)
    pairs = sorted(
        zip(reps, orders),
        key=lambda ro: (0 if ro[0].is_identically_zero else 1, ro[0].values.tobytes()),
    )
    reps = [r for r, _ in pairs]
    orders = [o for _, o in pairs]
    if not reps or not reps[0].is_identically_zero:
        raise IntegrityError("trivial class missing from H^2 enumeration")
    return H2Result(G, total_modulus, reps, orders)


def _class_order(solver: _PrimePowerH2, edge_rep: np.ndarray) -> int:
    k = 1
    cur = edge_rep % solver.m
    while solver.bound_ech.reduce(cur).any():
        cur = (cur + edge_rep) % solver.m
        k += 1
        if k > solver.m:
            raise IntegrityError("class order runaway")
    return k


def cocycle_class_key(psi: TwoCocycle, guards: Guards = DEFAULT) -> bytes:
    """Canonical key of [psi] in H^2(group, C*) (prime-by-prime reduction).

    The value v/m in Q/Z splits over the prime powers p^a || m as
    v_p / p^a with v_p = v * inverse(m / p^a) mod p^a.
    """
    keys = []
    for p, a in sorted(_factorize(psi.modulus).items()):
        solver = _h2_prime_power(psi.group, p, a, guards)
        cof = psi.modulus // p**a
        inv = pow(cof % p**a, -1, p**a)
        part_psi = TwoCocycle(psi.group, p**a, (psi.values * inv) % (p**a), check=False)
        keys.append((p, solver.class_key(part_psi)))
    return repr(keys).encode()


def are_cohomologous(a: TwoCocycle, b: TwoCocycle, guards: Guards = DEFAULT) -> bool:
    x, y = common_modulus(a, b)
    diff = x.baer_sum(y.invert())
    return cocycle_is_trivial(diff, guards)


def cocycle_is_trivial(psi: TwoCocycle, guards: Guards = DEFAULT) -> bool:
    """Is [psi] = 0 in H^2(group, C*)?"""
    if psi.is_identically_zero:
        return True
    for p, a in sorted(_factorize(psi.modulus).items()):
        solver = _h2_prime_power(psi.group, p, a, guards)
        cof = psi.modulus // p**a
        inv = pow(cof % p**a, -1, p**a)
        part = TwoCocycle(psi.group, p**a, (psi.values * inv) % (p**a), check=False)
        zero = np.zeros(solver.ctx.width, dtype=np.int64)
        if solver.class_key(part) != solver.bound_ech.reduce(zero).tobytes():
            return False
    return True


# ---------------------------------------------------------------------------
# Central extensions and projective representation counts
# ---------------------------------------------------------------------------


class CentralExtension:
    """Explicit central extension 1 -> Z/m -> E -> H -> 1 built from a cocycle.

    Elements of E are pairs (z, h) with (z1,h1)(z2,h2) =
    (z1 + z2 + psi(h1,h2), h1 h2); E.total realizes E by left translations.
    """

    def __init__(self, psi: TwoCocycle):
        H = psi.group
        m = psi.modulus
        nH = H.order
        nE = m * nH
        tH = H.mult_table()
        # pair (z, h) <-> raw index z * nH + h
        z1, h1 = np.divmod(np.arange(nE), nH)
        raw_table = np.empty((nE, nE), dtype=np.int64)
        for i in range(nE):
            z, h = int(z1[i]), int(h1[i])
            zz = (z + z1 + psi.values[h, h1]) % m
            raw_table[i] = zz * nH + tH[h, h1]
        self.cocycle = psi
        self.modulus = m
        self.base = H
        total = FiniteGroup.from_mult_table(raw_table)
        self.total = total
        # from_mult_table sorts translation perms; recover the pair of each index
        perm_to_raw = {tuple(raw_table[i]): i for i in range(nE)}
        self.raw_of_index = np.array(
            [perm_to_raw[p] for p in total.elements], dtype=np.int64
        )
        self.index_of_raw = np.empty(nE, dtype=np.int64)
        self.index_of_raw[self.raw_of_index] = np.arange(nE)
        self.projection = (self.raw_of_index % nH).astype(np.int64)
        self.central_part = (self.raw_of_index // nH).astype(np.int64)
        self.section = np.array(
            [self.index_of_raw[h] for h in range(nH)], dtype=np.int64
        )  # z = 0 lifts, so section(e) = e
        self.center_indices = tuple(int(self.index_of_raw[z * nH]) for z in range(m))
        self.center_generator = int(self.index_of_raw[nH]) if m > 1 else 0
        # sanity: designated center really is central
        t = total.mult_table()
        for c in self.center_indices:
            if not (t[c, :] == t[:, c]).all():
                raise IntegrityError("designated center is not central")

    def __repr__(self):
        return f"CentralExtension(|E|={self.total.order}, m={self.modulus})"


def central_extension_from_cocycle(H: FiniteGroup, psi: TwoCocycle) -> CentralExtension:
    if psi.group is not H and psi.group.elements != H.elements:
        raise InvalidInput("cocycle is not defined on the given group")
    psi.verify()
    return CentralExtension(psi)


def regular_classes(H: FiniteGroup, psi: TwoCocycle) -> list[int]:
    """Class representatives that are psi-regular.

    g is regular when psi(g, x) = psi(x, g) for every x in the centralizer
    of g; regularity is constant on classes (checked, not assumed).
    """
    if psi.group is not H and psi.group.elements != H.elements:
        raise InvalidInput("cocycle is not defined on the given group")
    out = []
    classes = H.conjugacy_classes()
    for cls in classes:
        flags = []
        for g in cls:
            cent = H.centralizer(g)
            flags.append(
                bool(
                    ((psi.values[g, cent] - psi.values[cent, g]) % psi.modulus == 0).all()
                )
            )
        if any(flags) != all(flags):
            raise IntegrityError("psi-regularity is not constant on a conjugacy class")
        if flags[0]:
            out.append(cls[0])
    return out


def irrep_count_with_central_character(
    ext: CentralExtension, root_exponent: int = 1, guards: Guards = DEFAULT
) -> int:
    """Number of irreducibles of E whose center acts by z -> zeta_m^(r z).

    root_exponent r selects the character of the designated center; r = 1 is
    the standard (faithful on the cocycle) choice used for projective counts.
    """
    total = ext.total
    m = ext.modulus
    if m == 1:
        return character_table(total, guards).irrep_count
    ct = character_table(total, guards)
    zgen_class = int(total.class_of()[ext.center_generator])
    count = 0
    for i in range(ct.irrep_count):
        val = ct.value(i, zgen_class)
        want = Cyc.root(m, root_exponent % m) * ct.degrees[i]
        if val == want:
            count += 1
    return count


def projective_irrep_count(H: FiniteGroup, psi: TwoCocycle | None,
                           guards: Guards = DEFAULT, cross_check: bool = True) -> int:
    """Number of irreducible psi-projective representations of H.

    Counted as the number of psi-regular conjugacy classes; when cross_check
    is set (the default) the same number is recomputed as the count of
    irreducibles of the explicit central extension with the standard central
    character, and a mismatch is an integrity error.
    """
    if psi is None or psi.modulus == 1 or psi.is_identically_zero and psi.modulus == 1:
        psi = TwoCocycle.trivial(H)
        return len(H.conjugacy_classes())
    count = len(regular_classes(H, psi))
    if cross_check:
        ext = central_extension_from_cocycle(H, psi)
        via_ext = irrep_count_with_central_character(ext, 1, guards)
        if via_ext != count:
            raise IntegrityError(
                f"projective count mismatch: {count} regular classes vs "
                f"{via_ext} central-character irreducibles"
            )
    return count


def projective_irrep_degrees(H: FiniteGroup, psi: TwoCocycle | None,
                             guards: Guards = DEFAULT) -> list[int]:
    """Degrees of the irreducible psi-projective representations."""
    if psi is None or psi.modulus == 1:
        return list(character_table(H, guards).degrees)
    ext = central_extension_from_cocycle(H, psi)
    ct = character_table(ext.total, guards)
    m = ext.modulus
    zgen_class = int(ext.total.class_of()[ext.center_generator])
    out = []
    for i in range(ct.irrep_count):
        if ct.value(i, zgen_class) == Cyc.root(m, 1) * ct.degrees[i]:
            out.append(ct.degrees[i])
    return sorted(out)
