"""Based rings: free Z-modules with a distinguished basis, nonnegative
structure constants, a decomposed unit, and a basis involution.

This is the shared carrier for asymptotic J-rings of cells and for the
convolution rings K_G(X x X); the two are compared through
`based_ring_iso`, whose search is complete under the basis-size guard.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IntegrityError, InvalidInput
from .guards import DEFAULT, Guards


@dataclass(frozen=True)
class BasedRing:
    """t_i t_j = sum_k structure[i,j][k] t_k, gamma >= 0."""

    labels: tuple
    structure: dict  # (i, j) -> {k: positive int}
    unit_components: frozenset
    involution: tuple

    def __post_init__(self):
        # normalize: drop zero entries, freeze nothing else
        clean = {}
        for (i, j), row in self.structure.items():
            row = {k: int(c) for k, c in row.items() if c}
            if row:
                clean[(i, j)] = row
        object.__setattr__(self, "structure", clean)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def gamma(self, i: int, j: int, k: int) -> int:
        return self.structure.get((i, j), {}).get(k, 0)

    def product_row(self, i: int, j: int) -> dict:
        return dict(self.structure.get((i, j), {}))

    def left_matrix(self, i: int) -> np.ndarray:
        """Matrix of left multiplication by t_i on the basis (columns in)."""
        n = self.rank
        M = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            for k, c in self.structure.get((i, j), {}).items():
                M[k, j] = c
        return M

    # -- integrity -----------------------------------------------------------

    def validate(self):
        n = self.rank
        if sorted(self.involution) != list(range(n)):
            raise IntegrityError("involution is not a permutation of the basis")
        for (i, j), row in self.structure.items():
            for k, c in row.items():
                if c < 0:
                    raise IntegrityError(f"negative structure constant at {(i, j, k)}")
        # the sum of unit components is a two-sided unit
        for i in range(n):
            left = {}
            right = {}
            for e in self.unit_components:
                for k, c in self.structure.get((e, i), {}).items():
                    left[k] = left.get(k, 0) + c
                for k, c in self.structure.get((i, e), {}).items():
                    right[k] = right.get(k, 0) + c
            if left != {i: 1} or right != {i: 1}:
                raise IntegrityError(f"unit decomposition fails at basis element {i}")
        # involution is an anti-automorphism fixing the unit set
        star = self.involution
        if frozenset(star[e] for e in self.unit_components) != self.unit_components:
            raise IntegrityError("involution does not fix the unit components")
        for (i, j), row in self.structure.items():
            for k, c in row.items():
                if self.gamma(star[j], star[i], star[k]) != c:
                    raise IntegrityError("involution is not an anti-automorphism")
        # associativity
        for i in range(n):
            for j in range(n):
                ij = self.structure.get((i, j), {})
                for k in range(n):
                    lhs = {}
                    for m, c in ij.items():
                        for z, d in self.structure.get((m, k), {}).items():
                            lhs[z] = lhs.get(z, 0) + c * d
                    rhs = {}
                    for m, c in self.structure.get((j, k), {}).items():
                        for z, d in self.structure.get((i, m), {}).items():
                            rhs[z] = rhs.get(z, 0) + c * d
                    lhs = {z: c for z, c in lhs.items() if c}
                    rhs = {z: c for z, c in rhs.items() if c}
                    if lhs != rhs:
                        raise IntegrityError(f"associativity fails at ({i},{j},{k})")
        return self

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema": "cellkit/1",
            "kind": "based_ring",
            "labels": [str(l) for l in self.labels],
            "unit_components": sorted(self.unit_components),
            "involution": list(self.involution),
            "structure": [
                [i, j, sorted([k, c] for k, c in row.items())]
                for (i, j), row in sorted(self.structure.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "BasedRing":
        if data.get("kind") != "based_ring":
            raise InvalidInput("not a based-ring JSON object")
        structure = {
            (int(i), int(j)): {int(k): int(c) for k, c in row}
            for i, j, row in data["structure"]
        }
        return BasedRing(
            tuple(data["labels"]),
            structure,
            frozenset(int(e) for e in data["unit_components"]),
            tuple(int(x) for x in data["involution"]),
        )


def unit_decomposition(ring: BasedRing) -> list:
    """Labels of the basis elements whose sum is the unit."""
    return [ring.labels[i] for i in sorted(ring.unit_components)]


# ---------------------------------------------------------------------------
# Frobenius-Perron dimensions
# ---------------------------------------------------------------------------


def _linked_components(ring: BasedRing) -> list[list[int]]:
    n = ring.rank
    adj = [set() for _ in range(n)]
    for (i, j), row in ring.structure.items():
        for k in row:
            adj[i] |= {j, k}
            adj[j] |= {i, k}
            adj[k] |= {i, j}
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def fpdim(ring: BasedRing, tol: float = 1e-10) -> tuple[list[float], float]:
    """Per-basis FP-dimensions and the global total sum of squares.

    The dimension vector is the Perron eigenvector of left multiplication
    by the sum of all basis elements, normalized so unit components get 1;
    decomposable rings are handled component by component.
    """
    n = ring.rank
    dims = [0.0] * n
    N = np.zeros((n, n), dtype=float)
    for i in range(n):
        N += ring.left_matrix(i)
    for comp in _linked_components(ring):
        sub = N[np.ix_(comp, comp)]
        vals, vecs = np.linalg.eig(sub)
        idx = int(np.argmax(vals.real))
        v = vecs[:, idx].real
        if abs(v.sum()) < tol:
            raise IntegrityError("degenerate Perron eigenvector")
        if v.sum() < 0:
            v = -v
        # Rayleigh refinement for a clean eigenvalue/eigenvector pair
        for _ in range(100):
            w = sub @ v
            lam = float(v @ w) / float(v @ v)
            nv = w / np.linalg.norm(w)
            if np.linalg.norm(nv - v) < tol:
                v = nv
                break
            v = nv
        units = [u for u in sorted(ring.unit_components) if u in comp]
        if not units:
            raise IntegrityError("component without a unit element")
        scale = v[comp.index(units[0])]
        if abs(scale) < tol:
            raise IntegrityError("Perron vector vanishes on a unit component")
        v = v / scale
        for u in units:
            if abs(v[comp.index(u)] - 1.0) > 1e-8:
                raise IntegrityError("unit components got unequal FP-dimensions")
        if (v < -tol).any():
            raise IntegrityError("Perron vector is not positive")
        for pos, b in enumerate(comp):
            dims[b] = float(v[pos])
    total = float(sum(d * d for d in dims))
    return dims, total


# ---------------------------------------------------------------------------
# Based subrings
# ---------------------------------------------------------------------------


def _closure_subset(ring: BasedRing, seed: frozenset[int]) -> frozenset[int]:
    cur = set(seed) | set(ring.unit_components)
    star = ring.involution
    while True:
        new = set()
        for i in cur:
            if star[i] not in cur:
                new.add(star[i])
            for j in cur:
                for k in ring.structure.get((i, j), {}):
                    if k not in cur:
                        new.add(k)
        if not new:
            return frozenset(cur)
        cur |= new


def based_subrings(ring: BasedRing, guards: Guards = DEFAULT) -> list[dict]:
    """All based subrings (subsets closed under product and involution that
    contain the unit components), each with its FP-dimension total."""
    guards.check("subring_basis", ring.rank)
    base = _closure_subset(ring, frozenset())
    found = {base}
    frontier = [base]
    while frontier:
        new = []
        for s in frontier:
            for x in range(ring.rank):
                if x in s:
                    continue
                t = _closure_subset(ring, s | {x})
                if t not in found:
                    found.add(t)
                    new.append(t)
        frontier = new
    out = []
    for subset in sorted(found, key=lambda s: (len(s), sorted(s))):
        sub = restrict_ring(ring, sorted(subset))
        _, total = fpdim(sub)
        out.append(
            {
                "basis": sorted(subset),
                "labels": [ring.labels[i] for i in sorted(subset)],
                "fpdim_total": total,
                "proper": len(subset) < ring.rank,
                "trivial": subset == base,
            }
        )
    return out


def restrict_ring(ring: BasedRing, subset: list[int]) -> BasedRing:
    pos = {b: i for i, b in enumerate(subset)}
    structure = {}
    for i in subset:
        for j in subset:
            row = ring.structure.get((i, j), {})
            bad = [k for k in row if k not in pos]
            if bad:
                raise InvalidInput("subset is not closed under multiplication")
            if row:
                structure[(pos[i], pos[j])] = {pos[k]: c for k, c in row.items()}
    return BasedRing(
        tuple(ring.labels[i] for i in subset),
        structure,
        frozenset(pos[u] for u in ring.unit_components if u in pos),
        tuple(pos[ring.involution[i]] for i in subset),
    )


# ---------------------------------------------------------------------------
# Based ring isomorphism search
# ---------------------------------------------------------------------------


def _invariant_key(ring: BasedRing, dims: list[float], i: int) -> tuple:
    star = ring.involution
    diag = sorted(ring.structure.get((i, i), {}).values())
    self_pair = sorted(ring.structure.get((i, star[i]), {}).values())
    return (
        i in ring.unit_components,
        star[i] == i,
        round(dims[i], 6),
        tuple(diag),
        tuple(self_pair),
        sum(ring.structure.get((i, i), {}).values()),
    )


def based_ring_iso(r1: BasedRing, r2: BasedRing,
                   guards: Guards = DEFAULT) -> list[int] | None:
    """A basis bijection matching units, involutions, and all structure
    constants, or None (certified: the backtracking search is complete)."""
    guards.check("iso_basis", max(r1.rank, r2.rank))
    if r1.rank != r2.rank:
        return None
    n = r1.rank
    d1, _ = fpdim(r1)
    d2, _ = fpdim(r2)
    inv1 = [_invariant_key(r1, d1, i) for i in range(n)]
    inv2 = [_invariant_key(r2, d2, i) for i in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [
        [j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)
    ]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    image = [-1] * n
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        si, sj = r1.involution[i], r2.involution[j]
        if image[si] != -1 and image[si] != sj:
            return False
        # products with every assigned element must agree where decided
        for a in range(n):
            if image[a] == -1:
                continue
            for (x, y) in ((i, a), (a, i)):
                row1 = r1.structure.get((x, y), {})
                row2 = r2.structure.get((image[x], image[y]), {})
                if sum(row1.values()) != sum(row2.values()):
                    return False
                if sum(c * c for c in row1.values()) != sum(c * c for c in row2.values()):
                    return False
                for k, c in row1.items():
                    if image[k] != -1 and row2.get(image[k], 0) != c:
                        return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == n:
            return _full_check(r1, r2, image)
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            used[j] = True
            if consistent(i, j) and backtrack(pos + 1):
                return True
            image[i] = -1
            used[j] = False
        return False

    if backtrack(0):
        return list(image)
    return None


def _full_check(r1: BasedRing, r2: BasedRing, image: list[int]) -> bool:
    if frozenset(image[e] for e in r1.unit_components) != r2.unit_components:
        return False
    for i in range(r1.rank):
        if image[r1.involution[i]] != r2.involution[image[i]]:
            return False
    for i in range(r1.rank):
        for j in range(r1.rank):
            row1 = r1.structure.get((i, j), {})
            row2 = r2.structure.get((image[i], image[j]), {})
            if {image[k]: c for k, c in row1.items()} != row2:
                return False
    return True
