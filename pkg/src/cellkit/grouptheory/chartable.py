"""Exact character tables by the Dixon-Schneider method.

Class-sum matrices are simultaneously diagonalized over a prime field
GF(p) with p = 1 mod exponent(G) and p > 2 sqrt(|G|); central characters
are lifted to exact cyclotomic values through root-of-unity multiplicity
counts.  Row orthogonality is then verified exactly in Z[zeta], so a
published table is correct, not just correct mod p.
"""

from __future__ import annotations

import numpy as np

from ..cyclotomic import Cyc
from ..errors import IntegrityError
from ..guards import DEFAULT, Guards
from .permgroup import FiniteGroup


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    p = exponent + 1
    while True:
        if p * p > 4 * order and p % exponent == 1 and _is_prime(p):
            return p
        p += exponent


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise IntegrityError("no primitive root found")  # pragma: no cover


def _gauss_nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the nullspace of A over GF(p)."""
    A = A.copy() % p
    rows, cols = A.shape
    pivot_col_of_row = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if A[i, c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivot_col_of_row.append(c)
        r += 1
        if r == rows:
            break
    pivots = set(pivot_col_of_row)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivot_col_of_row):
            basis[k, pc] = (-A[i, c]) % p
    return basis % p


def _solve_in_span(basis: np.ndarray, targets: np.ndarray, p: int) -> np.ndarray:
    """Coordinates X with X @ basis = targets (mod p); raises if unsolvable."""
    nb, cols = basis.shape
    aug = np.concatenate([basis.T % p, targets.T % p], axis=1)  # cols x (nb + t)
    A = aug.copy()
    r = 0
    pivot_rows = []
    for c in range(nb):
        pivot = None
        for i in range(r, cols):
            if A[i, c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        for i in range(cols):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivot_rows.append(c)
        r += 1
    for i in range(r, cols):
        if A[i, nb:].any():
            raise IntegrityError("vector not in invariant subspace")
    X = np.zeros((targets.shape[0], nb), dtype=np.int64)
    for i, c in enumerate(pivot_rows):
        X[:, c] = A[i, nb:]
    return X % p


class CharacterTable:
    """Exact character table: classes, degrees, cyclotomic values."""

    def __init__(self, group: FiniteGroup, guards: Guards = DEFAULT):
        guards.check("character_table_order", group.order)
        self.group = group
        self.classes = group.conjugacy_classes()
        self.class_sizes = [len(c) for c in self.classes]
        self.class_reps = [c[0] for c in self.classes]
        self.k = len(self.classes)
        class_of = group.class_of()
        inv = group.inverse_table()
        self.inverse_class = [int(class_of[inv[r]]) for r in self.class_reps]
        self._values: list[list[Cyc]] = []
        self.degrees: list[int] = []
        self._complex: np.ndarray | None = None
        self._compute()
        self._verify()

    # -- the Dixon-Schneider core -------------------------------------------------

    def _class_matrices(self) -> list[np.ndarray]:
        G, k = self.group, self.k
        t = G.mult_table()
        inv = G.inverse_table()
        class_of = G.class_of()
        reps = np.array(self.class_reps, dtype=np.int64)
        mats = []
        for i, cls in enumerate(self.classes):
            M = np.zeros((k, k), dtype=np.int64)
            xs = inv[np.array(cls, dtype=np.int64)]
            prods = class_of[t[np.ix_(xs, reps)]]  # |C_i| x k, class of x^-1 z_k
            for col in range(k):
                counts = np.bincount(prods[:, col], minlength=k)
                M[:, col] = counts
            mats.append(M)
        return mats

    def _split_spaces(self, mats, p) -> list[np.ndarray]:
        k = self.k
        spaces = [np.eye(k, dtype=np.int64)]
        for M in mats[1:]:
            if all(s.shape[0] == 1 for s in spaces):
                break
            Mt = M.T % p  # act on row vectors: v M^T, matching M v for columns
            new_spaces = []
            for basis in spaces:
                if basis.shape[0] == 1:
                    new_spaces.append(basis)
                    continue
                targets = (basis @ Mt) % p
                A = _solve_in_span(basis, targets, p)  # coordinate rows map c -> c A
                for lam in self._eigenvalues(A, p):
                    null = _gauss_nullspace(
                        (A - lam * np.eye(A.shape[0], dtype=np.int64)).T, p
                    )
                    if null.shape[0]:
                        new_spaces.append((null @ basis) % p)
            spaces = new_spaces
        if not all(s.shape[0] == 1 for s in spaces) or len(spaces) != k:
            raise IntegrityError("class matrices failed to split into characters")
        return spaces

    @staticmethod
    def _eigenvalues(A: np.ndarray, p: int) -> list[int]:
        """Roots in GF(p) of the characteristic polynomial of A."""
        d = A.shape[0]
        pts = list(range(d + 1))
        vals = [CharacterTable._det_mod(A - x * np.eye(d, dtype=np.int64), p) for x in pts]
        # Lagrange interpolation to coefficients is unnecessary: evaluate the
        # interpolating polynomial directly at every field element via Newton form
        coeffs = CharacterTable._newton_coeffs(pts, vals, p)
        out = []
        for lam in range(p):
            acc = coeffs[-1]
            for i in range(len(coeffs) - 2, -1, -1):
                acc = (acc * (lam - pts[i]) + coeffs[i]) % p
            if acc % p == 0:
                out.append(lam)
        return out

    @staticmethod
    def _newton_coeffs(pts, vals, p):
        n = len(pts)
        coeffs = [v % p for v in vals]
        for j in range(1, n):
            for i in range(n - 1, j - 1, -1):
                num = (coeffs[i] - coeffs[i - 1]) % p
                den = (pts[i] - pts[i - j]) % p
                coeffs[i] = (num * pow(den, p - 2, p)) % p
        return coeffs

    @staticmethod
    def _det_mod(A: np.ndarray, p: int) -> int:
        A = A.copy() % p
        n = A.shape[0]
        det = 1
        for c in range(n):
            pivot = None
            for i in range(c, n):
                if A[i, c] % p:
                    pivot = i
                    break
            if pivot is None:
                return 0
            if pivot != c:
                A[[c, pivot]] = A[[pivot, c]]
                det = (-det) % p
            det = (det * int(A[c, c])) % p
            inv = pow(int(A[c, c]), p - 2, p)
            for i in range(c + 1, n):
                if A[i, c]:
                    A[i] = (A[i] - (A[i, c] * inv % p) * A[c]) % p
        return det % p

    def _compute(self):
        G, k = self.group, self.k
        order = G.order
        if order == 1:
            self._values = [[Cyc.integer(1)]]
            self.degrees = [1]
            return
        e = G.exponent()
        p = _dixon_prime(order, e)
        self._p = p
        mats = self._class_matrices()
        spaces = self._split_spaces(mats, p)
        sizes = np.array(self.class_sizes, dtype=np.int64)
        size_inv = np.array([pow(int(s), p - 2, p) for s in sizes], dtype=np.int64)
        z = pow(_primitive_root(p), (p - 1) // e, p)  # primitive e-th root mod p

        class_of = G.class_of()
        t = G.mult_table()
        # power map: class of rep^t for each class
        power_class = []
        for rep in self.class_reps:
            row = [0]
            x = rep
            o = G.element_order(rep)
            for _ in range(o - 1):
                row.append(int(class_of[x]))
                x = G.mult(x, rep)
            # row[t] = class of rep^t for t in 0..o-1, with row[0] = identity class
            row[0] = int(class_of[0])
            power_class.append(row)

        characters = []
        for basis in spaces:
            v = basis[0] % p
            if v[0] % p == 0:
                raise IntegrityError("central character vanishes on the identity class")
            v = (v * pow(int(v[0]), p - 2, p)) % p  # omega_j, normalized omega_1 = 1
            s = 0
            for j in range(k):
                s = (s + v[j] * v[self.inverse_class[j]] % p * size_inv[j]) % p
            d2 = (order * pow(int(s), p - 2, p)) % p
            d = None
            for cand in range(1, int(order**0.5) + 1):
                if cand * cand % p == d2 and cand * cand <= order:
                    d = cand
                    break
            if d is None:
                raise IntegrityError("degree recovery failed")
            chi_mod = [(d * int(v[j]) % p) * int(size_inv[j]) % p for j in range(k)]
            values = []
            for j in range(k):
                o = self.group.element_order(self.class_reps[j])
                zo = pow(z, e // o, p)
                o_inv = pow(o, p - 2, p)
                val = Cyc.zero(1)
                for ell in range(o):
                    m = 0
                    for tt in range(o):
                        m = (m + chi_mod[power_class[j][tt]] * pow(zo, (-tt * ell) % o, p)) % p
                    m = (m * o_inv) % p
                    if m:
                        if m > d:
                            raise IntegrityError("eigenvalue multiplicity lift out of range")
                        val = val + Cyc.root(o, ell) * int(m)
                values.append(val)
            if values[0].as_int() != d:
                raise IntegrityError("degree does not match lifted value at identity")
            characters.append((d, values))
        characters.sort(key=lambda dc: (dc[0], [(v.n, v.coeffs) for v in dc[1]]))
        self.degrees = [d for d, _ in characters]
        self._values = [vals for _, vals in characters]

    # -- integrity ------------------------------------------------------------------

    def _verify(self):
        order = self.group.order
        if sum(d * d for d in self.degrees) != order:
            raise IntegrityError("sum of squared degrees does not match group order")
        for d in self.degrees:
            if order % d:
                raise IntegrityError("character degree does not divide group order")
        k = self.k
        for a in range(k):
            for b in range(a, k):
                s = Cyc.zero(1)
                for j in range(k):
                    s = s + self._values[a][j] * self._values[b][self.inverse_class[j]] * self.class_sizes[j]
                expect = order if a == b else 0
                if s != Cyc.integer(expect):
                    raise IntegrityError("exact row orthogonality failed")

    # -- queries ------------------------------------------------------------------------

    @property
    def irrep_count(self) -> int:
        return self.k

    def value(self, char_index: int, class_index: int) -> Cyc:
        return self._values[char_index][class_index]

    def value_at_element(self, char_index: int, element_index: int) -> Cyc:
        return self._values[char_index][int(self.group.class_of()[element_index])]

    def complex_table(self) -> np.ndarray:
        if self._complex is None:
            self._complex = np.array(
                [[v.to_complex() for v in row] for row in self._values], dtype=complex
            )
        return self._complex

    def __repr__(self):
        return f"CharacterTable(order={self.group.order}, irreps={self.degrees})"


def character_table(group: FiniteGroup, guards: Guards = DEFAULT) -> CharacterTable:
    cached = getattr(group, "_char_table", None)
    if cached is None:
        cached = CharacterTable(group, guards)
        group._char_table = cached
    return cached
