"""Coxeter groups with ShortLex reduced-word normal forms.

Two engines sit behind one interface:

* crystallographic finite types (products of A..G) act exactly on their
  integer root systems, so multiplication and descent tests are permutation
  arithmetic with no rewriting search;
* arbitrary Coxeter matrices with bonds in {2,3,4,5,6,oo} use the standard
  reflection representation over Q(sqrt2, sqrt3, sqrt5) with exact sign
  tests, subject to a configurable reduced-length guard.

Generators are indexed from 0.  Equality of elements is equality of their
ShortLex-minimal reduced words, which makes hashing and caching trivial.
All values are immutable after construction; the only internal mutability
is insert-only memo tables, which are safe for concurrent readers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import GuardExceeded, InvalidInput
from .guards import DEFAULT, Guards

#: Coxeter-matrix encoding of an infinite bond.
INFINITE = 0

_FINITE_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
    "H": lambda n: {3: 120, 4: 14400}[n],
    "I": None,  # dihedral, order 2m, handled separately
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# Cartan labels and Coxeter matrices
# ---------------------------------------------------------------------------


def _bourbaki_bonds(letter: str, n: int) -> list[tuple[int, int, int]]:
    """Edges (i, j, m) of the Coxeter diagram, 0-based Bourbaki numbering."""
    chain3 = [(i, i + 1, 3) for i in range(n - 1)]
    if letter == "A":
        if n < 1:
            raise InvalidInput("A_n needs n >= 1")
        return chain3
    if letter in ("B", "C"):
        if n < 2:
            raise InvalidInput("B_n/C_n needs n >= 2")
        return chain3[:-1] + [(n - 2, n - 1, 4)]
    if letter == "D":
        if n < 3:
            raise InvalidInput("D_n needs n >= 3")
        return [(i, i + 1, 3) for i in range(n - 3)] + [(n - 3, n - 2, 3), (n - 3, n - 1, 3)]
    if letter == "E":
        if n not in (6, 7, 8):
            raise InvalidInput("E_n needs n in {6,7,8}")
        edges = [(0, 2, 3), (1, 3, 3), (2, 3, 3)]
        edges += [(i, i + 1, 3) for i in range(3, n - 1)]
        return edges
    if letter == "F":
        if n != 4:
            raise InvalidInput("F_n needs n = 4")
        return [(0, 1, 3), (1, 2, 4), (2, 3, 3)]
    if letter == "G":
        if n != 2:
            raise InvalidInput("G_n needs n = 2")
        return [(0, 1, 6)]
    raise InvalidInput(f"unknown type letter '{letter}'")


def _matrix_from_bonds(n: int, bonds) -> tuple[tuple[int, ...], ...]:
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for i, j, b in bonds:
        m[i][j] = m[j][i] = b
    return tuple(tuple(row) for row in m)


_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


def parse_label(label: str) -> list[tuple[str, int]]:
    """Parse 'A2xB3' (also '*' or '+' separators) into [(letter, rank), ...]."""
    text = label.strip().replace(" ", "")
    if text in ("", "1", "e", "trivial"):
        return []
    parts = re.split(r"[x*+]", text)
    out = []
    for part in parts:
        m = _LABEL_RE.match(part)
        if not m:
            raise InvalidInput(f"cannot parse Cartan label component '{part}'")
        out.append((m.group(1), int(m.group(2))))
    return out


# ---------------------------------------------------------------------------
# Diagram classification
# ---------------------------------------------------------------------------


def _components(matrix) -> list[list[int]]:
    n = len(matrix)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and matrix[i][j] not in (1, 2):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_component(matrix, comp) -> tuple[str, int] | None:
    """Return (letter, rank) from the finite classification, or None."""
    rank = len(comp)
    edges = [
        (a, b, matrix[comp[a]][comp[b]])
        for a in range(rank)
        for b in range(a + 1, rank)
        if matrix[comp[a]][comp[b]] not in (1, 2)
    ]
    if any(m == INFINITE for _, _, m in edges):
        return None
    if rank == 1:
        return ("A", 1)
    if rank == 2:
        m = edges[0][2]
        return {3: ("A", 2), 4: ("B", 2), 5: ("I", 5), 6: ("G", 2)}.get(m, ("I", m))
    if len(edges) != rank - 1:
        return None  # a cycle: affine or worse
    deg = [0] * rank
    for a, b, _ in edges:
        deg[a] += 1
        deg[b] += 1
    if max(deg) > 3:
        return None
    special = sorted(m for _, _, m in edges if m != 3)
    branch_nodes = [i for i in range(rank) if deg[i] == 3]
    if len(branch_nodes) > 1:
        return None
    if not branch_nodes:
        # a path; walk it from one end
        ends = [i for i in range(rank) if deg[i] == 1]
        adj = {i: [] for i in range(rank)}
        for a, b, m in edges:
            adj[a].append((b, m))
            adj[b].append((a, m))
        path_bonds = []
        prev, cur = None, ends[0]
        while True:
            nxts = [(j, m) for j, m in adj[cur] if j != prev]
            if not nxts:
                break
            nxt, m = nxts[0]
            path_bonds.append(m)
            prev, cur = cur, nxt
        if not special:
            return ("A", rank)
        if special == [4]:
            if path_bonds[0] == 4 or path_bonds[-1] == 4:
                return ("B", rank)
            if rank == 4 and path_bonds[1] == 4:
                return ("F", 4)
            return None
        if special == [5]:
            if rank in (3, 4) and (path_bonds[0] == 5 or path_bonds[-1] == 5):
                return ("H", rank)
            return None
        return None
    if special:
        return None
    # simply-laced tree with one branch node: D or E by leg lengths
    adj = {i: [] for i in range(rank)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    c = branch_nodes[0]
    legs = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxts = [j for j in adj[cur] if j != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", rank)
    if legs == [1, 2, 2]:
        return ("E", 6)
    if legs == [1, 2, 3]:
        return ("E", 7)
    if legs == [1, 2, 4]:
        return ("E", 8)
    return None


# ---------------------------------------------------------------------------
# Exact arithmetic in Q(sqrt2, sqrt3, sqrt5) for the general engine
# ---------------------------------------------------------------------------

_SQ_PRIMES = (2, 3, 5)


def _key_product(s: int, t: int) -> tuple[int, int]:
    """Multiply basis radicals indexed by bitmasks; returns (rational factor, key)."""
    factor = 1
    for bit, p in enumerate(_SQ_PRIMES):
        if (s >> bit) & 1 and (t >> bit) & 1:
            factor *= p
    return factor, s ^ t


class QF:
    """Element of Q(sqrt2, sqrt3, sqrt5) as a map radical-mask -> Fraction."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {k: v for k, v in (c or {}).items() if v}

    @staticmethod
    def rational(x) -> "QF":
        return QF({0: Fraction(x)})

    def __add__(self, other):
        c = dict(self.c)
        for k, v in other.c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            elif k in c:
                del c[k]
        return QF(c)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QF({k: -v for k, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QF({k: v * other for k, v in self.c.items()})
        c = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                f, k = _key_product(k1, k2)
                s = c.get(k, 0) + v1 * v2 * f
                if s:
                    c[k] = s
                elif k in c:
                    del c[k]
        return QF(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        return isinstance(other, QF) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def sign(self) -> int:
        """Exact sign via interval refinement (0 only for the zero element)."""
        if not self.c:
            return 0
        digits = 30
        while True:
            scale = 10**digits
            lo = hi = Fraction(0)
            for k, v in self.c.items():
                rad = 1
                for bit, p in enumerate(_SQ_PRIMES):
                    if (k >> bit) & 1:
                        rad *= p
                r = isqrt(rad * scale * scale)  # floor(sqrt(rad)*scale)
                rlo, rhi = Fraction(r, scale), Fraction(r + 1, scale)
                if v >= 0:
                    lo += v * rlo
                    hi += v * rhi
                else:
                    lo += v * rhi
                    hi += v * rlo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2
            if digits > 2000:  # pragma: no cover
                raise ArithmeticError("sign refinement failed to converge")


_COS_PI_OVER = {
    2: QF(),
    3: QF({0: Fraction(1, 2)}),
    4: QF({1: Fraction(1, 2)}),  # sqrt2 / 2
    5: QF({0: Fraction(1, 4), 4: Fraction(1, 4)}),  # (1 + sqrt5)/4
    6: QF({2: Fraction(1, 2)}),  # sqrt3 / 2
    INFINITE: QF({0: Fraction(1)}),
}


# ---------------------------------------------------------------------------
# Elements and the datum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """A Coxeter group element in ShortLex-minimal reduced form."""

    datum: "CoxeterDatum"
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.datum.multiply(self, other)

    def inverse(self) -> "GroupElement":
        return self.datum.inverse(self)

    def __repr__(self):
        return f"<{'.'.join(str(i + 1) for i in self.word) or 'e'}>"


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of generator indices preserving the Coxeter matrix."""

    datum: "CoxeterDatum"
    perm: tuple[int, ...]

    def __post_init__(self):
        n = self.datum.generator_count
        if sorted(self.perm) != list(range(n)):
            raise InvalidInput("diagram automorphism must be a permutation of generators")
        m = self.datum.coxeter_matrix
        for i in range(n):
            for j in range(n):
                if m[self.perm[i]][self.perm[j]] != m[i][j]:
                    raise InvalidInput("permutation does not preserve the Coxeter matrix")

    def apply(self, x: GroupElement) -> GroupElement:
        return self.datum.normalize([self.perm[i] for i in x.word])

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        return DiagramAutomorphism(
            self.datum, tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        )

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))


class CoxeterDatum:
    """A Coxeter system: matrix, optional Cartan label, and its engines."""

    def __init__(self, coxeter_matrix, cartan_label: str | None = None,
                 guards: Guards = DEFAULT):
        matrix = tuple(tuple(int(x) for x in row) for row in coxeter_matrix)
        n = len(matrix)
        for i in range(n):
            if len(matrix[i]) != n or matrix[i][i] != 1:
                raise InvalidInput("Coxeter matrix must be square with unit diagonal")
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidInput("Coxeter matrix must be symmetric")
                if i != j and matrix[i][j] != INFINITE and matrix[i][j] < 2:
                    raise InvalidInput("off-diagonal entries must be >= 2 or infinite (0)")
        self.coxeter_matrix = matrix
        self.generator_count = n
        self.cartan_label = cartan_label
        self.guards = guards

        comps = _components(matrix)
        types = [_classify_component(matrix, c) for c in comps]
        self.finite = all(t is not None for t in types)
        self._component_types = types
        self._crystallographic = self.finite and all(
            matrix[i][j] in (1, 2, 3, 4, 6) for i in range(n) for j in range(n)
        )
        if not self._crystallographic:
            bad = {
                matrix[i][j]
                for i in range(n)
                for j in range(i + 1, n)
                if matrix[i][j] not in (1, 2, 3, 4, 5, 6, INFINITE)
            }
            if bad:
                raise InvalidInput(
                    f"bond orders {sorted(bad)} unsupported (allowed: 2,3,4,5,6,infinity)"
                )

        self._identity = GroupElement(self, ())
        self._perm_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._bruhat_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        self._elements: list[GroupElement] | None = None
        self._element_index: dict[tuple[int, ...], int] | None = None
        if self._crystallographic and n > 0:
            self._build_roots()
        elif n > 0:
            self._build_reflection_rep()
        else:
            self._n_pos = 0

    # -- bookkeeping ---------------------------------------------------------

    def __repr__(self):
        return f"CoxeterDatum({self.cartan_label or self.coxeter_matrix})"

    def order(self) -> int | None:
        """Group order from the classification, or None if infinite."""
        if not self.finite:
            return None
        out = 1
        for t in self._component_types:
            letter, rank = t
            out *= 2 * rank if letter == "I" else _FINITE_ORDERS[letter](rank)
        return out

    @property
    def identity(self) -> GroupElement:
        return self._identity

    def generator(self, i: int) -> GroupElement:
        if not 0 <= i < self.generator_count:
            raise InvalidInput(f"generator index {i} out of range")
        return GroupElement(self, (i,))

    # -- crystallographic engine ----------------------------------------------

    def _build_roots(self):
        n = self.generator_count
        m = self.coxeter_matrix
        # any orientation of the multiple bonds yields a valid root datum with
        # the same Weyl group; fix i<j -> (-1, -bond) for determinism
        cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if m[i][j] >= 3:
                    cartan[i][j] = -1
                    cartan[j][i] = -{3: 1, 4: 2, 6: 3}[m[i][j]]
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]

        def reflect(i, v):
            coef = sum(cartan[i][j] * v[j] for j in range(n))
            return tuple(v[k] - coef if k == i else v[k] for k in range(n))

        roots = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for v in frontier:
                for i in range(n):
                    w = reflect(i, v)
                    if w not in roots:
                        roots.add(w)
                        new.append(w)
            frontier = new
        positive = sorted(r for r in roots if any(x > 0 for x in r))
        # simple roots first, for direct descent lookups
        positive = simple + [r for r in positive if r not in set(simple)]
        index = {r: k for k, r in enumerate(positive)}
        for k, r in enumerate(positive):
            index[tuple(-x for x in r)] = k + len(positive)
        self._n_pos = len(positive)
        self._gen_perms = []
        for i in range(n):
            perm = [0] * (2 * len(positive))
            for r, k in index.items():
                perm[k] = index[reflect(i, r)]
            self._gen_perms.append(tuple(perm))
        self._root_index = index

    def _perm_of(self, word: tuple[int, ...]) -> tuple[int, ...]:
        cached = self._perm_cache.get(word)
        if cached is not None:
            return cached
        size = 2 * self._n_pos
        perm = tuple(range(size))
        for i in reversed(word):  # w = s_{i1}...s_{ik} acts by perm_{i1} o ... o perm_{ik}
            g = self._gen_perms[i]
            perm = tuple(g[perm[r]] for r in range(size))
        if len(word) <= 2 or len(self._perm_cache) < 200_000:
            self._perm_cache[word] = perm
        return perm

    def _canonical_word_from_perm(self, perm) -> tuple[int, ...]:
        n, npos = self.generator_count, self._n_pos
        word = []
        size = 2 * npos
        while True:
            inv = [0] * size
            for r in range(size):
                inv[perm[r]] = r
            found = -1
            for i in range(n):
                if inv[i] >= npos:  # w^-1(alpha_i) < 0: i is a left descent
                    found = i
                    break
            if found < 0:
                return tuple(word)
            word.append(found)
            g = self._gen_perms[found]
            perm = tuple(g[perm[r]] for r in range(size))

    # -- general reflection engine ----------------------------------------------

    def _build_reflection_rep(self):
        n = self.generator_count
        m = self.coxeter_matrix
        self._bilinear = [
            [
                QF.rational(1) if i == j else -_COS_PI_OVER[m[i][j]]
                for j in range(n)
            ]
            for i in range(n)
        ]

    def _gen_reflect(self, i: int, v: list[QF]) -> list[QF]:
        coef = QF()
        for j, c in enumerate(v):
            if c.c:
                coef = coef + self._bilinear[i][j] * c
        out = list(v)
        out[i] = out[i] - 2 * coef
        return out

    def _word_image_of_alpha(self, word, i: int) -> list[QF]:
        """Image of alpha_i under the product of the word's reflections."""
        v = [QF.rational(1) if k == i else QF() for k in range(self.generator_count)]
        for letter in reversed(word):
            v = self._gen_reflect(letter, v)
        return v

    @staticmethod
    def _is_negative(v) -> bool:
        for c in v:
            s = c.sign()
            if s:
                return s < 0
        raise ArithmeticError("zero vector is not a root")  # pragma: no cover

    def _word_reduce(self, word) -> tuple[int, ...]:
        """Right-multiply letter by letter, deleting via the exchange property."""
        reduced: list[int] = []
        for s in word:
            # sign of w(alpha_s) decides whether the length goes up or down
            if not reduced or not self._is_negative(self._word_image_of_alpha(reduced, s)):
                reduced.append(s)
            else:
                # find j with w = w_1..w_k, suffix w_{j+1}..w_k(alpha_s) = alpha_{w_j}
                v = [QF.rational(1) if k == s else QF() for k in range(self.generator_count)]
                for j in range(len(reduced) - 1, -1, -1):
                    target = reduced[j]
                    matches = all(
                        (v[k] - QF.rational(1 if k == target else 0)).is_zero()
                        for k in range(self.generator_count)
                    )
                    if matches:
                        del reduced[j]
                        break
                    v = self._gen_reflect(target, v)
                else:  # pragma: no cover
                    raise ArithmeticError("exchange property failed")
        return tuple(reduced)

    def _word_shortlex(self, reduced) -> tuple[int, ...]:
        """ShortLex normal form of an already reduced word (peel left descents)."""
        word = list(reduced)
        out: list[int] = []
        while word:
            for i in range(self.generator_count):
                # left descent test: w^-1(alpha_i) < 0, w^-1 = reversed word
                img = self._word_image_of_alpha(tuple(reversed(word)), i)
                if self._is_negative(img):
                    out.append(i)
                    word = list(self._word_reduce([i] + word))
                    break
            else:  # pragma: no cover
                raise ArithmeticError("nonempty reduced word with no left descent")
        return tuple(out)

    # -- normal forms and arithmetic ---------------------------------------------

    def normalize(self, word) -> GroupElement:
        word = tuple(int(i) for i in word)
        for i in word:
            if not 0 <= i < self.generator_count:
                raise InvalidInput(f"generator index {i} out of range")
        if self.generator_count == 0:
            return self._identity
        if self._crystallographic:
            return GroupElement(self, self._canonical_word_from_perm(self._perm_of(word)))
        reduced = self._word_reduce(word)
        self.guards.check("word_length", len(reduced))
        return GroupElement(self, self._word_shortlex(reduced))

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        if x.datum is not self or y.datum is not self:
            raise InvalidInput("elements belong to a different datum")
        return self.normalize(x.word + y.word)

    def inverse(self, x: GroupElement) -> GroupElement:
        return self.normalize(tuple(reversed(x.word)))

    def length(self, x: GroupElement) -> int:
        return len(x.word)

    def right_descents(self, x: GroupElement) -> frozenset[int]:
        if self._crystallographic:
            perm = self._perm_of(x.word)
            return frozenset(
                i for i in range(self.generator_count) if perm[i] >= self._n_pos
            )
        return frozenset(
            i
            for i in range(self.generator_count)
            if x.word and self._is_negative(self._word_image_of_alpha(x.word, i))
        )

    def left_descents(self, x: GroupElement) -> frozenset[int]:
        if not x.word:
            return frozenset()
        if self._crystallographic:
            perm = self._perm_of(x.word)
            inv = [0] * len(perm)
            for r, p in enumerate(perm):
                inv[p] = r
            return frozenset(
                i for i in range(self.generator_count) if inv[i] >= self._n_pos
            )
        rev = tuple(reversed(x.word))
        return frozenset(
            i
            for i in range(self.generator_count)
            if self._is_negative(self._word_image_of_alpha(rev, i))
        )

    # -- enumeration and Bruhat order -----------------------------------------------

    def enumerate_elements(self, guards: Guards | None = None) -> list[GroupElement]:
        """All elements sorted by (length, ShortLex word)."""
        if self._elements is not None:
            return self._elements
        guards = guards or self.guards
        if not self.finite:
            raise GuardExceeded("coxeter_enumeration", "infinite", guards.limit("coxeter_enumeration"))
        guards.check("coxeter_enumeration", self.order())
        seen = {(): self._identity}
        frontier = [self._identity]
        while frontier:
            new = []
            for x in frontier:
                for i in range(self.generator_count):
                    y = self.multiply(x, self.generator(i))
                    if y.length > x.length and y.word not in seen:
                        seen[y.word] = y
                        new.append(y)
            frontier = new
        elements = sorted(seen.values(), key=lambda e: (e.length, e.word))
        self._elements = elements
        self._element_index = {e.word: k for k, e in enumerate(elements)}
        return elements

    def element_index(self, x: GroupElement) -> int:
        if self._element_index is None:
            self.enumerate_elements()
        return self._element_index[x.word]

    def longest_element(self) -> GroupElement:
        elements = self.enumerate_elements()
        return elements[-1]

    def bruhat_leq(self, x: GroupElement, y: GroupElement) -> bool:
        """Bruhat order via the standard lifting recursion (subword property)."""
        if x.datum is not self or y.datum is not self:
            raise InvalidInput("elements belong to a different datum")
        key = (x.word, y.word)
        memo = self._bruhat_memo
        cached = memo.get(key)
        if cached is not None:
            return cached
        if x.length > y.length:
            out = False
        elif x.word == y.word:
            out = True
        elif not y.word:
            out = False
        else:
            i = min(self.right_descents(y))
            s = self.generator(i)
            ys = self.multiply(y, s)
            if i in self.right_descents(x):
                out = self.bruhat_leq(self.multiply(x, s), ys)
            else:
                out = self.bruhat_leq(x, ys)
        memo[key] = out
        return out

    def bruhat_interval(self, w: GroupElement) -> list[GroupElement]:
        """All x <= w, sorted by (length, word)."""
        if self.finite and self._elements is not None:
            return [x for x in self._elements if self.bruhat_leq(x, w)]
        # downward closure by deleting letters (subword property)
        seen = {w.word: w}
        frontier = [w]
        while frontier:
            new = []
            for y in frontier:
                for k in range(len(y.word)):
                    x = self.normalize(y.word[:k] + y.word[k + 1 :])
                    if x.word not in seen:
                        seen[x.word] = x
                        new.append(x)
            frontier = new
        return sorted(seen.values(), key=lambda e: (e.length, e.word))

    # -- diagram automorphisms ----------------------------------------------------

    def diagram_automorphism(self, perm) -> DiagramAutomorphism:
        return DiagramAutomorphism(self, tuple(int(i) for i in perm))

    def identity_automorphism(self) -> DiagramAutomorphism:
        return DiagramAutomorphism(self, tuple(range(self.generator_count)))


# ---------------------------------------------------------------------------
# Public constructors
# ---------------------------------------------------------------------------


def datum_from_type(label: str, guards: Guards = DEFAULT) -> CoxeterDatum:
    """Build a datum from a Cartan-type label ('A3', 'B2xA1') or a matrix literal.

    A label starting with '[' is parsed as a JSON Coxeter matrix with the
    convention that 0 encodes an infinite bond.
    """
    label = label.strip()
    if label.startswith("["):
        try:
            matrix = json.loads(label)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"bad matrix literal: {exc}") from exc
        return CoxeterDatum(matrix, cartan_label=None, guards=guards)
    parts = parse_label(label)
    bonds = []
    offset = 0
    for letter, rank in parts:
        for i, j, m in _bourbaki_bonds(letter, rank):
            bonds.append((i + offset, j + offset, m))
        offset += rank
    name = "x".join(f"{letter}{rank}" for letter, rank in parts) or "trivial"
    return CoxeterDatum(_matrix_from_bonds(offset, bonds), cartan_label=name, guards=guards)


def trivial_datum(guards: Guards = DEFAULT) -> CoxeterDatum:
    """The rank-0 Coxeter datum (trivial group), used for length-zero setups."""
    return datum_from_type("trivial", guards=guards)
