"""Exact Hecke-algebra arithmetic over Z[v, v^-1].

Balanced (self-dual) normalization throughout:

    H_s^2 = 1 + (v^-1 - v) H_s,        b_s = H_s + v,
    b_w = sum_{x <= w} h_{x,w} H_x,    h_{w,w} = 1,  h_{x,w} in v Z[v] for x < w,
    bar(b_w) = b_w,  where bar(v) = v^-1 and bar(H_w) = (H_{w^-1})^-1.

The classical polynomials are recovered through
h_{x,w}(v) = v^{l(w)-l(x)} P_{x,w}(v^-2), and mu(x, w) is the coefficient
of v in h_{x,w}.

The extended algebra tensors a finite length-zero group Omega acting by
diagram automorphisms:  (h1 (x) o1) (h2 (x) o2) = h1 Y(o1)h2 (x) o1 o2.

HeckeElements are immutable values.  KLTable columns are inserted whole,
never partially, so concurrent readers always see complete data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coxeter import CoxeterDatum, DiagramAutomorphism, GroupElement
from .errors import IntegrityError, InvalidInput
from .guards import DEFAULT, Guards
from .laurent import LaurentPoly, V_PLUS_VINV

STANDARD = "H"
KL = "b"

_V = LaurentPoly.v(1)
_VINV = LaurentPoly.v(-1)
_ONE = LaurentPoly.one()
_BAR_HS_TAIL = LaurentPoly({1: 1, -1: -1})  # v - v^-1, from H_s^-1 = H_s + (v - v^-1)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeElement:
    """A Z[v,v^-1]-combination of basis elements tagged H_w or b_w."""

    datum: CoxeterDatum
    basis: str
    terms_frozen: frozenset

    @staticmethod
    def make(datum, basis, terms: dict[GroupElement, LaurentPoly]) -> "HeckeElement":
        clean = {w: c for w, c in terms.items() if c}
        return HeckeElement(datum, basis, frozenset(clean.items()))

    @property
    def terms(self) -> dict[GroupElement, LaurentPoly]:
        return dict(self.terms_frozen)

    def coeff(self, w: GroupElement) -> LaurentPoly:
        for x, c in self.terms_frozen:
            if x == w:
                return c
        return LaurentPoly.zero()

    @property
    def is_zero(self) -> bool:
        return not self.terms_frozen

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_compatible(other)
        terms = self.terms
        for w, c in other.terms_frozen:
            s = terms.get(w, LaurentPoly.zero()) + c
            if s:
                terms[w] = s
            elif w in terms:
                del terms[w]
        return HeckeElement.make(self.datum, self.basis, terms)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly | int) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return HeckeElement.make(
            self.datum, self.basis, {w: a * c for w, a in self.terms_frozen}
        )

    def _check_compatible(self, other: "HeckeElement"):
        if self.datum is not other.datum or self.basis != other.basis:
            raise InvalidInput("mixed data or bases in Hecke arithmetic")

    def __repr__(self):
        parts = [
            f"({c.format()})*{self.basis}{w!r}"
            for w, c in sorted(self.terms_frozen, key=lambda t: (t[0].length, t[0].word))
        ]
        return " + ".join(parts) if parts else "0"


def unit(datum: CoxeterDatum, basis: str = STANDARD) -> HeckeElement:
    return HeckeElement.make(datum, basis, {datum.identity: _ONE})


def standard_basis_element(datum: CoxeterDatum, w: GroupElement) -> HeckeElement:
    return HeckeElement.make(datum, STANDARD, {w: _ONE})


# ---------------------------------------------------------------------------
# Standard-basis multiplication and the bar involution
# ---------------------------------------------------------------------------


def _right_mult_by_gen(datum, terms: dict, s_index: int) -> dict:
    """terms * H_s in the standard basis."""
    s = datum.generator(s_index)
    out: dict[GroupElement, LaurentPoly] = {}

    def add(w, c):
        prev = out.get(w)
        tot = c if prev is None else prev + c
        if tot:
            out[w] = tot
        elif w in out:
            del out[w]

    for x, c in terms.items():
        xs = datum.multiply(x, s)
        if xs.length > x.length:
            add(xs, c)
        else:
            add(xs, c)
            add(x, c * LaurentPoly({-1: 1, 1: -1}))  # (v^-1 - v) H_x
    return out


def multiply_standard(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Product in the standard basis (right recursion on reduced words)."""
    if h1.basis != STANDARD or h2.basis != STANDARD:
        raise InvalidInput("multiply_standard needs both factors in the standard basis")
    h1._check_compatible(h2)
    datum = h1.datum
    acc: dict[GroupElement, LaurentPoly] = {}
    base = h1.terms
    for y, c2 in h2.terms_frozen:
        cur = base
        for s_index in y.word:
            cur = _right_mult_by_gen(datum, cur, s_index)
        for w, c in cur.items():
            s = acc.get(w, LaurentPoly.zero()) + c * c2
            if s:
                acc[w] = s
            elif w in acc:
                del acc[w]
    return HeckeElement.make(datum, STANDARD, acc)


def bar(h: HeckeElement) -> HeckeElement:
    """The bar involution, expanded explicitly in the standard basis."""
    if h.basis != STANDARD:
        raise InvalidInput("bar expansion works on the standard basis")
    datum = h.datum
    acc: dict[GroupElement, LaurentPoly] = {}
    for y, c in h.terms_frozen:
        cur = {datum.identity: c.bar()}
        for s_index in y.word:
            # bar(H_s) = H_s + (v - v^-1)
            nxt = _right_mult_by_gen(datum, cur, s_index)
            for w, a in cur.items():
                extra = a * _BAR_HS_TAIL
                s = nxt.get(w, LaurentPoly.zero()) + extra
                if s:
                    nxt[w] = s
                elif w in nxt:
                    del nxt[w]
            cur = nxt
        for w, a in cur.items():
            s = acc.get(w, LaurentPoly.zero()) + a
            if s:
                acc[w] = s
            elif w in acc:
                del acc[w]
    return HeckeElement.make(datum, STANDARD, acc)


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig table
# ---------------------------------------------------------------------------


class KLTable:
    """Cache of KL columns h_{., w} and mu-values for one datum.

    Columns are computed by the standard left recursion
    b_w = b_s b_{w'} - sum mu(z, w') b_z  for  w = s w', and inserted whole.
    """

    def __init__(self, datum: CoxeterDatum):
        self.datum = datum
        self._cols: dict[tuple[int, ...], dict[tuple[int, ...], LaurentPoly]] = {
            (): {(): _ONE}
        }
        self._mu: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def column(self, w: GroupElement) -> dict[tuple[int, ...], LaurentPoly]:
        col = self._cols.get(w.word)
        if col is not None:
            return col
        datum = self.datum
        s_index = w.word[0]  # smallest left descent, by ShortLex construction
        rest = GroupElement(datum, w.word[1:])
        prev = self.column(rest)
        col: dict[tuple[int, ...], LaurentPoly] = {}
        s = datum.generator(s_index)
        for xw, hx in prev.items():
            x = GroupElement(datum, xw)
            sx = datum.multiply(s, x)
            up = sx.length > x.length
            # b_s H_x = H_{sx} + v^{+-1} H_x
            c = col.get(sx.word, LaurentPoly.zero()) + hx
            col[sx.word] = c
            c = col.get(xw, LaurentPoly.zero()) + hx.shift(1 if up else -1)
            col[xw] = c
        for zw, m in self._mu_column(rest).items():
            if m == 0 or s_index not in datum.left_descents(GroupElement(datum, zw)):
                continue
            for xw, hx in self.column(GroupElement(datum, zw)).items():
                c = col.get(xw, LaurentPoly.zero()) - hx * m
                if c:
                    col[xw] = c
                elif xw in col:
                    del col[xw]
        col = {xw: c for xw, c in col.items() if c}
        if col.get(w.word) != _ONE:
            raise IntegrityError(f"KL recursion lost unitriangularity at {w!r}")
        for xw, c in col.items():
            if xw != w.word and (c.valuation() or 0) < 1:
                raise IntegrityError(f"KL coefficient h_{{{xw},{w.word}}} not in vZ[v]")
        self._cols[w.word] = col
        return col

    def _mu_column(self, w: GroupElement) -> dict[tuple[int, ...], int]:
        return {xw: c.coeff(1) for xw, c in self.column(w).items() if xw != w.word}

    def h(self, x: GroupElement, w: GroupElement) -> LaurentPoly:
        return self.column(w).get(x.word, LaurentPoly.zero())

    def mu(self, x: GroupElement, w: GroupElement) -> int:
        key = (x.word, w.word)
        if key not in self._mu:
            self._mu[key] = self.h(x, w).coeff(1)
        return self._mu[key]

    def known_columns(self):
        return dict(self._cols)

    def insert_column(self, w_word, col):
        """Insert a complete precomputed column (used by the cache loader)."""
        self._cols[tuple(w_word)] = {tuple(x): c for x, c in col.items()}


def kl_table(datum: CoxeterDatum) -> KLTable:
    table = getattr(datum, "_kl_table", None)
    if table is None:
        table = KLTable(datum)
        datum._kl_table = table
    return table


def kl_element(datum: CoxeterDatum, w: GroupElement) -> HeckeElement:
    """The KL basis element b_w expanded in the standard basis."""
    col = kl_table(datum).column(w)
    return HeckeElement.make(
        datum, STANDARD, {GroupElement(datum, xw): c for xw, c in col.items()}
    )


def kl_h_polynomial(datum: CoxeterDatum, x: GroupElement, w: GroupElement) -> LaurentPoly:
    return kl_table(datum).h(x, w)


def kl_polynomial(datum: CoxeterDatum, x: GroupElement, w: GroupElement) -> LaurentPoly:
    """Classical P_{x,w} as a polynomial in q (zero when x is not <= w)."""
    h = kl_table(datum).h(x, w)
    if h.is_zero:
        return LaurentPoly.zero()
    d = w.length - x.length
    coeffs = {}
    for e, c in h.items():
        k, rem = divmod(d - e, 2)
        if rem:
            raise IntegrityError("h-polynomial parity violation")
        coeffs[k] = c
    return LaurentPoly(coeffs)


def mu(datum: CoxeterDatum, x: GroupElement, w: GroupElement) -> int:
    return kl_table(datum).mu(x, w)


def decompose_kl(h: HeckeElement) -> HeckeElement:
    """Exact change of basis from the standard to the KL basis."""
    if h.basis == KL:
        return h
    datum = h.datum
    remaining = h.terms
    out: dict[GroupElement, LaurentPoly] = {}
    while remaining:
        w = max(remaining, key=lambda e: (e.length, e.word))
        c = remaining[w]
        out[w] = c
        for xw, hx in kl_table(datum).column(w).items():
            x = GroupElement(datum, xw)
            s = remaining.get(x, LaurentPoly.zero()) - c * hx
            if s:
                remaining[x] = s
            elif x in remaining:
                del remaining[x]
    return HeckeElement.make(datum, KL, out)


def kl_basis_element(datum: CoxeterDatum, w: GroupElement) -> HeckeElement:
    return HeckeElement.make(datum, KL, {w: _ONE})


def multiply_kl(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product of two KL-basis combinations, re-expressed in the KL basis."""
    if a.basis != KL or b.basis != KL:
        raise InvalidInput("multiply_kl needs KL-basis inputs")
    datum = a.datum
    sa = HeckeElement.make(datum, STANDARD, {})
    for w, c in a.terms_frozen:
        sa = sa + kl_element(datum, w).scale(c)
    sb = HeckeElement.make(datum, STANDARD, {})
    for w, c in b.terms_frozen:
        sb = sb + kl_element(datum, w).scale(c)
    return decompose_kl(multiply_standard(sa, sb))


def structure_constants(
    datum: CoxeterDatum, x: GroupElement, y: GroupElement
) -> dict[GroupElement, LaurentPoly]:
    """All h_{x,y,z} with b_x b_y = sum_z h_{x,y,z} b_z (zeros omitted)."""
    engine = hecke_engine(datum)
    ix, iy = datum.element_index(x), datum.element_index(y)
    row = engine.products_for_y(iy)[ix]
    out = {}
    for z_idx in np.nonzero(row.any(axis=1))[0]:
        out[engine.elements[z_idx]] = engine.vector_to_poly(row[z_idx])
    return out


# ---------------------------------------------------------------------------
# Fast structure-constant engine (finite data, numpy int64 coefficients)
# ---------------------------------------------------------------------------


class HeckeEngine:
    """All-pairs KL products b_x b_y in KL coordinates for a finite datum.

    Coefficients live in int64 arrays indexed (element, exponent+offset);
    a final overflow audit keeps the exactness promise.  Product columns for
    a fixed right factor y are materialized one y at a time.
    """

    def __init__(self, datum: CoxeterDatum, guards: Guards = DEFAULT):
        self.datum = datum
        self.elements = datum.enumerate_elements(guards)
        self.n = len(self.elements)
        self.index = {e.word: i for i, e in enumerate(self.elements)}
        self.maxlen = self.elements[-1].length
        self.width = 2 * self.maxlen + 1
        self.offset = self.maxlen
        table = kl_table(datum)

        self.inverse = np.array(
            [self.index[datum.inverse(e).word] for e in self.elements], dtype=np.int64
        )
        self.left_desc = [datum.left_descents(e) for e in self.elements]

        n_gen = datum.generator_count
        # left multiplication tables s * w at the group level
        self.smul = np.zeros((n_gen, self.n), dtype=np.int64)
        for s in range(n_gen):
            gen = datum.generator(s)
            for i, e in enumerate(self.elements):
                self.smul[s, i] = self.index[datum.multiply(gen, e).word]

        # mu terms of b_s b_w = b_{sw} + sum_{u<w, s in L(u)} mu(u, w) b_u (s not in L(w))
        self._bs_asc: list[tuple[np.ndarray, np.ndarray]] = []
        self._bs_desc: list[np.ndarray] = []
        self._bs_mu: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        for s in range(n_gen):
            asc_src, desc = [], []
            mu_u, mu_w, mu_m = [], [], []
            for i, e in enumerate(self.elements):
                if s in self.left_desc[i]:
                    desc.append(i)
                else:
                    asc_src.append(i)
                    # b_s b_w = b_{sw} + sum_{u < w, s in L(u)} mu(u, w) b_u
                    for uw, m in table._mu_column(e).items():
                        if m and s in datum.left_descents(GroupElement(datum, uw)):
                            mu_u.append(self.index[uw])
                            mu_w.append(i)
                            mu_m.append(m)
            self._bs_asc.append(
                (np.array(asc_src, dtype=np.int64), self.smul[s, asc_src])
            )
            self._bs_desc.append(np.array(desc, dtype=np.int64))
            self._bs_mu.append(
                (
                    np.array(mu_u, dtype=np.int64),
                    np.array(mu_w, dtype=np.int64),
                    np.array(mu_m, dtype=np.int64),
                )
            )

        # parent decomposition x = s * rest with word(rest) = word(x)[1:]
        self.parent = np.zeros((self.n, 2), dtype=np.int64)
        self._mu_corr: list[tuple[np.ndarray, np.ndarray]] = [
            (np.zeros(0, np.int64), np.zeros(0, np.int64))
        ] * self.n
        for i, e in enumerate(self.elements):
            if not e.word:
                continue
            s = e.word[0]
            rest = self.index[e.word[1:]]
            self.parent[i] = (s, rest)
            zs, ms = [], []
            for uw, m in table._mu_column(self.elements[rest]).items():
                if m and s in datum.left_descents(GroupElement(datum, uw)):
                    zs.append(self.index[uw])
                    ms.append(m)
            self._mu_corr[i] = (np.array(zs, np.int64), np.array(ms, np.int64))

        self._amax: np.ndarray | None = None
        self._left_occ: list[set[int]] | None = None
        self._right_occ: list[set[int]] | None = None

    # -- coefficient vector helpers -----------------------------------------

    def vector_to_poly(self, vec: np.ndarray) -> LaurentPoly:
        return LaurentPoly(
            {e - self.offset: int(c) for e, c in enumerate(vec.tolist()) if c}
        )

    def _bs_apply(self, s: int, V: np.ndarray) -> np.ndarray:
        """Left multiplication by b_s of a KL-coordinate matrix V[z, exp]."""
        out = np.zeros_like(V)
        asc_src, asc_dst = self._bs_asc[s]
        if len(asc_src):
            np.add.at(out, asc_dst, V[asc_src])
        mu_u, mu_w, mu_m = self._bs_mu[s]
        if len(mu_u):
            np.add.at(out, mu_u, mu_m[:, None] * V[mu_w])
        desc = self._bs_desc[s]
        if len(desc):
            out[desc, 1:] += V[desc, :-1]
            out[desc, :-1] += V[desc, 1:]
        return out

    def products_for_y(self, y: int) -> np.ndarray:
        """Array H with H[x, z, e] the v^(e-offset) coefficient of h_{x,y,z}."""
        n, width = self.n, self.width
        out = np.zeros((n, n, width), dtype=np.int64)
        out[0, y, self.offset] = 1  # b_e b_y = b_y
        for x in range(1, n):
            s, rest = self.parent[x]
            V = self._bs_apply(int(s), out[rest])
            zs, ms = self._mu_corr[x]
            for z, m in zip(zs.tolist(), ms.tolist()):
                V -= m * out[z]
            out[x] = V
        if np.abs(out).max(initial=0) > 2**60:
            raise IntegrityError("structure constants exceed the int64 safety bound")
        return out

    # -- whole-group scans ------------------------------------------------------

    def _scan(self):
        """One pass over all y: occurrence sets and per-z degree bound (a-values)."""
        n = self.n
        amax = np.zeros(n, dtype=np.int64)
        left_occ = [set() for _ in range(n)]   # z-sets of U_x supp(b_x b_y)
        right_occ = [set() for _ in range(n)]  # z-sets of U_y supp(b_x b_y)
        exps = np.arange(self.width, dtype=np.int64) - self.offset
        for y in range(n):
            H = self.products_for_y(y)
            if H.min() < 0:
                raise IntegrityError("negative KL structure constant")
            nz = H != 0
            any_xz = nz.any(axis=2)
            # valuation of h_{x,y,z}: least exponent with a nonzero coefficient
            masked = np.where(nz, exps[None, None, :], np.iinfo(np.int64).max)
            minexp = masked.min(axis=2)
            present = any_xz.any(axis=0)
            for z in np.nonzero(present)[0]:
                depth = -(minexp[:, z][any_xz[:, z]].min())
                if depth > amax[z]:
                    amax[z] = depth
            left_occ[y].update(np.nonzero(present)[0].tolist())
            occ_by_x = any_xz.any(axis=1)
            for x in np.nonzero(occ_by_x)[0]:
                right_occ[x].update(np.nonzero(any_xz[x])[0].tolist())
        self._amax = amax
        self._left_occ = left_occ
        self._right_occ = right_occ

    def a_values(self) -> np.ndarray:
        if self._amax is None:
            self._scan()
        return self._amax

    def left_occurrences(self) -> list[set[int]]:
        if self._left_occ is None:
            self._scan()
        return self._left_occ

    def right_occurrences(self) -> list[set[int]]:
        if self._right_occ is None:
            self._scan()
        return self._right_occ

    def gamma(self, xs: list[int], ys: list[int], zs: list[int], a: int) -> np.ndarray:
        """gamma[x, y, z] = coefficient of v^-a in h_{x,y,z}, on given index lists."""
        out = np.zeros((len(xs), len(ys), len(zs)), dtype=np.int64)
        col = self.offset - a
        zs_arr = np.array(zs, dtype=np.int64)
        xs_arr = np.array(xs, dtype=np.int64)
        for j, y in enumerate(ys):
            H = self.products_for_y(y)
            if col >= 0:
                out[:, j, :] = H[np.ix_(xs_arr, zs_arr)][:, :, col]
        return out


def hecke_engine(datum: CoxeterDatum, guards: Guards = DEFAULT) -> HeckeEngine:
    engine = getattr(datum, "_hecke_engine", None)
    if engine is None:
        engine = HeckeEngine(datum, guards)
        datum._hecke_engine = engine
    return engine


# ---------------------------------------------------------------------------
# Extended algebra H (x) Z[Omega]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtendedHeckeDatum:
    """A finite Coxeter part tensored with a length-zero group Omega.

    `action` maps each Omega element index to a DiagramAutomorphism; it must
    be a group homomorphism.
    """

    datum: CoxeterDatum
    omega: "FiniteGroup"  # noqa: F821  (grouptheory.FiniteGroup)
    action: tuple[DiagramAutomorphism, ...]

    def __post_init__(self):
        om = self.omega
        if len(self.action) != om.order:
            raise InvalidInput("action must assign an automorphism to every Omega element")
        for i in range(om.order):
            for j in range(om.order):
                left = self.action[i].compose(self.action[j])
                if left.perm != self.action[om.mult(i, j)].perm:
                    raise InvalidInput("Omega action is not a homomorphism")

    def apply(self, omega_index: int, x: GroupElement) -> GroupElement:
        return self.action[omega_index].apply(x)

    def basis_size(self) -> int:
        return (self.datum.order() or 0) * self.omega.order


@dataclass(frozen=True)
class ExtendedHeckeElement:
    """Combination of C_{(y, o)} = b_y (x) o (or H_y (x) o in the standard tag)."""

    extended: ExtendedHeckeDatum
    basis: str
    terms_frozen: frozenset

    @staticmethod
    def make(extended, basis, terms) -> "ExtendedHeckeElement":
        clean = {k: c for k, c in terms.items() if c}
        return ExtendedHeckeElement(extended, basis, frozenset(clean.items()))

    @property
    def terms(self):
        return dict(self.terms_frozen)

    def coeff(self, key) -> LaurentPoly:
        for k, c in self.terms_frozen:
            if k == key:
                return c
        return LaurentPoly.zero()

    def __add__(self, other):
        terms = self.terms
        for k, c in other.terms_frozen:
            s = terms.get(k, LaurentPoly.zero()) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return ExtendedHeckeElement.make(self.extended, self.basis, terms)


def extended_basis_element(
    ed: ExtendedHeckeDatum, y: GroupElement, omega_index: int, basis: str = KL
) -> ExtendedHeckeElement:
    return ExtendedHeckeElement.make(ed, basis, {(y, omega_index): _ONE})


def extended_unit(ed: ExtendedHeckeDatum, basis: str = KL) -> ExtendedHeckeElement:
    return extended_basis_element(ed, ed.datum.identity, 0, basis)


def _relabel_standard(ed: ExtendedHeckeDatum, omega_index: int, h: HeckeElement) -> HeckeElement:
    """Apply Y(omega) to a standard-basis element by relabeling reduced words."""
    auto = ed.action[omega_index]
    return HeckeElement.make(
        h.datum, STANDARD, {auto.apply(w): c for w, c in h.terms_frozen}
    )


def extended_multiply(
    ed: ExtendedHeckeDatum, a: ExtendedHeckeElement, b: ExtendedHeckeElement
) -> ExtendedHeckeElement:
    """(h1 (x) o1)(h2 (x) o2) = h1 Y(o1)h2 (x) o1 o2, extended bilinearly."""
    if a.extended is not ed or b.extended is not ed:
        raise InvalidInput("elements belong to a different extended datum")
    if a.basis != b.basis:
        raise InvalidInput("mixed bases in extended multiplication")
    datum, om = ed.datum, ed.omega
    out: dict[tuple[GroupElement, int], LaurentPoly] = {}
    for (y1, o1), c1 in a.terms_frozen:
        for (y2, o2), c2 in b.terms_frozen:
            oo = om.mult(o1, o2)
            y2p = ed.apply(o1, y2)
            if a.basis == KL:
                prod = multiply_kl(kl_basis_element(datum, y1), kl_basis_element(datum, y2p))
            else:
                prod = multiply_standard(
                    standard_basis_element(datum, y1), standard_basis_element(datum, y2p)
                )
            scale = c1 * c2
            for z, c in prod.terms_frozen:
                key = (z, oo)
                s = out.get(key, LaurentPoly.zero()) + c * scale
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return ExtendedHeckeElement.make(ed, a.basis, out)
