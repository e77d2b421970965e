"""Exact cyclotomic integers Z[zeta_n].

Values are integer coordinate vectors in the power basis of Q(zeta_n),
reduced modulo the n-th cyclotomic polynomial, so equality and conjugation
are exact.  A float rendering is available for numeric consumers.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the monic n-th cyclotomic polynomial."""
    # divide x^n - 1 by all proper Phi_d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _phi_reduction(n: int) -> tuple[tuple[int, ...], int]:
    phi = cyclotomic_poly(n)
    return phi, len(phi) - 1


def _reduce_mod_phi(vec: list[int], n: int) -> tuple[int, ...]:
    phi, deg = _phi_reduction(n)
    vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            for j in range(len(phi)):
                vec[i - deg + j] -= c * phi[j]
    out = vec[:deg]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Cyc:
    """An element of Z[zeta_n] in reduced power-basis coordinates."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = tuple(coeffs)

    @staticmethod
    def zero(n: int = 1) -> "Cyc":
        return Cyc(n, ())

    @staticmethod
    def integer(c: int, n: int = 1) -> "Cyc":
        return Cyc(n, _reduce_mod_phi([c], n))

    @staticmethod
    def root(n: int, k: int = 1) -> "Cyc":
        """zeta_n^k."""
        k %= n
        return Cyc(n, _reduce_mod_phi([0] * k + [1], n))

    def promote(self, m: int) -> "Cyc":
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only promote to a multiple order")
        scale = m // self.n
        vec = [0] * (len(self.coeffs) * scale)
        for e, c in enumerate(self.coeffs):
            if c:
                vec[e * scale] = c
        return Cyc(m, _reduce_mod_phi(vec, m))

    def _pair(self, other: "Cyc"):
        m = self.n * other.n // gcd(self.n, other.n)
        return self.promote(m), other.promote(m), m

    def __add__(self, other):
        if isinstance(other, int):
            other = Cyc.integer(other)
        a, b, m = self._pair(other)
        vec = list(a.coeffs) + [0] * max(0, len(b.coeffs) - len(a.coeffs))
        for i, c in enumerate(b.coeffs):
            vec[i] += c
        return Cyc(m, _reduce_mod_phi(vec, m))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Cyc.integer(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyc(self.n, tuple(c * other for c in self.coeffs))
        a, b, m = self._pair(other)
        if not a.coeffs or not b.coeffs:
            return Cyc.zero(m)
        vec = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j, cb in enumerate(b.coeffs):
                    vec[i + j] += ca * cb
        return Cyc(m, _reduce_mod_phi(vec, m))

    __rmul__ = __mul__

    def galois(self, t: int) -> "Cyc":
        """Apply zeta -> zeta^t (requires gcd(t, n) = 1)."""
        if gcd(t % self.n, self.n) != 1:
            raise ValueError("galois exponent must be invertible mod n")
        vec = [0] * self.n
        for e, c in enumerate(self.coeffs):
            vec[(e * t) % self.n] += c
        return Cyc(self.n, _reduce_mod_phi(vec, self.n))

    def conj(self) -> "Cyc":
        """Complex conjugation zeta -> zeta^-1."""
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational_integer(self) -> bool:
        return len(self.coeffs) <= 1

    def as_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == (Cyc.integer(other, self.n)).coeffs
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        out = 0j
        for e, c in enumerate(self.coeffs):
            out += c * z**e
        return out

    def __repr__(self):
        if self.is_rational_integer():
            return str(self.as_int())
        terms = [f"{c}*z{self.n}^{e}" for e, c in enumerate(self.coeffs) if c]
        return "(" + " + ".join(terms) + ")"
