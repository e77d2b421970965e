"""Exact Laurent polynomials in one variable over Z.

This is the coefficient ring of every Hecke computation.  Coefficients are
Python bignums, so nothing ever overflows silently; the zero polynomial is
the empty coefficient map.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial ``sum_e c_e v^e`` with integer c_e."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            if a:
                e = int(e)
                a = c.get(e, 0) + int(a)
                if a:
                    c[e] = a
                else:
                    del c[e]
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def v(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def const(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    # -- queries ------------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return min(self._c) if self._c else None

    def is_integer(self) -> bool:
        return not self._c or set(self._c) == {0}

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                del c[e]
        return _wrap(c)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return _wrap({e: -a for e, a in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return _wrap({e: a * other for e, a in self._c.items()})
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        return _wrap(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0 or not self._c:
            return self
        return _wrap({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return _wrap({-e: a for e, a in self._c.items()})

    def subs_one(self) -> int:
        """Evaluate at v = 1."""
        return sum(self._c.values())

    def subs_int(self, x: int) -> int:
        """Evaluate at an integer x (requires valuation >= 0 or |x| = 1)."""
        val = self.valuation()
        if val is not None and val < 0 and x not in (1, -1):
            raise ValueError("negative exponents need |x| = 1")
        return sum(a * x**e if e >= 0 else a * x ** (-e) for e, a in self._c.items())

    # -- comparisons / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({} if other == 0 else {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- formatting ------------------------------------------------------------

    def format(self, var: str = "v") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            a = self._c[e]
            if e == 0:
                term = str(a)
            else:
                p = var if e == 1 else f"{var}^{e}"
                if a == 1:
                    term = p
                elif a == -1:
                    term = f"-{p}"
                else:
                    term = f"{a}{p}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f"+{term}" if not term.startswith("-") else term
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"


def _wrap(c: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._c = c
    return p


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})

#: v + v^-1, the coefficient in b_s * b_s = (v + v^-1) b_s.
V_PLUS_VINV = LaurentPoly({1: 1, -1: 1})
