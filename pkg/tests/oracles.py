"""Independent test oracles.

* A brute-force Kazhdan-Lusztig solver that finds each column h_{., w}
  directly from bar-invariance and triangularity (its own standard-basis
  arithmetic, no mu recursion), used to certify every [DERIVED] KL value.
* The Robinson-Schensted correspondence, whose fibers are the cells of
  symmetric groups.
"""

from __future__ import annotations

from cellkit.laurent import LaurentPoly

ONE = LaurentPoly.one()
V = LaurentPoly.v(1)
BAR_TAIL = LaurentPoly({1: 1, -1: -1})  # v - v^-1


def _right_mult_gen(datum, terms: dict, s_index: int) -> dict:
    """terms * H_s, written independently of cellkit.hecke."""
    s = datum.generator(s_index)
    out: dict = {}
    for xw, c in terms.items():
        x = datum.normalize(xw)
        xs = datum.multiply(x, s)
        if xs.length > x.length:
            out[xs.word] = out.get(xs.word, LaurentPoly.zero()) + c
        else:
            out[xs.word] = out.get(xs.word, LaurentPoly.zero()) + c
            out[x.word] = out.get(x.word, LaurentPoly.zero()) + c * LaurentPoly(
                {-1: 1, 1: -1}
            )
    return {k: v for k, v in out.items() if v}


def bar_of_standard(datum, y) -> dict:
    """bar(H_y) = (H_{s1} + (v - v^-1)) ... (H_{sk} + (v - v^-1))."""
    cur = {(): ONE}
    for s_index in y.word:
        shifted = _right_mult_gen(datum, cur, s_index)
        for w, c in cur.items():
            extra = c * BAR_TAIL
            shifted[w] = shifted.get(w, LaurentPoly.zero()) + extra
        cur = {k: v for k, v in shifted.items() if v}
    return cur


def kl_column_oracle(datum, w) -> dict:
    """h_{x,w} for all x <= w, solved from the defining triangular system:
    h_x - bar(h_x) = sum_{y > x} Rbar_{x,y} bar(h_y), h_x in vZ[v], h_w = 1."""
    interval = datum.bruhat_interval(w)
    bar_rows = {y.word: bar_of_standard(datum, y) for y in interval}
    h = {w.word: ONE}
    for x in sorted(interval, key=lambda e: -e.length):
        if x.word == w.word:
            continue
        q = LaurentPoly.zero()
        for y in interval:
            if y.length <= x.length or y.word not in h:
                continue
            r = bar_rows[y.word].get(x.word)
            if r is not None:
                q = q + r * h[y.word].bar()
        # q must be bar-antisymmetric; h_x is its positive part
        if q + q.bar() != LaurentPoly.zero():
            raise AssertionError("oracle: inhomogeneous term is not antisymmetric")
        hx = LaurentPoly({e: c for e, c in q.items() if e > 0})
        if hx - hx.bar() != q:
            raise AssertionError("oracle: positive-part split failed")
        if hx:
            h[x.word] = hx
    return h


# ---------------------------------------------------------------------------
# Robinson-Schensted
# ---------------------------------------------------------------------------


def rsk(perm: tuple[int, ...]) -> tuple[tuple, tuple]:
    """Row insertion RSK; returns (P, Q) as tuples of row tuples."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, value in enumerate(perm):
        row = 0
        x = value
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            r = P[row]
            pos = None
            for i, y in enumerate(r):
                if y > x:
                    pos = i
                    break
            if pos is None:
                r.append(x)
                Q[row].append(step)
                break
            r[pos], x = x, r[pos]
            row += 1
    return tuple(tuple(r) for r in P), tuple(tuple(r) for r in Q)


def shape(tab: tuple) -> tuple[int, ...]:
    return tuple(len(r) for r in tab)


def element_to_permutation(datum, w) -> tuple[int, ...]:
    """One-line permutation of a type-A element, s_i = (i, i+1) on positions.

    The composition convention matches datum.multiply: perm(x * y) =
    perm(x) o perm(y) with (f o g)(p) = f(g(p)).
    """
    n = datum.generator_count + 1
    perm = list(range(n))
    for s in reversed(w.word):
        t = list(range(n))
        t[s], t[s + 1] = t[s + 1], t[s]
        perm = [t[perm[p]] for p in range(n)]
    return tuple(perm)
