"""Splitting counts for the family A t^d + t + 1 over F_q.

A value A in F_q^* for which A t^d + t + 1 has d distinct roots in F_q
yields, for any alpha of norm A, a monomial curve X Z^{d-1} = alpha Y^d
meeting the Hermitian curve in d(q+1) rational points.  This module
provides the exact counts N_d(q) with witnesses, the closed forms for
d = 3 and d = 4, the subfield existence criteria for d a power of the
characteristic (or one more), the rho-parametrization of the roots, the
genus of the splitting field, the resulting effective thresholds, and a
vectorized sweep over prime powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, isqrt

import numpy as np
import sympy

from .field import FieldElem, FieldSpec, field_of_order, make_field
from .unipoly import UniPoly, count_distinct_roots


@dataclass
class SplitCountReport:
    q: int
    d: int
    count: int
    witnesses: list  # encodings of the splitting A, ascending
    closed_form: int | None = None
    agree: bool | None = None

    def to_dict(self):
        return {
            "q": self.q,
            "d": self.d,
            "count": self.count,
            "witnesses": self.witnesses,
            "closed_form": self.closed_form,
            "agree": self.agree,
        }


def _pq(q: int):
    fac = sympy.factorint(q)
    if len(fac) != 1 or q < 2:
        raise ValueError(f"{q} is not a prime power")
    ((p, m),) = fac.items()
    return p, m


def splits_for_A(spec: FieldSpec, d: int, a: int) -> bool:
    """True when A t^d + t + 1 has d distinct roots in the field."""
    if d < 2:
        raise ValueError("need d >= 2")
    a = spec.elem(a).val
    if a == 0:
        raise ValueError("A must be nonzero")
    f = UniPoly(spec, [1, 1] + [0] * (d - 2) + [a])
    return count_distinct_roots(f, spec.order) == d


def batch_split_mask(spec: FieldSpec, d: int) -> np.ndarray:
    """Boolean mask over A = 1..q-1 marking where A t^d + t + 1 splits.

    f_A is monic-equivalent to t^d + u t + u with u = 1/A, so
    t^d = -u (t+1) modulo f_A.  The mask is t^q == t (mod f_A), computed
    for every A at once with square-and-multiply on stacked coefficient
    rows; divisibility of t^q - t makes the d roots automatically
    distinct.
    """
    q = spec.order
    avals = np.arange(1, q, dtype=np.int64)
    neg_u = spec.neg_v(spec.inv_v(avals))

    def reduce_top(prod):
        # prod holds rows t^0 .. t^{2d-2}; fold the top rows down
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c.any():
                shift = spec.mul_v(neg_u, c)
                prod[k - d] = spec.add_v(prod[k - d], shift)
                prod[k - d + 1] = spec.add_v(prod[k - d + 1], shift)
                prod[k] = 0
        return prod[:d]

    def mul(g, h):
        prod = np.zeros((2 * d - 1, q - 1), dtype=np.int64)
        for i in range(d):
            if not g[i].any():
                continue
            for j in range(d):
                if not h[j].any():
                    continue
                prod[i + j] = spec.add_v(prod[i + j], spec.mul_v(g[i], h[j]))
        return reduce_top(prod)

    t = np.zeros((d, q - 1), dtype=np.int64)
    t[1] = 1
    r = None
    sq = t
    e = q
    while e:
        if e & 1:
            r = sq.copy() if r is None else mul(r, sq)
        e >>= 1
        if e:
            sq = mul(sq, sq)
    target = np.zeros_like(r)
    target[1] = 1
    return (r == target).all(axis=0)


def count_splitting_A(q: int, d: int) -> SplitCountReport:
    """N_d(q) with the witnesses A in F_q^* for which A t^d + t + 1 splits."""
    if d < 2:
        raise ValueError("need d >= 2")
    spec = make_field(*_pq(q))
    mask = batch_split_mask(spec, d)
    witnesses = [int(a) + 1 for a in np.nonzero(mask)[0]]
    closed = None
    if d == 3:
        closed = n3_closed_form(q)
    elif d == 4:
        closed = n4_closed_form(q)
    agree = None if closed is None else (len(witnesses) == closed)
    return SplitCountReport(q, d, len(witnesses), witnesses, closed, agree)


# ---------------------------------------------------------------------------
# closed forms for d = 3 and d = 4
# ---------------------------------------------------------------------------

def n3_closed_form(q: int) -> int:
    """Number of A in F_q^* with A t^3 + t + 1 split: floor((q-2)/6),
    computed through the underlying case split on q mod 6."""
    _pq(q)
    if q % 3 == 0:
        n = (q - 3) // 6
    else:
        r = q % 6
        n = {1: (q - 7) // 6, 2: (q - 2) // 6, 4: (q - 4) // 6, 5: (q - 5) // 6}[r]
    assert n == (q - 2) // 6
    return n


def n4_closed_form(q: int) -> int:
    """Number of A in F_q^* with A t^4 + t + 1 split, piecewise by q."""
    p, e = _pq(q)
    if p == 2:
        return 0 if e % 2 else (q - 4) // 12
    if q % 24 == 23:
        return (q + 1) // 24
    return (q - 2) // 24


# ---------------------------------------------------------------------------
# existence criteria for d = p^e and d = p^e + 1
# ---------------------------------------------------------------------------

def exists_split_pe(q: int, d: int) -> bool:
    """For d = p^e a power of char(F_q): some splitting A exists iff
    F_{p^e} is a proper subfield of F_q."""
    p, m = _pq(q)
    e = _exact_log(d, p)
    if e is None:
        raise ValueError(f"d={d} is not a power of the characteristic {p}")
    return m % e == 0 and m // e > 1


def exists_split_pe_plus_one(q: int, d: int) -> bool:
    """For d = p^e + 1: some splitting A exists iff [F_q : F_{p^e}] > 2."""
    p, m = _pq(q)
    e = _exact_log(d - 1, p)
    if e is None:
        raise ValueError(f"d-1={d - 1} is not a power of the characteristic {p}")
    return m % e == 0 and m // e > 2


def _exact_log(n: int, p: int):
    e = 0
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    return e if n == 1 and e > 0 else None


# ---------------------------------------------------------------------------
# the rho-parametrization of the roots of A t^d + t + 1
# ---------------------------------------------------------------------------

def rho_parametrization(q: int, d: int, rho):
    """(A, T1, T2) in F_{q^2} from the root ratio rho = T2/T1.

    T1 = -(rho^d - 1)/(rho^d - rho), T2 = rho T1, A = -(T1+1)/T1^d, and
    A T_i^d + T_i + 1 = 0 for both i.  Returns None for degenerate rho
    (rho^d = rho, rho^{d-1} = 1, or rho^d = 1, which would force T1 = 0).
    """
    spec = field_of_order(q * q)
    r = spec.elem(rho).val
    rd = spec.pow(r, d)
    den = spec.sub(rd, r)
    if den == 0 or rd == 1 or spec.pow(r, d - 1) == 1:
        return None
    t1 = spec.neg(spec.mul(spec.sub(rd, 1), spec.inv(den)))
    t2 = spec.mul(r, t1)
    a = spec.neg(spec.mul(spec.add(t1, 1), spec.inv(spec.pow(t1, d))))
    for t in (t1, t2):
        lhs = spec.add(spec.add(spec.mul(a, spec.pow(t, d)), t), 1)
        assert lhs == 0, "parametrization identity failed"
    return FieldElem(spec, a), FieldElem(spec, t1), FieldElem(spec, t2)


def pe_transform_roots(q: int, d: int, rho):
    """For d = p^e, the full root set {T1 + a/B : a in F_{p^e}} of
    A t^d + t + 1, via B = -(rho^d - rho)/(rho - 1)^{d+1} with
    A = -B^{d-1}.  Returns None on degenerate rho."""
    spec = field_of_order(q * q)
    parts = rho_parametrization(q, d, rho)
    if parts is None:
        return None
    a_elem, t1, _ = parts
    r = spec.elem(rho).val
    num = spec.sub(spec.pow(r, d), r)
    den = spec.pow(spec.sub(r, 1), d + 1)
    b = spec.neg(spec.mul(num, spec.inv(den)))
    assert spec.neg(spec.pow(b, d - 1)) == a_elem.val
    binv = spec.inv(b)
    sub = [x for x in range(spec.order) if spec.pow(x, d) == x]  # F_{p^e}
    roots = sorted(spec.add(t1.val, spec.mul(s, binv)) for s in sub)
    return FieldElem(spec, b), [FieldElem(spec, v) for v in roots]


# ---------------------------------------------------------------------------
# genus and effective thresholds
# ---------------------------------------------------------------------------

def genus_Fd(d: int) -> int:
    """Genus of the splitting field of A t^d + t + 1 over F_q(A) when
    gcd(q, d(d-1)) = 1: 1 + (d^2 - 5d + 2)(d-2)!/4."""
    if d < 3:
        raise ValueError("need d >= 3")
    g = 1 + Fraction((d * d - 5 * d + 2) * factorial(d - 2), 4)
    if g.denominator != 1:
        raise ValueError(f"genus formula is not integral for d={d}")
    return int(g)


def ramification_allowance(d: int) -> int:
    """Rational places that ramification can consume:
    (1/d + 1/(d-1) + 1/2) d!, an integer."""
    return factorial(d - 1) + d * factorial(d - 2) + factorial(d) // 2


def serre_split_threshold(d: int) -> int:
    """Largest q failing q + 1 - floor(2 sqrt(q)) g_d - C_d > 0.

    Every prime power beyond it (with gcd(q, d(d-1)) = 1) has a
    splitting A; the scan bound 8 (C_d + g_d + 2)^2 is past the point
    where the linear term dominates the sqrt term for good.
    """
    g = genus_Fd(d)
    c = ramification_allowance(d)
    limit = 8 * (c + g + 2) ** 2
    worst = 0
    for q in range(2, limit):
        if q + 1 - isqrt(4 * q) * g - c <= 0:
            worst = q
    return worst


# ---------------------------------------------------------------------------
# sweeping over prime powers
# ---------------------------------------------------------------------------

def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers in [lo, hi]."""
    out = []
    for p in sympy.primerange(2, hi + 1):
        v = p
        while v <= hi:
            if v >= lo:
                out.append(v)
            v *= p
    return sorted(out)


def survey_split(d: int, q_max: int, gcd_filter: int | None = None):
    """[(q, N_d(q))] over prime powers q <= q_max.

    With gcd_filter = n, only q coprime to n are swept (the regime of
    the genus/threshold formulas uses n = d(d-1)).
    """
    if q_max > 4096:
        raise ValueError("survey capped at q_max <= 4096")
    rows = []
    for q in prime_powers(2, q_max):
        if gcd_filter is not None and gcd(q, gcd_filter) != 1:
            continue
        rows.append((q, count_splitting_A(q, d).count))
    return rows
