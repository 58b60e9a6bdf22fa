"""Deterministic construction of finite fields F_{p^m}.

Elements are encoded as integers sum(c_i * p^i) where (c_0, ..., c_{m-1})
are the coordinates in the power basis of the modulus root.  The modulus is
the monic irreducible polynomial of degree m with the smallest encoding, and
the generator is the smallest-encoded element of full multiplicative order,
so two builds of the same field are identical.

Multiplication runs through log/antilog tables built from the generator;
addition is a table lookup for small fields and digit arithmetic otherwise.
Vectorized (numpy) variants of all operations are provided for the hot
enumeration loops elsewhere in the package.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

MAX_DEGREE = 16
MAX_ORDER = 1 << 24
_ADD_TABLE_LIMIT = 4096


class FieldError(ValueError):
    """Invalid field construction or an operation on mismatched fields."""


# ---------------------------------------------------------------------------
# small polynomial helpers over F_p (lists, little endian)
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo monic b over F_p."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - db
        c = a[-1]
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _divides(small, big, p):
    return not _poly_mod(big, small, p)


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    m = len(poly) - 1
    for k in range(1, m // 2 + 1):
        for enc in range(p ** k):
            cand = _decode(enc, p, k) + [1]
            if _divides(cand, poly, p):
                return False
    return True


def _decode(n, p, m):
    out = []
    for _ in range(m):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _encode(coeffs, p):
    n = 0
    for c in reversed(coeffs):
        n = n * p + c
    return n


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------

class FieldSpec:
    """Immutable description of F_{p^m} plus arithmetic tables.

    Use :func:`make_field`; constructing directly bypasses the cache that
    guarantees a single shared instance per (p, m).
    """

    def __init__(self, p: int, m: int):
        if not isprime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree {m} out of range [1, {MAX_DEGREE}]")
        if p ** m > MAX_ORDER:
            raise FieldError(f"field order {p}^{m} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = self._canonical_modulus()
        self._order_factors = sorted(factorint(self.order - 1)) if self.order > 2 else []
        self.generator = self._canonical_generator()
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _canonical_modulus(self):
        if self.m == 1:
            return (0, 1)  # the polynomial x; elements are residues mod p
        for enc in range(self.p ** self.m):
            cand = _decode(enc, self.p, self.m) + [1]
            if _is_irreducible(cand, self.p):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _mul_slow(self, a, b):
        prod = _poly_mul(_decode(a, self.p, self.m), _decode(b, self.p, self.m), self.p)
        return _encode(_poly_mod(prod, list(self.modulus), self.p), self.p)

    def _pow_slow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _canonical_generator(self):
        n = self.order - 1
        if n == 1:
            return 1
        for cand in range(1, self.order):
            if self._pow_slow(cand, n) != 1:
                continue
            if all(self._pow_slow(cand, n // ell) != 1 for ell in self._order_factors):
                return cand
        raise AssertionError("no generator found")  # unreachable

    def _build_tables(self):
        q1 = self.order - 1
        exp = np.empty(2 * q1 + 1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for k in range(q1):
            exp[k] = x
            log[x] = k
            x = self._mul_slow(x, self.generator)
        exp[q1:] = exp[: q1 + 1]
        self._exp = exp
        self._log = log
        pw = self.p ** np.arange(self.m, dtype=np.int64)
        dig = np.empty((self.order, self.m), dtype=np.int64)
        idx = np.arange(self.order, dtype=np.int64)
        for i in range(self.m):
            dig[:, i] = (idx // pw[i]) % self.p
        self._dig = dig
        self._pw = pw
        self._neg = ((-dig) % self.p) @ pw
        if self.p > 2 and self.m > 1 and self.order <= _ADD_TABLE_LIMIT:
            self._add_tab = ((dig[:, None, :] + dig[None, :, :]) % self.p) @ pw
        else:
            self._add_tab = None

    # -- scalar arithmetic on encodings -------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_tab is not None:
            return int(self._add_tab[a, b])
        return int(((self._dig[a] + self._dig[b]) % self.p) @ self._pw)

    def neg(self, a):
        return int(self._neg[a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a):
        if a == 0:
            raise FieldError("inversion of zero")
        return int(self._exp[self.order - 1 - self._log[a]])

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("negative power of zero")
            return 0
        return int(self._exp[(int(self._log[a]) * e) % (self.order - 1)])

    def frob(self, a, k=1):
        if a == 0:
            return 0
        return self.pow(a, pow(self.p, k, self.order - 1))

    def element_order(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for ell in self._order_factors:
            while n % ell == 0 and self.pow(a, n // ell) == 1:
                n //= ell
        return n

    # -- vectorized arithmetic on int64 arrays of encodings ------------------

    def add_v(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_tab is not None:
            return self._add_tab[a, b]
        return ((self._dig[a] + self._dig[b]) % self.p) @ self._pw

    def neg_v(self, a):
        return self._neg[a]

    def mul_v(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out[nz] = self._exp[self._log[a[nz]] + self._log[b[nz]]]
        return out

    def pow_v(self, a, e):
        if e == 0:
            return np.ones_like(a)
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = self._exp[(self._log[a[nz]] * e) % (self.order - 1)]
        return out

    def inv_v(self, a):
        if np.any(a == 0):
            raise FieldError("inversion of zero")
        return self._exp[self.order - 1 - self._log[a]]

    # -- element construction -------------------------------------------------

    def elem(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            if x.spec is not self:
                raise FieldError("element from a different field")
            return x
        if isinstance(x, (list, tuple)):
            if len(x) > self.m:
                raise FieldError("too many coordinates")
            coeffs = [c % self.p for c in x] + [0] * (self.m - len(x))
            return FieldElem(self, _encode(coeffs, self.p))
        if isinstance(x, (int, np.integer)):
            if 0 <= x < self.order:
                return FieldElem(self, int(x))
            # integers outside the encoding range embed via the prime subfield
            return FieldElem(self, int(x) % self.p)
        raise FieldError(f"cannot build a field element from {x!r}")

    def zero(self):
        return FieldElem(self, 0)

    def one(self):
        return FieldElem(self, 1)

    def gen(self):
        return FieldElem(self, self.generator)

    def elements(self):
        return [FieldElem(self, v) for v in range(self.order)]

    def to_coeffs(self, a):
        return _decode(a, self.p, self.m)

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m})"


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldSpec:
    """The canonical FieldSpec for F_{p^m}; cached, hence idempotent."""
    return FieldSpec(p, m)


def field_of_order(q: int) -> FieldSpec:
    """The canonical field with exactly q elements."""
    fac = factorint(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    [(p, m)] = fac.items()
    return make_field(p, m)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElem:
    """An element of a FieldSpec, stored as its integer encoding."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec is not self.spec:
                raise FieldError("mixed-field operands")
            return other.val
        if isinstance(other, (int, np.integer)):
            return int(other) % self.spec.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(self.val, self.spec.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(v, self.spec.inv(self.val)))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.val))

    def __pow__(self, e):
        return FieldElem(self.spec, self.spec.pow(self.val, e))

    def inv(self):
        return FieldElem(self.spec, self.spec.inv(self.val))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec is other.spec and self.val == other.val
        if isinstance(other, (int, np.integer)):
            return self.val == int(other) % self.spec.p and (
                self.val < self.spec.p
            )
        return NotImplemented

    def __hash__(self):
        return hash((id(self.spec), self.val))

    def __bool__(self):
        return self.val != 0

    def coeffs(self):
        return self.spec.to_coeffs(self.val)

    def __repr__(self):
        return f"F{self.spec.order}{self.coeffs()}"


# ---------------------------------------------------------------------------
# subfield structure: Frobenius, norm, trace
# ---------------------------------------------------------------------------

def frobenius(x: FieldElem, k: int = 1) -> FieldElem:
    """x^{p^k}."""
    return FieldElem(x.spec, x.spec.frob(x.val, k))


def _subfield_order(spec: FieldSpec) -> int:
    if spec.m % 2 != 0:
        raise FieldError("ambient field is not a quadratic extension")
    return spec.p ** (spec.m // 2)


def norm_to_subfield(x: FieldElem) -> FieldElem:
    """Norm F_{q^2} -> F_q, x |-> x^{q+1}."""
    q = _subfield_order(x.spec)
    return x ** (q + 1)


def trace_to_subfield(x: FieldElem) -> FieldElem:
    """Trace F_{q^2} -> F_q, x |-> x^q + x."""
    q = _subfield_order(x.spec)
    return x ** q + x


def norm_preimages(s: FieldElem) -> list[FieldElem]:
    """The q+1 elements y of F_{q^2} with y^{q+1} = s, for nonzero s in F_q."""
    spec = s.spec
    q = _subfield_order(spec)
    if s.val == 0:
        raise FieldError("norm preimages of zero are not defined")
    if spec.pow(s.val, q) != s.val:
        raise FieldError("element is not in the index-2 subfield")
    out = [v for v in range(1, spec.order) if spec.pow(v, q + 1) == s.val]
    assert len(out) == q + 1
    return [FieldElem(spec, v) for v in out]


def subfield_elements(spec: FieldSpec, q: int) -> list[FieldElem]:
    """The q elements fixed by x -> x^q, in encoding order."""
    fac = factorint(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    [(p, e)] = fac.items()
    if p != spec.p or spec.m % e != 0:
        raise FieldError(f"F_{q} is not a subfield of F_{spec.order}")
    out = [v for v in range(spec.order) if spec.pow(v, q) == v]
    assert len(out) == q
    return [FieldElem(spec, v) for v in out]


def primitive_elements(spec: FieldSpec):
    """All generators of the multiplicative group, in encoding order."""
    n = spec.order - 1
    for v in range(1, spec.order):
        if spec.element_order(v) == n:
            yield FieldElem(spec, v)
