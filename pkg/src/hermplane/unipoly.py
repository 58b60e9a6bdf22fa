"""Univariate polynomial algebra over a finite field.

Coefficients are stored little endian as integer encodings of field
elements, trimmed so the leading coefficient is nonzero (the zero
polynomial is the empty tuple).  The splitting oracle works through
gcd(f, t^q - t), with t^q computed by repeated squaring mod f.
"""

from __future__ import annotations

from .field import FieldElem, FieldError, FieldSpec, subfield_elements


class UniPoly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.spec is not spec:
                    raise FieldError("coefficient from a different field")
                vals.append(c.val)
            else:
                vals.append(int(c) % spec.order if 0 <= int(c) < spec.order else int(c) % spec.p)
        while vals and vals[-1] == 0:
            vals.pop()
        self.spec = spec
        self.coeffs = tuple(vals)

    # -- basics --------------------------------------------------------------

    @property
    def degree(self):
        """Degree, with deg 0 = -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.spec is other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.spec), self.coeffs))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def _check(self, other):
        if not isinstance(other, UniPoly) or other.spec is not self.spec:
            raise FieldError("mixed-field polynomials")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        K = self.spec
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = K.add(out[i], c)
        return UniPoly(K, out)

    def __neg__(self):
        K = self.spec
        return UniPoly(K, [K.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        K = self.spec
        if self.is_zero() or other.is_zero():
            return UniPoly(K, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = K.add(out[i + j], K.mul(a, b))
        return UniPoly(K, out)

    def scale(self, c):
        K = self.spec
        c = K.elem(c).val if not isinstance(c, int) else c
        return UniPoly(K, [K.mul(c, a) for a in self.coeffs])

    def divrem(self, other):
        """(quotient, remainder) with deg r < deg divisor."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        K = self.spec
        r = list(self.coeffs)
        d = other.degree
        lead_inv = K.inv(other.coeffs[-1])
        q = [0] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c == 0:
                continue
            factor = K.mul(c, lead_inv)
            q[k - d] = factor
            for i in range(d + 1):
                r[k - d + i] = K.sub(r[k - d + i], K.mul(factor, other.coeffs[i]))
        return UniPoly(K, q), UniPoly(K, r)

    def __mod__(self, other):
        return self.divrem(other)[1]

    def derivative(self):
        """Formal derivative; terms with exponent divisible by char vanish."""
        K = self.spec
        out = []
        for k in range(1, len(self.coeffs)):
            out.append(K.mul(k % K.p, self.coeffs[k]))
        return UniPoly(K, out)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.coeffs[-1]))

    def evaluate(self, x) -> FieldElem:
        K = self.spec
        xv = K.elem(x).val
        acc = 0
        for c in reversed(self.coeffs):
            acc = K.add(K.mul(acc, xv), c)
        return FieldElem(K, acc)

    # -- convenience constructors --------------------------------------------

    @staticmethod
    def t(spec: FieldSpec) -> "UniPoly":
        return UniPoly(spec, [0, 1])

    @staticmethod
    def constant(spec: FieldSpec, c) -> "UniPoly":
        return UniPoly(spec, [spec.elem(c).val])


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor via Euclid."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def frobenius_power_mod(f: UniPoly, Q: int) -> UniPoly:
    """t^Q mod f by repeated squaring; f must be non-constant."""
    if f.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    t = UniPoly.t(f.spec) % f
    r = UniPoly.constant(f.spec, 1)
    base = t
    e = Q
    while e:
        if e & 1:
            r = (r * base) % f
        base = (base * base) % f
        e >>= 1
    return r


def count_distinct_roots(f: UniPoly, q: int) -> int:
    """deg gcd(f, t^q - t): the number of distinct roots of f in F_q."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    tq = frobenius_power_mod(f, q)
    diff = tq - (UniPoly.t(f.spec) % f)
    if diff.is_zero():
        return f.degree
    return gcd(f, diff).degree


def splits_over(f: UniPoly, q: int) -> bool:
    """True iff f has deg f distinct roots in F_q (hence is squarefree)."""
    if f.degree < 1:
        raise ValueError("constant polynomial")
    return count_distinct_roots(f, q) == f.degree


def roots_in_field(f: UniPoly, q: int) -> list[FieldElem]:
    """All distinct roots of f in F_q, by evaluation scan, encoding order."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    for x in subfield_elements(f.spec, q):
        if not f.evaluate(x):
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# text form: "c_k*t^k + ... + c_0" with field-element serialization
# ---------------------------------------------------------------------------

def poly_to_text(f: UniPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        coeff = str(f.spec.to_coeffs(c)).replace(" ", "")
        parts.append(coeff if k == 0 else f"{coeff}*t^{k}")
    return " + ".join(parts)


def poly_from_text(spec: FieldSpec, text: str) -> UniPoly:
    from .serialize import parse_element

    coeffs: dict[int, int] = {}
    for part in text.split("+"):
        part = part.strip()
        if not part or part == "0":
            continue
        if "*t^" in part:
            coeff_s, _, exp_s = part.partition("*t^")
            k = int(exp_s)
        elif part == "t":
            coeff_s, k = "[1]", 1
        else:
            coeff_s, k = part, 0
        v = parse_element(spec, coeff_s).val
        coeffs[k] = spec.add(coeffs.get(k, 0), v)
    out = [0] * (max(coeffs, default=0) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return UniPoly(spec, out)
