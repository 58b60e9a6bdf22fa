"""Projective plane geometry over F_{q^2}.

Homogeneous ternary forms, Hermitian models, point enumeration,
intersection counting, singularity tests and a bounded factor search used
as an absolute-irreducibility certifier.

Point counting works by full enumeration of P^2(F_{q^2}); the chart
(x, y, 1) is evaluated on a Q x Q grid with numpy so that even the
65793-point plane over F_256 stays fast.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import isqrt

import numpy as np

from .field import FieldElem, FieldError, FieldSpec

DEFAULT_FACTOR_BUDGET = 10**7

_PREFILTER_THRESHOLD = 50_000


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples (i, j, k) of degree d, X-major (descending lex)."""
    out = []
    for i in range(d, -1, -1):
        for j in range(d - i, -1, -1):
            out.append((i, j, d - i - j))
    return out


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------

class TernaryForm:
    """A homogeneous form in X, Y, Z with coefficients in F_{q^2}.

    Coefficients are stored as raw encodings; forms compare equal
    projectively (up to a scalar).  Use ``same_terms`` for exact identity.
    """

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field_spec: FieldSpec, degree: int, terms):
        clean: dict[tuple[int, int, int], int] = {}
        for (i, j, k), c in terms.items():
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise ValueError(f"exponents {(i, j, k)} do not sum to degree {degree}")
            v = field_spec.elem(c).val if not isinstance(c, int) else c
            if not 0 <= v < field_spec.order:
                v = v % field_spec.p
            if v:
                clean[(i, j, k)] = v
        self.field = field_spec
        self.degree = degree
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def coeff(self, ijk) -> FieldElem:
        return FieldElem(self.field, self.terms.get(ijk, 0))

    def scale(self, c) -> "TernaryForm":
        K = self.field
        cv = K.elem(c).val
        return TernaryForm(K, self.degree, {m: K.mul(cv, v) for m, v in self.terms.items()})

    def canonical(self) -> "TernaryForm":
        """Scalar-normalized: the least monomial present has coefficient 1."""
        if not self.terms:
            return self
        least = min(self.terms)
        return self.scale(self.field.inv(self.terms[least]))

    def same_terms(self, other: "TernaryForm") -> bool:
        return self.field is other.field and self.terms == other.terms

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if self.field is not other.field or self.degree != other.degree:
            return False
        return self.canonical().terms == other.canonical().terms

    def __hash__(self):
        return hash((id(self.field), self.degree, tuple(sorted(self.canonical().terms.items()))))

    def __add__(self, other):
        if self.field is not other.field or self.degree != other.degree:
            raise FieldError("cannot add forms of different fields or degrees")
        K = self.field
        out = dict(self.terms)
        for m, v in other.terms.items():
            s = K.add(out.get(m, 0), v)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TernaryForm(K, self.degree, out)

    def __neg__(self):
        K = self.field
        return TernaryForm(K, self.degree, {m: K.neg(v) for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.field is not other.field:
            raise FieldError("mixed-field forms")
        K = self.field
        out: dict[tuple[int, int, int], int] = {}
        for (i1, j1, k1), a in self.terms.items():
            for (i2, j2, k2), b in other.terms.items():
                m = (i1 + i2, j1 + j2, k1 + k2)
                s = K.add(out.get(m, 0), K.mul(a, b))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return TernaryForm(K, self.degree + other.degree, out)

    def __pow__(self, e: int):
        result = TernaryForm(self.field, 0, {(0, 0, 0): 1})
        for _ in range(e):
            result = result * self
        return result

    def __repr__(self):
        K = self.field
        parts = [
            f"{K.to_coeffs(v)}*X^{i}Y^{j}Z^{k}" for (i, j, k), v in sorted(self.terms.items(), reverse=True)
        ]
        return " + ".join(parts) if parts else "0"


def form_from_elems(field_spec, degree, terms):
    """Build a form from a {(i,j,k): FieldElem-or-int} mapping."""
    return TernaryForm(field_spec, degree, terms)


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

class ProjPoint:
    """A point of P^2(F_{q^2}), normalized so the leftmost nonzero coordinate is 1."""

    __slots__ = ("spec", "coords")

    def __init__(self, x: FieldElem, y: FieldElem, z: FieldElem):
        spec = x.spec
        if y.spec is not spec or z.spec is not spec:
            raise FieldError("mixed-field coordinates")
        vals = (x.val, y.val, z.val)
        if vals == (0, 0, 0):
            raise ValueError("(0:0:0) is not a projective point")
        first = next(v for v in vals if v)
        inv = spec.inv(first)
        self.spec = spec
        self.coords = tuple(FieldElem(spec, spec.mul(inv, v)) for v in vals)

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.spec is other.spec
            and tuple(c.val for c in self.coords) == tuple(c.val for c in other.coords)
        )

    def __hash__(self):
        return hash((id(self.spec), tuple(c.val for c in self.coords)))

    def key(self):
        return tuple(c.val for c in self.coords)

    def __repr__(self):
        x, y, z = self.coords
        return f"[{x.coeffs()}:{y.coeffs()}:{z.coeffs()}]"


def enumerate_proj_points(spec: FieldSpec):
    """All Q^2+Q+1 points: chart Z=1, then (x:1:0), then [1:0:0]."""
    one, zero = spec.one(), spec.zero()
    for xv in range(spec.order):
        for yv in range(spec.order):
            yield ProjPoint(FieldElem(spec, xv), FieldElem(spec, yv), one)
    for xv in range(spec.order):
        yield ProjPoint(FieldElem(spec, xv), one, zero)
    yield ProjPoint(one, zero, zero)


def point_at_index(spec: FieldSpec, idx: int) -> ProjPoint:
    """The idx-th point of the canonical enumeration."""
    Q = spec.order
    one, zero = spec.one(), spec.zero()
    if idx < Q * Q:
        return ProjPoint(FieldElem(spec, idx // Q), FieldElem(spec, idx % Q), one)
    idx -= Q * Q
    if idx < Q:
        return ProjPoint(FieldElem(spec, idx), one, zero)
    return ProjPoint(one, zero, zero)


def evaluate(f: TernaryForm, P: ProjPoint) -> FieldElem:
    """Value of f at the normalized representative of P."""
    if P.spec is not f.field:
        raise FieldError("point and form over different fields")
    K = f.field
    xv, yv, zv = (c.val for c in P.coords)
    acc = 0
    for (i, j, k), c in f.terms.items():
        acc = K.add(acc, K.mul(c, K.mul(K.pow(xv, i), K.mul(K.pow(yv, j), K.pow(zv, k)))))
    return FieldElem(K, acc)


def evaluate_all(f: TernaryForm) -> np.ndarray:
    """Values of f at every point of P^2, in canonical enumeration order."""
    K = f.field
    Q = K.order
    xs = np.arange(Q, dtype=np.int64)
    affine = np.zeros((Q, Q), dtype=np.int64)
    line = np.zeros(Q, dtype=np.int64)
    far = 0
    pow_cache: dict[int, np.ndarray] = {}

    def powv(e):
        if e not in pow_cache:
            pow_cache[e] = K.pow_v(xs, e)
        return pow_cache[e]

    for (i, j, k), c in f.terms.items():
        if k == 0:
            line = K.add_v(line, K.mul_v(np.int64(c), powv(i)))
            if j == 0:
                far = K.add(far, c)
        term = K.mul_v(powv(i)[:, None], powv(j)[None, :])
        affine = K.add_v(affine, K.mul_v(np.int64(c), term))
    return np.concatenate([affine.reshape(-1), line, [far]])


def zero_mask(f: TernaryForm) -> np.ndarray:
    return evaluate_all(f) == 0


def points_on(f: TernaryForm) -> list[ProjPoint]:
    """All F_{q^2}-rational points of the curve f = 0."""
    idxs = np.nonzero(zero_mask(f))[0]
    return [point_at_index(f.field, int(i)) for i in idxs]


# ---------------------------------------------------------------------------
# Hermitian models
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hermitian_cached(q: int, variant: str) -> TernaryForm:
    from .field import field_of_order

    spec = field_of_order(q * q)
    if variant == "H1":
        terms = {(q + 1, 0, 0): 1, (0, q, 1): -1, (0, 1, q): -1}
    elif variant == "H2":
        terms = {(q + 1, 0, 0): 1, (0, q + 1, 0): 1, (0, 0, q + 1): 1}
    else:
        raise ValueError(f"unknown Hermitian model {variant!r}")
    return TernaryForm(spec, q + 1, terms)


def hermitian_model(q: int, variant: str = "H1") -> TernaryForm:
    """The degree q+1 Hermitian form; H1 is X^{q+1}-Y^qZ-YZ^q, H2 the Fermat model."""
    return _hermitian_cached(q, variant)


def _is_hermitian(f: TernaryForm) -> bool:
    Q = f.field.order
    q = isqrt(Q)
    if q * q != Q or f.degree != q + 1:
        return False
    return f == hermitian_model(q, "H1") or f == hermitian_model(q, "H2")


# ---------------------------------------------------------------------------
# intersections
# ---------------------------------------------------------------------------

@dataclass
class IntersectionReport:
    q: int
    d: int
    count: int
    target: int
    achieved: bool
    curve_descriptor: str = ""
    points: list | None = None
    degenerate: bool = False

    def to_dict(self):
        out = {
            "q": self.q,
            "d": self.d,
            "count": self.count,
            "target": self.target,
            "achieved": self.achieved,
            "curve_descriptor": self.curve_descriptor,
            "degenerate": self.degenerate,
        }
        if self.points is not None:
            out["points"] = [[c.coeffs() for c in P.coords] for P in self.points]
        return out


def intersection(
    f: TernaryForm,
    g: TernaryForm,
    with_points: bool = False,
    descriptor: str = "",
) -> IntersectionReport:
    """Count the common F_{q^2}-rational points of f and g.

    The target d(q+1) uses the degree of the non-Hermitian member when one
    of the two forms is a Hermitian model; f = g is flagged as degenerate.
    """
    if f.field is not g.field:
        raise FieldError("forms over different fields")
    spec = f.field
    q = isqrt(spec.order)
    if _is_hermitian(f) and not _is_hermitian(g):
        d = g.degree
    elif _is_hermitian(g) and not _is_hermitian(f):
        d = f.degree
    else:
        d = max(f.degree, g.degree)
    if f == g:
        mask = zero_mask(f)
        count = int(mask.sum())
        report = IntersectionReport(
            q, d, count, d * (q + 1), False, descriptor or "degenerate: identical curves",
            degenerate=True,
        )
    else:
        mask = zero_mask(f) & zero_mask(g)
        count = int(mask.sum())
        report = IntersectionReport(q, d, count, d * (q + 1), count == d * (q + 1), descriptor)
    if with_points:
        report.points = [point_at_index(spec, int(i)) for i in np.nonzero(mask)[0]]
    return report


# ---------------------------------------------------------------------------
# derivatives and singular points
# ---------------------------------------------------------------------------

def partials(f: TernaryForm) -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    """Formal partial derivatives (f_X, f_Y, f_Z) in characteristic p."""
    K = f.field
    out = []
    for axis in range(3):
        terms: dict[tuple[int, int, int], int] = {}
        for (i, j, k), c in f.terms.items():
            e = (i, j, k)[axis]
            v = K.mul(e % K.p, c)
            if v:
                m = list((i, j, k))
                m[axis] -= 1
                terms[tuple(m)] = v
        out.append(TernaryForm(K, max(f.degree - 1, 0), terms))
    return tuple(out)


def is_singular_point(f: TernaryForm, P: ProjPoint) -> bool:
    """All three partials vanish at P; if char | degree, also require f(P)=0."""
    fx, fy, fz = partials(f)
    if evaluate(fx, P) or evaluate(fy, P) or evaluate(fz, P):
        return False
    if f.degree % f.field.p == 0 and evaluate(f, P):
        return False
    return True


def has_smooth_rational_point(f: TernaryForm) -> bool:
    """True iff some F_{q^2}-rational point of f is nonsingular."""
    on_curve = zero_mask(f)
    fx, fy, fz = partials(f)
    smooth = on_curve & (
        (evaluate_all(fx) != 0) | (evaluate_all(fy) != 0) | (evaluate_all(fz) != 0)
    )
    return bool(smooth.any())


# ---------------------------------------------------------------------------
# divisibility and the bounded factor search
# ---------------------------------------------------------------------------

def divides(g: TernaryForm, f: TernaryForm) -> bool:
    """Exact divisibility of homogeneous forms by leading-term reduction."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    K = f.field
    glead = max(g.terms)
    glead_inv = K.inv(g.terms[glead])
    r = dict(f.terms)
    while r:
        lead = max(r)
        if any(lead[a] < glead[a] for a in range(3)):
            return False
        shift = tuple(lead[a] - glead[a] for a in range(3))
        factor = K.mul(r[lead], glead_inv)
        for m, v in g.terms.items():
            mm = (m[0] + shift[0], m[1] + shift[1], m[2] + shift[2])
            s = K.sub(r.get(mm, 0), K.mul(factor, v))
            if s:
                r[mm] = s
            else:
                r.pop(mm, None)
    return True


@dataclass
class ReducibilityResult:
    status: str  # "irreducible" | "factor" | "budget-exceeded"
    factor: TernaryForm | None = None
    scanned: int = 0


@dataclass
class IrreducibilityStatus:
    status: str  # "absolutely-irreducible" | "reducible" | "undetermined"
    factor: TernaryForm | None = None
    reason: str = ""


def _coeff_batches(Q: int, M: int, chunk: int = 1 << 15):
    """Canonical projective coefficient vectors of length M, in batches.

    Ordering: leading index ascending, then the remaining coefficients as a
    base-Q integer (most significant digit right after the leading 1).
    """
    for lead in range(M):
        free = M - 1 - lead
        total = Q**free
        start = 0
        while start < total:
            n = min(chunk, total - start)
            arr = np.zeros((n, M), dtype=np.int64)
            arr[:, lead] = 1
            s = np.arange(start, start + n, dtype=np.int64)
            for pos in range(free):
                arr[:, lead + 1 + pos] = (s // Q ** (free - 1 - pos)) % Q
            yield arr
            start += n


def _batch_has_no_zero_outside(spec, batch, mono_vals):
    """Rows of `batch` whose form has no zero at the given monomial-value rows.

    mono_vals has shape (n_points, M); candidates are eliminated point by
    point, compacting survivors, so the expected cost is O(len(batch) * Q).
    """
    survivors = np.arange(len(batch))
    cur = batch
    for row in mono_vals:
        vals = np.zeros(len(cur), dtype=np.int64)
        for j, mv in enumerate(row):
            if mv:
                vals = spec.add_v(vals, spec.mul_v(np.int64(mv), cur[:, j]))
        keep = vals != 0
        survivors = survivors[keep]
        cur = cur[keep]
        if not len(cur):
            break
    return survivors


def _search_degree_k_factor(f: TernaryForm, k: int):
    """First canonical degree-k factor of f, or None; returns (factor, scanned)."""
    spec = f.field
    Q = spec.order
    monos = monomials(k)
    M = len(monos)
    total = (Q**M - 1) // (Q - 1)
    scanned = 0

    use_prefilter = total > _PREFILTER_THRESHOLD
    if use_prefilter:
        off_curve = np.nonzero(~zero_mask(f))[0]
        Q2 = Q * Q
        pts = []
        for idx in map(int, off_curve):
            if idx < Q2:
                pts.append((idx // Q, idx % Q, 1))
            elif idx < Q2 + Q:
                pts.append((idx - Q2, 1, 0))
            else:
                pts.append((1, 0, 0))
        mono_vals = np.array(
            [
                [
                    spec.mul(spec.pow(x, i), spec.mul(spec.pow(y, j), spec.pow(z, kk)))
                    for (i, j, kk) in monos
                ]
                for (x, y, z) in pts
            ],
            dtype=np.int64,
        )

    for batch in _coeff_batches(Q, M):
        scanned += len(batch)
        if use_prefilter:
            rows = _batch_has_no_zero_outside(spec, batch, mono_vals)
            candidates = batch[rows]
        else:
            candidates = batch
        for row in candidates:
            g = TernaryForm(spec, k, {m: int(c) for m, c in zip(monos, row) if c})
            if divides(g, f):
                return g, scanned
    return None, scanned


def reducibility_search(
    f: TernaryForm, budget: int = DEFAULT_FACTOR_BUDGET
) -> ReducibilityResult:
    """Complete factor enumeration up to degree d/2, subject to a budget.

    A degree-k level is enumerated when Q^(M_k - 1) <= budget, where M_k is
    the number of degree-k monomials; linear factors are always enumerated.
    """
    if f.degree < 2:
        raise ValueError("factor search needs degree >= 2")
    Q = f.field.order
    scanned = 0
    skipped = False
    for k in range(1, f.degree // 2 + 1):
        M = (k + 1) * (k + 2) // 2
        if k > 1 and Q ** (M - 1) > budget:
            skipped = True
            continue
        g, n = _search_degree_k_factor(f, k)
        scanned += n
        if g is not None:
            return ReducibilityResult("factor", g, scanned)
    if skipped:
        return ReducibilityResult("budget-exceeded", None, scanned)
    return ReducibilityResult("irreducible", None, scanned)


def absolute_irreducibility_status(
    f: TernaryForm, budget: int = DEFAULT_FACTOR_BUDGET
) -> IrreducibilityStatus:
    """Certify absolute irreducibility.

    Irreducible over F_{q^2} plus one nonsingular rational point certifies
    absolute irreducibility: a geometrically reducible but rationally
    irreducible form has all its rational points on >= 2 conjugate
    components, hence singular.
    """
    res = reducibility_search(f, budget)
    if res.status == "factor":
        return IrreducibilityStatus("reducible", res.factor)
    if res.status == "budget-exceeded":
        return IrreducibilityStatus("undetermined", reason="factor budget exceeded")
    if has_smooth_rational_point(f):
        return IrreducibilityStatus("absolutely-irreducible")
    return IrreducibilityStatus("undetermined", reason="no smooth rational point found")
