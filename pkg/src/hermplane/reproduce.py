"""The full verification matrix: every headline quantitative claim the
package reproduces, as a list of named checks with expected and observed
values.

Each check returns a list of records {claim_id, expected, observed,
pass, millis}; `run_all` executes them in a fixed order.  The test
suite and the command line `reproduce-paper` command both drive this
registry, so a claim is verified by exactly one piece of code.
"""

from __future__ import annotations

import random
import time

from .constructions import (
    ambient,
    canonical_degree_q_alpha,
    degree_q_curve,
    even_half_curve,
    full_point_curve,
    monomial_curve,
    monomial_fast_count,
    odd_half_curve,
    odd_half_params,
    secant_fan_curve,
    sporadic_cubic,
    sporadic_quartic,
)
from .field import (
    FieldElem,
    field_of_order,
    frobenius,
    norm_preimages,
    norm_to_subfield,
    subfield_elements,
    trace_to_subfield,
)
from .plane import (
    TernaryForm,
    absolute_irreducibility_status,
    evaluate_all,
    hermitian_model,
    intersection,
    monomials,
    points_on,
)
from .search import exhaustive_negative_search
from .splitting import (
    count_splitting_A,
    exists_split_pe,
    exists_split_pe_plus_one,
    genus_Fd,
    n3_closed_form,
    n4_closed_form,
    pe_transform_roots,
    prime_powers,
    rho_parametrization,
    serre_split_threshold,
    survey_split,
)
from .unipoly import UniPoly, roots_in_field


def _rec(claim_id, expected, observed, t0):
    return {
        "claim_id": claim_id,
        "expected": expected,
        "observed": observed,
        "pass": expected == observed,
        "millis": round((time.monotonic() - t0) * 1000, 1),
    }


# ---------------------------------------------------------------------------
# individual checks; each yields one or more records
# ---------------------------------------------------------------------------

def check_hermitian_point_counts():
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        for model in ("H1", "H2"):
            t0 = time.monotonic()
            n = len(points_on(hermitian_model(q, model)))
            out.append(_rec(f"hermitian-points-{model}-q{q}", q**3 + 1, n, t0))
    return out


def check_n3_closed_form():
    t0 = time.monotonic()
    bad = [
        q
        for q in prime_powers(2, 64)
        if count_splitting_A(q, 3).count != n3_closed_form(q)
    ]
    return [_rec("cubic-split-count-closed-form-q<=64", [], bad, t0)]


def check_n4_closed_form():
    t0 = time.monotonic()
    bad = [
        q
        for q in prime_powers(2, 64)
        if count_splitting_A(q, 4).count != n4_closed_form(q)
    ]
    out = [_rec("quartic-split-count-closed-form-q<=64", [], bad, t0)]
    for q, want in ((16, 1), (23, 1), (8, 0), (25, 0)):
        t0 = time.monotonic()
        out.append(_rec(f"quartic-split-count-q{q}", want, n4_closed_form(q), t0))
    return out


_EXISTENCE_GRID = {
    2: [2, 4, 8, 16, 32],
    3: [2, 4, 8, 16, 32, 64, 3, 9, 27, 81],
    4: [4, 16, 64, 3, 9, 27, 81],
    5: [5, 25, 4, 16, 64],
    9: [3, 9, 27, 81],
}


def _exists_by_criterion(q, d):
    p = field_of_order(q).p if q > 1 else None
    e = 0
    n = d
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    if n == 1:
        return exists_split_pe(q, d)
    return exists_split_pe_plus_one(q, d)


def check_existence_criteria():
    out = []
    for d, qs in _EXISTENCE_GRID.items():
        t0 = time.monotonic()
        bad = []
        for q in qs:
            want = count_splitting_A(q, d).count > 0
            got = _exists_by_criterion(q, d)
            if want != got:
                bad.append((q, want, got))
        out.append(_rec(f"split-existence-criterion-d{d}", [], bad, t0))
    return out


def check_negative_searches():
    out = []
    for (q, d), total in (((2, 2), 1365), ((3, 2), 66430), ((2, 3), 349525)):
        t0 = time.monotonic()
        rep = exhaustive_negative_search(q, d)
        obs = (rep.total_forms_scanned, len(rep.irreducible_achievers), rep.complete)
        out.append(_rec(f"negative-search-q{q}-d{d}", (total, 0, True), obs, t0))
    return out


def check_sporadic_cubics():
    out = []
    for q in (3, 4, 5, 7):
        t0 = time.monotonic()
        f = sporadic_cubic(q)
        count = intersection(hermitian_model(q, "H2"), f).count
        status = absolute_irreducibility_status(f).status
        out.append(
            _rec(
                f"sporadic-cubic-q{q}",
                (3 * (q + 1), "absolutely-irreducible"),
                (count, status),
                t0,
            )
        )
    return out


def check_sporadic_quartics():
    out = []
    for q in (5, 9, 11, 13, 17, 19, 25):
        t0 = time.monotonic()
        _, f = sporadic_quartic(q)
        count = intersection(hermitian_model(q, "H2"), f).count
        out.append(_rec(f"sporadic-quartic-q{q}", 4 * (q + 1), count, t0))
    return out


def check_secant_fan():
    out = []
    for q in (3, 4, 5):
        t0 = time.monotonic()
        h = hermitian_model(q, "H1")
        bad = []
        for d in range(q + 1, q * q - q + 1):
            _, f = secant_fan_curve(q, d)
            if intersection(h, f).count != d * (q + 1):
                bad.append(d)
        out.append(_rec(f"secant-fan-counts-q{q}", [], bad, t0))
    # irreducibility where the factor budget allows (degree <= 5)
    for q, d in ((3, 4), (3, 5), (4, 5)):
        t0 = time.monotonic()
        _, f = secant_fan_curve(q, d)
        status = absolute_irreducibility_status(f).status
        out.append(
            _rec(f"secant-fan-irreducible-q{q}-d{d}", "absolutely-irreducible", status, t0)
        )
    return out


def check_full_point_curve():
    out = []
    for q in (3, 4, 5):
        t0 = time.monotonic()
        count = intersection(hermitian_model(q, "H1"), full_point_curve(q)).count
        out.append(_rec(f"full-point-curve-q{q}", q**3 + 1, count, t0))
    # the q=2 run is recorded without an expectation of its own
    t0 = time.monotonic()
    count2 = intersection(hermitian_model(2, "H1"), full_point_curve(2)).count
    out.append(_rec("full-point-curve-q2-report", count2, count2, t0))
    return out


def check_degree_q_curve():
    out = []
    for q in (3, 4, 5, 7):
        t0 = time.monotonic()
        f = degree_q_curve(q)
        count = intersection(hermitian_model(q, "H1"), f).count
        out.append(_rec(f"degree-q-curve-q{q}", q * (q + 1), count, t0))
    return out


def check_even_half():
    out = []
    for q in (4, 8, 16):
        t0 = time.monotonic()
        _, f = even_half_curve(q)
        count = intersection(hermitian_model(q, "H1"), f).count
        out.append(_rec(f"even-half-curve-q{q}", (q // 2) * (q + 1), count, t0))
    return out


def check_odd_half():
    out = []
    for q in (17, 19, 23, 25, 27, 29):
        t0 = time.monotonic()
        params = odd_half_params(q)
        if params is None:
            out.append(_rec(f"odd-half-curve-q{q}", "params", None, t0))
            continue
        a, b, _ = params
        count = intersection(hermitian_model(q, "H2"), odd_half_curve(q, a, b)).count
        out.append(_rec(f"odd-half-curve-q{q}", ((q + 1) // 2) * (q + 1), count, t0))
    # small odd q: outcome recorded, not asserted
    for q in (3, 5, 7, 9, 11, 13):
        t0 = time.monotonic()
        params = odd_half_params(q)
        obs = "no-params" if params is None else "params"
        out.append(_rec(f"odd-half-params-q{q}-report", obs, obs, t0))
    return out


def check_quintic_survey():
    t0 = time.monotonic()
    rows = dict(survey_split(5, 500, gcd_filter=20))
    positives = sorted(q for q, n in rows.items() if n > 0 and q <= 131)
    rec1 = _rec(
        "quintic-survey-positives-below-131",
        [67, 79, 83, 101, 103, 107, 109, 113, 121, 127],
        positives,
        t0,
    )
    t0 = time.monotonic()
    rec2 = _rec("quintic-survey-n5-131", 0, rows[131], t0)
    t0 = time.monotonic()
    zeros_above = sorted(q for q, n in rows.items() if q > 131 and n == 0)
    rec3 = _rec("quintic-survey-no-zeros-131-500", [], zeros_above, t0)
    return [rec1, rec2, rec3]


def check_sextic_survey():
    t0 = time.monotonic()
    rows = dict(survey_split(6, 2500, gcd_filter=30))
    rec1 = _rec("sextic-survey-n6-1877", 0, rows[1877], t0)
    t0 = time.monotonic()
    zeros_above = sorted(q for q, n in rows.items() if q > 1877 and n == 0)
    # the claimed bound: no zero counts past 1877; the sweep finds three
    rec2 = _rec("sextic-survey-no-zeros-1877-2500", [], zeros_above, t0)
    return [rec1, rec2]


def check_genus_and_thresholds():
    out = []
    for d, g in ((3, 0), (4, 0), (5, 4), (6, 49)):
        t0 = time.monotonic()
        out.append(_rec(f"splitting-field-genus-d{d}", g, genus_Fd(d), t0))
    for d, thr in ((5, 233), (6, 10766)):
        t0 = time.monotonic()
        out.append(_rec(f"split-threshold-d{d}", thr, serre_split_threshold(d), t0))
    return out


def check_euler_identity():
    """X f_X + Y f_Y + Z f_Z = d f for 1000 seeded random forms."""
    t0 = time.monotonic()
    rng = random.Random(20260826)
    bad = 0
    for _ in range(1000):
        q = rng.choice((2, 3, 4, 5))
        spec = ambient(q)
        d = rng.randint(1, 4)
        terms = {}
        for m in monomials(d):
            if rng.random() < 0.5:
                terms[m] = rng.randrange(1, spec.order)
        if not terms:
            terms = {(d, 0, 0): 1}
        f = TernaryForm(spec, d, terms)
        from .plane import partials

        fx, fy, fz = partials(f)
        x = TernaryForm(spec, 1, {(1, 0, 0): 1})
        y = TernaryForm(spec, 1, {(0, 1, 0): 1})
        z = TernaryForm(spec, 1, {(0, 0, 1): 1})
        lhs = x * fx + y * fy + z * fz
        rhs = f.scale(FieldElem(spec, d % spec.p))
        if not lhs.same_terms(rhs):
            bad += 1
    return [_rec("euler-identity-1000-random-forms", 0, bad, t0)]


def check_monomial_fast_path():
    """Fast count equals full enumeration for every alpha, q <= 8, d <= 6."""
    out = []
    for q in (2, 3, 4, 5, 7, 8):
        t0 = time.monotonic()
        spec = ambient(q)
        h = hermitian_model(q, "H2")
        bad = []
        for d in range(2, 7):
            for a in range(1, spec.order):
                alpha = FieldElem(spec, a)
                fast = monomial_fast_count(q, d, alpha)
                full = intersection(h, monomial_curve(q, d, alpha)).count
                if fast != full:
                    bad.append((d, a, fast, full))
        out.append(_rec(f"monomial-fast-path-q{q}", [], bad, t0))
    return out


def check_rho_parametrization():
    """Root identities for every non-degenerate rho, q <= 16, d <= 6."""
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        t0 = time.monotonic()
        spec = ambient(q)
        p = spec.p
        bad = []
        for d in range(2, 7):
            for r in range(spec.order):
                parts = rho_parametrization(q, d, r)
                if parts is None:
                    continue
                a, t1, t2 = parts
                f = UniPoly(spec, [1, 1] + [0] * (d - 2) + [a.val])
                for t in (t1, t2):
                    if f.evaluate(t.val) != 0:
                        bad.append((d, r))
                # d a power of the characteristic: full root set via B
                e, n = 0, d
                while n > 1 and n % p == 0:
                    n //= p
                    e += 1
                if n == 1 and e > 0:
                    bt = pe_transform_roots(q, d, r)
                    if bt is not None:
                        _, roots = bt
                        if any(f.evaluate(x.val) != 0 for x in roots):
                            bad.append(("pe-roots", d, r))
                        if len({x.val for x in roots}) != d:
                            bad.append(("pe-distinct", d, r))
                # d = p^e + 1: the ratio of a third root satisfies
                # ((sigma-1)/(sigma-rho))^{d-2} = rho
                e, n = 0, d - 1
                while n > 1 and n % p == 0:
                    n //= p
                    e += 1
                if n == 1 and e > 0 and d > 2:
                    others = [
                        x.val
                        for x in roots_in_field(f, spec.order)
                        if x.val not in (t1.val, t2.val)
                    ]
                    for t3 in others:
                        sig = spec.mul(t3, spec.inv(t1.val))
                        den = spec.sub(sig, r)
                        if den == 0:
                            continue
                        lhs = spec.pow(
                            spec.mul(spec.sub(sig, 1), spec.inv(den)), d - 2
                        )
                        if lhs != r:
                            bad.append(("ratio", d, r, t3))
        out.append(_rec(f"rho-parametrization-q{q}", [], bad, t0))
    return out


def check_norm_trace():
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        t0 = time.monotonic()
        spec = ambient(q)
        sub = {x.val for x in subfield_elements(spec, q)}
        bad = []
        for v in range(spec.order):
            x = FieldElem(spec, v)
            nx, tx = norm_to_subfield(x), trace_to_subfield(x)
            if nx.val not in sub or tx.val not in sub:
                bad.append(v)
            if frobenius(x).val != spec.pow(v, spec.p):
                bad.append(("frob", v))
        for s in sorted(sub):
            if s and len(norm_preimages(FieldElem(spec, s))) != q + 1:
                bad.append(("preimages", s))
        out.append(_rec(f"norm-trace-q{q}", [], bad, t0))
    return out


CHECKS = [
    ("hermitian-point-counts", check_hermitian_point_counts),
    ("cubic-split-closed-form", check_n3_closed_form),
    ("quartic-split-closed-form", check_n4_closed_form),
    ("split-existence-criteria", check_existence_criteria),
    ("negative-searches", check_negative_searches),
    ("sporadic-cubics", check_sporadic_cubics),
    ("sporadic-quartics", check_sporadic_quartics),
    ("secant-fan", check_secant_fan),
    ("full-point-curve", check_full_point_curve),
    ("degree-q-curve", check_degree_q_curve),
    ("even-half", check_even_half),
    ("odd-half", check_odd_half),
    ("quintic-survey", check_quintic_survey),
    ("sextic-survey", check_sextic_survey),
    ("genus-thresholds", check_genus_and_thresholds),
    ("euler-identity", check_euler_identity),
    ("monomial-fast-path", check_monomial_fast_path),
    ("rho-parametrization", check_rho_parametrization),
    ("norm-trace", check_norm_trace),
]


def run_all(only: str | None = None):
    """Run every check (or those whose group name contains `only`)."""
    records = []
    for name, fn in CHECKS:
        if only and only not in name:
            continue
        records.extend(fn())
    return records
