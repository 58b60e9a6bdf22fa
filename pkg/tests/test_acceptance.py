"""Acceptance suite: every headline quantitative claim, with the exact
expected values and a wall-clock budget per criterion.

Each test drives the shared verification registry in
hermplane.reproduce, so the numbers asserted here are produced by the
same code path as the `reproduce-paper` command.
"""

import time

import pytest

from hermplane import reproduce


def _run(fn, budget_seconds):
    t0 = time.monotonic()
    records = fn()
    elapsed = time.monotonic() - t0
    assert elapsed < budget_seconds, f"took {elapsed:.1f}s, budget {budget_seconds}s"
    return records


def _assert_all_pass(records):
    failed = [
        (r["claim_id"], r["expected"], r["observed"])
        for r in records
        if not r["pass"]
    ]
    assert failed == []


# 1. Hermitian point counts, both models, q in {2,3,4,5,7,8,9}
def test_hermitian_point_counts():
    records = _run(reproduce.check_hermitian_point_counts, 5)
    assert len(records) == 14
    _assert_all_pass(records)


# 2. cubic split counts equal floor((q-2)/6) for every prime power q <= 64
def test_cubic_split_count_closed_form():
    _assert_all_pass(_run(reproduce.check_n3_closed_form, 1))


# 3. quartic split counts equal the piecewise closed form for q <= 64
def test_quartic_split_count_closed_form():
    records = _run(reproduce.check_n4_closed_form, 2)
    _assert_all_pass(records)
    spot = {r["claim_id"]: r["observed"] for r in records}
    assert spot["quartic-split-count-q16"] == 1
    assert spot["quartic-split-count-q23"] == 1
    assert spot["quartic-split-count-q8"] == 0
    assert spot["quartic-split-count-q25"] == 0


# 4. existence criteria for d = p^e and d = p^e + 1 match brute force
def test_split_existence_criteria():
    _assert_all_pass(_run(reproduce.check_existence_criteria, 5))


# 5. exhaustive searches: no irreducible achiever at (2,2), (3,2), (2,3)
def test_exhaustive_negative_searches():
    records = _run(reproduce.check_negative_searches, 180)
    _assert_all_pass(records)
    scanned = {r["claim_id"]: r["observed"][0] for r in records}
    assert scanned["negative-search-q2-d2"] == 1365
    assert scanned["negative-search-q3-d2"] == 66430
    assert scanned["negative-search-q2-d3"] == 349525


# 6. sporadic cubics: count 3(q+1) and certified absolutely irreducible
def test_sporadic_cubics():
    _assert_all_pass(_run(reproduce.check_sporadic_cubics, 10))


# 7. sporadic quartics: some canonical primitive omega yields 4(q+1)
def test_sporadic_quartics():
    _assert_all_pass(_run(reproduce.check_sporadic_quartics, 60))


# 8. secant fan: d(q+1) for the full degree range at q in {3,4,5},
#    irreducibility certified for the degree <= 5 cases
def test_secant_fan():
    _assert_all_pass(_run(reproduce.check_secant_fan, 120))


# 9. full-point curve: all q^3+1 Hermitian points for q in {3,4,5};
#    the q=2 outcome is recorded without assertion
def test_full_point_curve():
    records = _run(reproduce.check_full_point_curve, 30)
    _assert_all_pass(records)
    q2 = [r for r in records if r["claim_id"] == "full-point-curve-q2-report"]
    assert len(q2) == 1  # recorded, whatever its count


# 10. degree-q curve: q(q+1) for q in {3,4,5,7}
def test_degree_q_curve():
    _assert_all_pass(_run(reproduce.check_degree_q_curve, 30))


# 11. even-half curve: (q/2)(q+1) for q in {4,8,16}
def test_even_half_curve():
    _assert_all_pass(_run(reproduce.check_even_half, 60))


# 12. odd-half curve: ((q+1)/2)(q+1) for q in {17,19,23,25,27,29};
#    parameter-search outcomes for odd q <= 13 are recorded only
def test_odd_half_curve():
    records = _run(reproduce.check_odd_half, 120)
    _assert_all_pass(records)


# 13. quintic splitting survey over gcd(q,20)=1:
#    positives below 131 are exactly the ten listed prime powers,
#    N_5(131)=0, and no zero count in (131, 500]
def test_quintic_survey():
    _assert_all_pass(_run(reproduce.check_quintic_survey, 60))


# 14. sextic splitting survey over gcd(q,30)=1: N_6(1877)=0 and no zero
#    count in (1877, 2500].  The second half does not hold: the sweep
#    finds N_6(q)=0 at q in {2083, 2179, 2197}, so this criterion fails
#    as stated and is left failing deliberately.
def test_sextic_survey():
    records = _run(reproduce.check_sextic_survey, 120)
    spot = {r["claim_id"]: r for r in records}
    assert spot["sextic-survey-n6-1877"]["pass"]
    _assert_all_pass(records)


# 15. splitting-field genus and guaranteed-splitting thresholds
def test_genus_and_thresholds():
    records = _run(reproduce.check_genus_and_thresholds, 1)
    _assert_all_pass(records)


# 16. property suites: Euler identity on 1000 seeded random forms;
#    monomial fast path vs enumeration exhaustive for q <= 8, d <= 6;
#    rho-parametrization root identities exhaustive for q <= 16, d <= 6;
#    norm/trace algebra exhaustive for q <= 16
def test_property_suites():
    t0 = time.monotonic()
    records = []
    records += reproduce.check_euler_identity()
    records += reproduce.check_monomial_fast_path()
    records += reproduce.check_rho_parametrization()
    records += reproduce.check_norm_trace()
    elapsed = time.monotonic() - t0
    assert elapsed < 60, f"took {elapsed:.1f}s, budget 60s"
    _assert_all_pass(records)
