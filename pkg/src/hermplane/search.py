"""Exhaustive searches over projective plane curves of a given degree.

These back the small-field impossibility results: for some (q, d) no
irreducible degree-d curve meets the Hermitian curve in d(q+1) distinct
rational points.  Every projective equivalence class of ternary forms is
scanned, counting zeros among the q^3+1 Hermitian points only, and each
achiever is re-verified and classified by a complete factor search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .plane import (
    TernaryForm,
    _coeff_batches,
    divides,
    evaluate_all,
    hermitian_model,
    intersection,
    monomials,
    point_at_index,
    reducibility_search,
)

SCAN_BUDGET = 10**7


class SearchBudgetError(RuntimeError):
    """The candidate space exceeds the permitted scan budget."""


@dataclass
class SearchReport:
    q: int
    d: int
    model: str
    target: int
    total_forms_scanned: int
    complete: bool
    achievers: list = dc_field(default_factory=list)
    irreducible_achievers: list = dc_field(default_factory=list)
    reducible_achievers: list = dc_field(default_factory=list)
    wallclock: float = 0.0

    def to_dict(self):
        def ser(forms):
            return [sorted(f.terms.items()) for f in forms]

        return {
            "q": self.q,
            "d": self.d,
            "model": self.model,
            "target": self.target,
            "total_forms_scanned": self.total_forms_scanned,
            "complete": self.complete,
            "achievers": ser(self.achievers),
            "irreducible_achievers": ser(self.irreducible_achievers),
            "reducible_achievers": ser(self.reducible_achievers),
            "wallclock": self.wallclock,
        }


def projective_form_count(Q: int, M: int) -> int:
    """(Q^M - 1)/(Q - 1): forms up to scalar on M monomials over F_Q."""
    return (Q**M - 1) // (Q - 1)


def _hermitian_point_values(q: int, model: str, d: int):
    """Monomial value matrix (M, n) over the rational Hermitian points."""
    h = hermitian_model(q, model)
    spec = h.field
    idxs = np.nonzero(evaluate_all(h) == 0)[0]
    mons = monomials(d)
    pts = [point_at_index(spec, int(i)) for i in idxs]
    vals = np.empty((len(mons), len(idxs)), dtype=np.int64)
    for r, (i, j, k) in enumerate(mons):
        vals[r] = [
            spec.mul(
                spec.mul(spec.pow(P.coords[0].val, i), spec.pow(P.coords[1].val, j)),
                spec.pow(P.coords[2].val, k),
            )
            for P in pts
        ]
    return spec, mons, vals


def _count_zero_hits(spec, vals, batch):
    """Zeros among the Hermitian points for each coefficient row."""
    n = vals.shape[1]
    acc = np.zeros((batch.shape[0], n), dtype=np.int64)
    for r in range(vals.shape[0]):
        col = batch[:, r]
        nz = col != 0
        if nz.any():
            acc[nz] = spec.add_v(acc[nz], spec.mul_v(col[nz, None], vals[r][None, :]))
    return (acc == 0).sum(axis=1)


def _shares_hermitian_component(form: TernaryForm, h: TernaryForm) -> bool:
    if form.degree == h.degree:
        return form == h
    if form.degree > h.degree:
        return divides(h, form)
    return False


def _run_search(q, d, model, budget, limit):
    spec, mons, vals = _hermitian_point_values(q, model, d)
    Q = spec.order
    M = len(mons)
    total = projective_form_count(Q, M)
    if limit is None and total > budget:
        raise SearchBudgetError(
            f"{total} candidate forms for (q={q}, d={d}) exceed the budget {budget}"
        )
    cap = total if limit is None else min(total, budget)
    target = d * (q + 1)
    h = hermitian_model(q, model)
    t0 = time.monotonic()
    report = SearchReport(q, d, model, target, 0, False)
    for batch in _coeff_batches(Q, M):
        if report.total_forms_scanned >= cap:
            break
        if report.total_forms_scanned + batch.shape[0] > cap:
            batch = batch[: cap - report.total_forms_scanned]
        hits = _count_zero_hits(spec, vals, batch)
        report.total_forms_scanned += batch.shape[0]
        for idx in np.nonzero(hits == target)[0]:
            form = TernaryForm(
                spec, d, {m: int(c) for m, c in zip(mons, batch[idx]) if c}
            )
            rep = intersection(h, form)
            if rep.degenerate or rep.count != target:
                continue
            if _shares_hermitian_component(form, h):
                continue
            report.achievers.append(form)
            res = reducibility_search(form, budget=budget)
            if res.status == "irreducible":
                report.irreducible_achievers.append(form)
                if limit is not None and len(report.irreducible_achievers) >= limit:
                    report.wallclock = time.monotonic() - t0
                    return report
            elif res.status == "factor":
                report.reducible_achievers.append(form)
    report.complete = report.total_forms_scanned >= total
    report.wallclock = time.monotonic() - t0
    return report


def exhaustive_negative_search(
    q: int, d: int, model: str = "H2", budget: int = SCAN_BUDGET
) -> SearchReport:
    """Scan every projective degree-d form over F_{q^2} for d(q+1) hits.

    Proves a negative when irreducible_achievers comes back empty.
    Raises SearchBudgetError when the space exceeds `budget`.
    """
    return _run_search(q, d, model, budget, None)


def positive_witness_search(
    q: int, d: int, limit: int = 1, model: str = "H2", budget: int = SCAN_BUDGET
) -> SearchReport:
    """Scan in canonical order until `limit` irreducible achievers appear.

    At most `budget` forms are scanned; `complete` records whether the
    space was exhausted anyway.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    return _run_search(q, d, model, budget, limit)
