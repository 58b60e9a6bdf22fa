"""Command-line interface.

Every command is deterministic: the same arguments always produce
byte-identical output.  Exit codes: 0 success, 1 a verification that
was asked for did not hold, 2 usage error or invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .constructions import ConstructionError, FAMILIES, build
from .field import FieldError
from .plane import hermitian_model, intersection, points_on
from .search import exhaustive_negative_search
from .serialize import (
    curve_to_dict,
    format_element,
    load_curve,
    save_curve,
)
from .splitting import (
    count_splitting_A,
    genus_Fd,
    ramification_allowance,
    serre_split_threshold,
    survey_split,
)
from . import reproduce


# ---------------------------------------------------------------------------
# output plumbing: a list of flat dicts rendered as json-lines / csv / table
# ---------------------------------------------------------------------------

def _emit(records, fmt, stream=None):
    stream = stream or sys.stdout
    records = list(records)
    if not records:
        return
    if fmt == "json":
        for r in records:
            stream.write(json.dumps(r, sort_keys=True) + "\n")
        return
    keys = list(records[0])
    for r in records[1:]:
        for k in r:
            if k not in keys:
                keys.append(k)
    rows = [[_cell(r.get(k, "")) for k in keys] for r in records]
    if fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(keys)
        w.writerows(rows)
        return
    widths = [max(len(k), *(len(row[i]) for row in rows)) for i, k in enumerate(keys)]
    stream.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for row in rows:
        stream.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _cell(v):
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _point_str(P):
    return "[" + ":".join(format_element(c) for c in P.coords) + "]"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_hermitian_points(args):
    h = hermitian_model(args.q, args.model)
    pts = points_on(h)
    recs = [{"q": args.q, "model": args.model, "points": len(pts)}]
    if args.emit_points:
        recs = [
            {"q": args.q, "model": args.model, "point": _point_str(P)} for P in pts
        ]
    _emit(recs, args.format)
    return 0


def cmd_intersect(args):
    f = load_curve(args.curve)
    h = hermitian_model(args.q, args.model)
    if f.field is not h.field:
        raise ConstructionError(
            f"curve lives over order {f.field.order}, expected {h.field.order}"
        )
    rep = intersection(h, f, with_points=args.emit_points)
    rec = {
        "q": args.q,
        "model": args.model,
        "degree": f.degree,
        "count": rep.count,
        "degenerate": rep.degenerate,
    }
    if args.emit_points:
        rec["points"] = [_point_str(P) for P in rep.points]
    _emit([rec], args.format)
    return 0


def cmd_construct(args):
    desc, form = build(args.family, args.q, d=args.d, alpha=args.alpha)
    if args.output:
        save_curve(args.output, form, model=desc.model)
    rec = dict(desc.to_dict(), terms=curve_to_dict(form)["terms"])
    _emit([rec], args.format)
    return 0


def cmd_verify(args):
    desc, form = build(args.family, args.q, d=args.d, alpha=args.alpha)
    target = desc.d * (args.q + 1)
    rep = intersection(hermitian_model(args.q, desc.model), form)
    achieved = rep.count == target and not rep.degenerate
    _emit(
        [
            {
                "family": args.family,
                "q": args.q,
                "d": desc.d,
                "model": desc.model,
                "target": target,
                "count": rep.count,
                "achieved": achieved,
            }
        ],
        args.format,
    )
    return 0 if achieved else 1


def cmd_split_count(args):
    rep = count_splitting_A(args.q, args.d)
    rec = {
        "q": rep.q,
        "d": rep.d,
        "count": rep.count,
        "witnesses": list(rep.witnesses),
    }
    if rep.closed_form is not None:
        rec["closed_form"] = rep.closed_form
        rec["agree"] = rep.agree
    _emit([rec], args.format)
    return 0 if rep.agree is not False else 1


def cmd_survey(args):
    rows = survey_split(args.d, args.q_max, gcd_filter=args.gcd_filter)
    _emit([{"q": q, "count": n} for q, n in rows], args.format)
    return 0


def cmd_thresholds(args):
    recs = []
    for d in args.d:
        recs.append(
            {
                "d": d,
                "genus": genus_Fd(d),
                "ramification": ramification_allowance(d),
                "threshold": serre_split_threshold(d),
            }
        )
    _emit(recs, args.format)
    return 0


def cmd_negative_search(args):
    kwargs = {"model": args.model}
    if args.budget is not None:
        kwargs["budget"] = args.budget
    rep = exhaustive_negative_search(args.q, args.d, **kwargs)
    rec = rep.to_dict()
    if not args.emit_points:
        rec.pop("achievers", None)
        rec.pop("irreducible_achievers", None)
        rec.pop("reducible_achievers", None)
    rec.pop("wallclock", None)
    _emit([rec], args.format)
    return 0


def cmd_reproduce_paper(args):
    records = reproduce.run_all(only=args.only)
    if not args.timings:
        records = [
            {k: v for k, v in r.items() if k != "millis"} for r in records
        ]
    _emit(records, args.format)
    failed = sum(1 for r in records if not r["pass"])
    _emit(
        [{"claims": len(records), "failed": failed}],
        args.format,
        stream=sys.stderr,
    )
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hermplane",
        description="plane curves with many rational Hermitian intersections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format", choices=("json", "csv", "table"), default="table"
        )

    p = sub.add_parser("hermitian-points", help="count or list Hermitian points")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--model", choices=("H1", "H2"), default="H1")
    p.add_argument("--emit-points", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_hermitian_points)

    p = sub.add_parser("intersect", help="intersect a curve file with a Hermitian model")
    p.add_argument("--curve", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--model", choices=("H1", "H2"), default="H1")
    p.add_argument("--emit-points", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_intersect)

    for name, fn in (("construct", cmd_construct), ("verify", cmd_verify)):
        p = sub.add_parser(name, help=f"{name} a curve from a named family")
        p.add_argument("--family", choices=FAMILIES, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--d", type=int)
        p.add_argument("--alpha", help="field element, e.g. 'w^3' or '[1,2]'")
        if name == "construct":
            p.add_argument("--output", help="write the curve to this file")
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("split-count", help="count splitting values A for A t^d + t + 1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_split_count)

    p = sub.add_parser("survey", help="splitting counts over a range of prime powers")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--gcd-filter", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_survey)

    p = sub.add_parser("thresholds", help="genus and guaranteed-splitting thresholds")
    p.add_argument("--d", type=int, nargs="+", default=[5, 6])
    common(p)
    p.set_defaults(fn=cmd_thresholds)

    p = sub.add_parser(
        "negative-search", help="exhaustively scan forms of degree d for achievers"
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--model", choices=("H1", "H2"), default="H2")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--emit-points", action="store_true", help="include achiever forms")
    common(p)
    p.set_defaults(fn=cmd_negative_search)

    p = sub.add_parser(
        "reproduce-paper", help="run the full verification matrix"
    )
    p.add_argument("--only", help="run only check groups whose name contains this")
    p.add_argument("--timings", action="store_true", help="include per-claim millis")
    common(p)
    p.set_defaults(fn=cmd_reproduce_paper)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConstructionError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
