"""Text and JSON encodings for field elements and plane curves.

Field elements print as coefficient vectors "[c0,c1,...]" against the
canonical modulus, or as generator powers "w^k"; "0" is the zero
element.  Curves serialize to JSON with their field, degree, model tag
and sparse term list.
"""

from __future__ import annotations

import json

from .field import FieldElem, FieldSpec, field_of_order
from .plane import TernaryForm


def format_element(x: FieldElem, style: str = "coeffs") -> str:
    if x.val == 0:
        return "0"
    if style == "coeffs":
        return "[" + ",".join(str(c) for c in x.coeffs()) + "]"
    if style == "power":
        k = int(x.spec._log[x.val])
        return "w" if k == 1 else f"w^{k}"
    raise ValueError(f"unknown style {style!r}")


def parse_element(spec: FieldSpec, text) -> FieldElem:
    """Accepts "[c0,c1,...]", "w^k", "w", a plain integer encoding, or a
    list of coefficients."""
    if isinstance(text, FieldElem):
        return spec.elem(text)
    if isinstance(text, (int, list, tuple)):
        return spec.elem(text)
    text = text.strip()
    if text == "0":
        return spec.zero()
    if text == "w":
        return spec.gen()
    if text.startswith("w^"):
        return FieldElem(spec, spec.pow(spec.gen().val, int(text[2:])))
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unbalanced coefficient vector {text!r}")
        return spec.elem([int(c) for c in text[1:-1].split(",") if c.strip() != ""])
    return spec.elem(int(text))


def curve_to_dict(form: TernaryForm, model: str | None = None) -> dict:
    spec = form.field
    d = {
        "p": spec.p,
        "m": spec.m,
        "degree": form.degree,
        "terms": [
            {"i": i, "j": j, "k": k, "coeff": format_element(FieldElem(spec, c))}
            for (i, j, k), c in sorted(form.terms.items())
        ],
    }
    if model is not None:
        d["model"] = model
    return d


def curve_from_dict(data: dict) -> TernaryForm:
    spec = field_of_order(data["p"] ** data["m"])
    terms = {}
    for t in data["terms"]:
        terms[(t["i"], t["j"], t["k"])] = parse_element(spec, t["coeff"]).val
    return TernaryForm(spec, data["degree"], terms)


def save_curve(path, form: TernaryForm, model: str | None = None):
    with open(path, "w") as fh:
        json.dump(curve_to_dict(form, model), fh, indent=2)
        fh.write("\n")


def load_curve(path) -> TernaryForm:
    with open(path) as fh:
        return curve_from_dict(json.load(fh))
