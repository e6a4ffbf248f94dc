"""JSON codecs for the CLI payloads and results.

Scalars travel as exact-rational strings "p/q" (or "p" for integers).
Component documents carry the field, the size n and the label data;
point documents add a "coords" list; K-classes are degree plus a sorted
term list.  Rendering is deterministic: sorted keys, fixed indentation,
so identical invocations give identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dual import (
    SIGN_ID,
    SIGN_SGN,
    Component,
    ComplexComponent,
    RealComponent,
    TemperedPoint,
)
from .errors import UsageError
from .ktheory import GradedKGroup, KClass, RepRingElement
from .weil import (
    COMPLEX,
    REAL,
    ComplexCharacter,
    LParameter,
    RealCharacter,
    RealDiscreteSummand,
)


def fraction_to_str(t: Fraction) -> str:
    t = Fraction(t)
    return str(t.numerator) if t.denominator == 1 else f"{t.numerator}/{t.denominator}"


def fraction_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise UsageError(f"bad rational {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {value!r}: {exc}") from None
    raise UsageError(f'rationals must be integers or "p/q" strings, got {value!r}')


def _require(doc, key, kind=None):
    if not isinstance(doc, dict):
        raise UsageError(f"expected a JSON object, got {type(doc).__name__}")
    if key not in doc:
        raise UsageError(f"missing key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise UsageError(f"key {key!r} has the wrong type")
    return value


def _int_list(values, what):
    if not isinstance(values, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in values
    ):
        raise UsageError(f"{what} must be a list of integers")
    return [int(v) for v in values]


def component_to_doc(c: Component) -> dict:
    if isinstance(c, RealComponent):
        return {
            "field": "R",
            "n": c.n,
            "q": c.q,
            "r": c.r,
            "discrete": list(c.discrete),
            "signs": list(c.signs),
        }
    return {"field": "C", "n": c.n, "labels": list(c.labels)}


def component_from_doc(doc) -> Component:
    field_name = _require(doc, "field", str)
    n = _require(doc, "n", int)
    if field_name == "R":
        q = _require(doc, "q", int)
        r = _require(doc, "r", int)
        discrete = _int_list(_require(doc, "discrete"), '"discrete"')
        signs = _require(doc, "signs", list)
        if any(s not in (SIGN_ID, SIGN_SGN) for s in signs):
            raise UsageError(f'signs must be "{SIGN_ID}" or "{SIGN_SGN}"')
        if len(discrete) != q or len(signs) != r or n != 2 * q + r:
            raise UsageError("inconsistent component: need len(discrete) = q, len(signs) = r, n = 2q + r")
        return RealComponent(tuple(discrete), signs.count(SIGN_ID), signs.count(SIGN_SGN))
    if field_name == "C":
        labels = _int_list(_require(doc, "labels"), '"labels"')
        if len(labels) != n:
            raise UsageError("inconsistent component: need len(labels) = n")
        return ComplexComponent(tuple(labels))
    raise UsageError(f'field must be "R" or "C", got {field_name!r}')


def point_to_doc(p: TemperedPoint) -> dict:
    doc = component_to_doc(p.component)
    doc["coords"] = [{"label": label, "t": fraction_to_str(t)} for label, t in p.coords]
    return doc


def point_from_doc(doc) -> TemperedPoint:
    comp = component_from_doc(doc)
    coords = []
    for entry in _require(doc, "coords", list):
        label = _require(entry, "label")
        if isinstance(label, bool) or not isinstance(label, (int, str)):
            raise UsageError(f"bad coordinate label {label!r}")
        if isinstance(label, str) and label not in (SIGN_ID, SIGN_SGN):
            raise UsageError(f"bad coordinate label {label!r}")
        coords.append((label, fraction_from_json(_require(entry, "t"))))
    return TemperedPoint(comp, tuple(coords))


def parameter_to_doc(p: LParameter) -> dict:
    summands = []
    for s in p.summands:
        if isinstance(s, ComplexCharacter):
            summands.append({"ell": s.ell, "t": fraction_to_str(s.t)})
        elif isinstance(s, RealCharacter):
            summands.append({"kind": "character", "eps": s.eps, "t": fraction_to_str(s.t)})
        else:
            summands.append({"kind": "discrete", "ell": s.ell, "t": fraction_to_str(s.t)})
    return {"side": p.side, "summands": summands}


def parameter_from_doc(doc) -> LParameter:
    side = _require(doc, "side", str)
    entries = _require(doc, "summands", list)
    summands = []
    if side == REAL:
        for entry in entries:
            kind = _require(entry, "kind", str)
            t = fraction_from_json(_require(entry, "t"))
            if kind == "character":
                summands.append(RealCharacter(_require(entry, "eps", int), t))
            elif kind == "discrete":
                summands.append(RealDiscreteSummand(_require(entry, "ell", int), t))
            else:
                raise UsageError(f'summand kind must be "character" or "discrete", got {kind!r}')
    elif side == COMPLEX:
        for entry in entries:
            summands.append(
                ComplexCharacter(
                    _require(entry, "ell", int), fraction_from_json(_require(entry, "t"))
                )
            )
    else:
        raise UsageError(f'side must be "R" or "C", got {side!r}')
    if not summands:
        raise UsageError("a parameter needs at least one summand")
    return LParameter(side, tuple(summands))


def kclass_to_doc(x: KClass) -> dict:
    return {
        "degree": x.degree,
        "terms": [{"gen": component_to_doc(g), "coeff": c} for g, c in x.terms],
    }


def kclass_from_doc(doc) -> KClass:
    degree = _require(doc, "degree", int)
    if isinstance(degree, bool) or degree not in (0, 1):
        raise UsageError(f"degree must be 0 or 1, got {degree!r}")
    terms = []
    for entry in _require(doc, "terms", list):
        gen = component_from_doc(_require(entry, "gen"))
        coeff = _require(entry, "coeff", int)
        if isinstance(coeff, bool):
            raise UsageError("coefficients must be integers")
        terms.append((gen, coeff))
    return KClass(degree, tuple(terms))


def repring_to_doc(x: RepRingElement) -> dict:
    return {
        "ring": x.ring,
        "coeffs": [{"label": label, "coeff": coeff} for label, coeff in x.coeffs],
    }


def repring_from_doc(doc) -> RepRingElement:
    ring = _require(doc, "ring", str)
    coeffs = []
    for entry in _require(doc, "coeffs", list):
        label = _require(entry, "label")
        coeff = _require(entry, "coeff", int)
        if isinstance(coeff, bool):
            raise UsageError("coefficients must be integers")
        coeffs.append((label, coeff))
    try:
        return RepRingElement(ring, tuple(coeffs))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def kgroup_to_doc(group: GradedKGroup, degrees=(0, 1)) -> dict:
    out = {
        "field": group.field,
        "n": group.n,
        "max_label": group.max_label,
        "degrees": {},
    }
    for j in degrees:
        out["degrees"][str(j)] = {
            "rank": group.rank(j),
            "schema": group.schema(j),
            "generators": [component_to_doc(c) for c in group.generators(j)],
        }
    return out


def render(doc: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "table":
        return _render_table(doc)
    raise UsageError(f"unknown format {fmt!r}")


def _component_line(doc: dict) -> str:
    if doc.get("field") == "R":
        return f"q={doc['q']} discrete={doc['discrete']} signs={doc['signs']}"
    return f"labels={doc['labels']}"


def _render_table(doc: dict) -> str:
    lines = []
    if "components" in doc:
        lines.append(f"field={doc['field']} n={doc['n']} max_label={doc['max_label']} count={doc['count']}")
        lines.extend(_component_line(c) for c in doc["components"])
    elif "degrees" in doc:
        lines.append(f"field={doc['field']} n={doc['n']} max_label={doc['max_label']}")
        for j in sorted(doc["degrees"]):
            info = doc["degrees"][j]
            lines.append(f"K^{j}  rank {info['rank']}  ({info['schema']})")
            lines.extend("  " + _component_line(c) for c in info["generators"])
    elif "coords" in doc:
        lines.append(f"component: field={doc['field']} " + _component_line(doc))
        for entry in doc["coords"]:
            lines.append(f"  label={entry['label']} t={entry['t']}")
    elif "summands" in doc:
        lines.append(f"side={doc['side']}")
        for entry in doc["summands"]:
            parts = [f"{k}={entry[k]}" for k in ("kind", "eps", "ell", "t") if k in entry]
            lines.append("  " + " ".join(parts))
    elif "terms" in doc:
        lines.append(f"degree={doc['degree']}")
        if not doc["terms"]:
            lines.append("  0")
        for entry in doc["terms"]:
            lines.append(f"  {entry['coeff']:+d} * [{_component_line(entry['gen'])}]")
    elif "coeffs" in doc:
        lines.append(f"ring={doc['ring']}")
        if not doc["coeffs"]:
            lines.append("  0")
        for entry in doc["coeffs"]:
            lines.append(f"  {entry['coeff']:+d} * [{entry['label']}]")
    else:
        lines.extend(f"{k}={doc[k]}" for k in sorted(doc))
    return "\n".join(lines)
