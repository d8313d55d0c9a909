"""Result documents and their text / JSON renderings.

The JSON form never contains floats: rationals are ``{"num", "den"}``
decimal strings and polyhedron coefficients are decimal strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import AmbientRing, MonomialIdeal, VariablePrime, format_ideal
from .decomposition import Decomposition
from .invariants import WaldschmidtReport
from .polyhedra import HPolyhedron, PolyhedronStats, VPolyhedron


@dataclass(frozen=True)
class PolyhedronResult:
    h: HPolyhedron
    v: VPolyhedron
    stats: PolyhedronStats


@dataclass
class OutputDocument:
    command: str
    ring: AmbientRing
    input: MonomialIdeal
    arguments: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)
    result: Any = None


def rational_json(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def ideal_json(ideal: MonomialIdeal) -> list:
    return [list(v) for v in ideal.exponents]


def prime_json(p: VariablePrime) -> list:
    return list(p.variables)


def polyhedron_json(res: PolyhedronResult) -> dict:
    return {
        "inequalities": [[str(b)] + [str(x) for x in a] for a, b in res.h.inequalities],
        "vertices": [[rational_json(x) for x in v] for v in res.v.vertices],
        "rays": [[str(x) for x in r] for r in res.v.rays],
        "lineality": [[str(x) for x in r] for r in res.v.lineality],
        "stats": res.stats.as_dict(),
    }


def result_json(value) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational_json(value)
    if isinstance(value, MonomialIdeal):
        return ideal_json(value)
    if isinstance(value, VariablePrime):
        return prime_json(value)
    if isinstance(value, Decomposition):
        return [
            {"radical": prime_json(c.radical), "component": ideal_json(c.ideal)}
            for c in value
        ]
    if isinstance(value, PolyhedronResult):
        return polyhedron_json(value)
    if isinstance(value, WaldschmidtReport):
        out = {"value": rational_json(value.value), "mode": value.mode.value}
        if value.sample_size is not None:
            out["sample_size"] = value.sample_size
        if value.witness is not None:
            out["witness"] = [rational_json(x) for x in value.witness]
        return out
    if isinstance(value, (list, tuple)):
        return [result_json(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def document_json(doc: OutputDocument) -> dict:
    return {
        "command": doc.command,
        "ring": list(doc.ring.variables),
        "input": ideal_json(doc.input),
        "arguments": doc.arguments,
        "options": doc.options,
        "result": result_json(doc.result),
    }


def _format_ineq(a, b, ring: AmbientRing) -> str:
    terms = []
    for name, c in zip(ring.variables, a):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        terms.append((sign, body))
    if not terms:
        return f"0 >= {b}"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return f"{text} >= {b}"


def result_text(value, ring: AmbientRing) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, MonomialIdeal):
        return format_ideal(value)
    if isinstance(value, VariablePrime):
        return str(value)
    if isinstance(value, Decomposition):
        return "\n".join(f"{format_ideal(c.ideal)}  radical {c.radical}" for c in value)
    if isinstance(value, PolyhedronResult):
        s = value.stats
        lines = [
            f"ambient dimension => {s.ambient_dim}",
            f"dimension of lineality space => {s.lineality_dim}",
            f"dimension of polyhedron => {s.dim}",
            f"number of facets => {s.facets}",
            f"number of rays => {s.rays}",
            f"number of vertices => {s.vertices}",
            "inequalities:",
        ]
        lines += ["  " + _format_ineq(a, b, ring) for a, b in value.h.inequalities]
        return "\n".join(lines)
    if isinstance(value, WaldschmidtReport):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, Fraction) for v in value):
            return ", ".join(str(v) for v in value)
        return "\n".join(result_text(v, ring) for v in value)
    raise TypeError(f"cannot render {type(value).__name__}")


def emit_document(doc: OutputDocument, fmt: str = "text") -> bytes:
    """Render ``doc``; the JSON form is compact, key order fixed, newline-terminated."""
    if fmt == "json":
        text = json.dumps(document_json(doc), separators=(",", ":"), ensure_ascii=True)
    elif fmt == "text":
        text = result_text(doc.result, doc.ring)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return (text + "\n").encode("utf-8")
