"""Text formats: polymake ``POINTS`` blocks and a lossless JSON encoding.

JSON schema (every document is an object with a ``"type"`` field):

``rational``  ``{"num": "<int>", "den": "<int>"}`` (strings, den > 0)
``vrep``      ``{"type": "vrep", "dim": d, "points": [[rational, ...], ...],
              "labels": [string | null, ...]}``
``hrep``      ``{"type": "hrep", "dim": d, "hyperplanes": [{"coeffs": [rational, ...],
              "rhs": rational, "sense": "<=" | ">=" | "=", "tag": string | null}, ...]}``
``poset``     ``{"type": "poset", "labels": [label, ...], "covers": [[i, j], ...],
              "rank": [int, ...]}`` where ``[i, j]`` means element i is covered by j
              and a label is a string, an integer, null, ``{"tuple": [label, ...]}``
              or ``{"set": [label, ...]}``
``report``    ``{"type": "report", "command": string, "params": {...},
              "checks": [{"name": string, "passed": bool, "detail": string}, ...],
              "counts": {...}, "seconds": number}``
"""
from __future__ import annotations

import json
from fractions import Fraction

from .polytope import HRep, Hyperplane, VRep
from .poset import FacePoset

__all__ = ["export_polymake", "parse_polymake", "sort_polymake", "export_json", "parse_json",
           "to_jsonable", "from_jsonable"]


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def export_polymake(v: VRep) -> str:
    """``POINTS`` header, then ``1 x_1 ... x_d`` per point, single spaces."""
    if len(v) == 0:
        raise ValueError("cannot export an empty point set")
    lines = ["POINTS"]
    for p in v.points:
        lines.append(" ".join(["1"] + [_fmt(x) for x in p]))
    return "\n".join(lines) + "\n"


def parse_polymake(text: str) -> list[tuple[Fraction, ...]]:
    """Rows of a ``POINTS`` block with the homogenizing coordinate removed."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != ["POINTS"]:
        raise ValueError("missing POINTS header")
    rows = []
    for toks in lines[1:]:
        vals = [Fraction(t) for t in toks]
        if not vals or vals[0] != 1:
            raise ValueError(f"row is not dehomogenized at 1: {' '.join(toks)}")
        rows.append(tuple(vals[1:]))
    return rows


def sort_polymake(text: str) -> str:
    """Same block with its point rows in numeric order, so two listings of one
    point set compare equal byte for byte."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "POINTS":
        raise ValueError("missing POINTS header")
    rows = sorted(lines[1:], key=lambda ln: [Fraction(t) for t in ln.split()])
    return "\n".join(["POINTS"] + rows) + "\n"


# -- JSON ---------------------------------------------------------------------

def _q(x):
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _unq(d):
    return Fraction(int(d["num"]), int(d["den"]))


def _label_out(x):
    if x is None or isinstance(x, (str, bool)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, tuple):
        return {"tuple": [_label_out(y) for y in x]}
    if isinstance(x, frozenset):
        return {"set": [_label_out(y) for y in sorted(x)]}
    raise TypeError(f"unsupported poset label {x!r}")


def _label_in(x):
    if isinstance(x, dict):
        if "tuple" in x:
            return tuple(_label_in(y) for y in x["tuple"])
        if "set" in x:
            return frozenset(_label_in(y) for y in x["set"])
        raise ValueError(f"bad label {x!r}")
    return x


def to_jsonable(obj) -> dict:
    from .report import RunReport

    if isinstance(obj, VRep):
        return {"type": "vrep", "dim": obj.dim,
                "points": [[_q(x) for x in p] for p in obj.points],
                "labels": list(obj.labels)}
    if isinstance(obj, HRep):
        return {"type": "hrep", "dim": obj.dim,
                "hyperplanes": [{"coeffs": [_q(a) for a in h.coeffs], "rhs": _q(h.rhs),
                                 "sense": h.sense, "tag": h.tag} for h in obj.hyperplanes]}
    if isinstance(obj, FacePoset):
        return {"type": "poset", "labels": [_label_out(x) for x in obj.labels],
                "covers": sorted([a, b] for a, b in obj.covers), "rank": list(obj.rank)}
    if isinstance(obj, RunReport):
        return {"type": "report", "command": obj.command, "params": obj.params,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                           for c in obj.checks],
                "counts": obj.counts, "seconds": obj.seconds}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_jsonable(d: dict):
    from .report import Check, RunReport

    kind = d.get("type")
    if kind == "vrep":
        return VRep(d["dim"], tuple(tuple(_unq(x) for x in p) for p in d["points"]),
                    tuple(d["labels"]))
    if kind == "hrep":
        return HRep(d["dim"], tuple(
            Hyperplane(tuple(_unq(a) for a in h["coeffs"]), _unq(h["rhs"]), h["sense"], h["tag"])
            for h in d["hyperplanes"]))
    if kind == "poset":
        return FacePoset([_label_in(x) for x in d["labels"]],
                         [tuple(c) for c in d["covers"]], d["rank"])
    if kind == "report":
        return RunReport(d["command"], d["params"],
                         [Check(c["name"], c["passed"], c["detail"]) for c in d["checks"]],
                         d["counts"], d["seconds"])
    raise ValueError(f"unknown document type {kind!r}")


def export_json(obj, indent: int | None = 1) -> str:
    return json.dumps(to_jsonable(obj), indent=indent, sort_keys=True)


def parse_json(text: str):
    return from_jsonable(json.loads(text))
