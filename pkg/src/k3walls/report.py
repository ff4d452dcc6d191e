"""Payloads and renderers for the command line interface.

Every command first builds a plain-JSON payload (dicts, lists, ints,
strings; rationals as {"num": n, "den": d} in lowest terms with positive
denominator).  The text and csv renderers are pure functions of that
payload, so re-rendering a parsed JSON file reproduces the direct text
output byte for byte.  Floats appear only where a display column asks
for them (the y column of path output) and in SVG geometry.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from io import StringIO
from typing import Optional

import csv

from .charge import Semicircle, VerticalLine
from .lattice import MukaiVector, SurfaceParams
from .walls import WallRecord, WallSearch

FORMAT_ENV_VAR = "K3WALLS_FORMAT"
FORMATS = ("text", "csv", "json", "svg")


def default_format() -> str:
    value = os.environ.get(FORMAT_ENV_VAR, "text").strip().lower()
    return value if value in FORMATS else "text"


@dataclass(frozen=True)
class ReportConfig:
    format: str = field(default_factory=default_format)
    degree_d: int = 1
    precision_digits: int = 6
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown output format {self.format!r}; pick one of {', '.join(FORMATS)}")
        if self.precision_digits < 1:
            raise ValueError("precision_digits must be positive")


@dataclass(frozen=True)
class WallTableRow:
    """One rendered wall-table line (kept for library users who want the
    columns without going through a payload)."""

    gamma: str
    a: str
    a_sq: str
    pairing: str
    wall: str
    wall_type: str


# ---------------------------------------------------------------------------
# payload pieces


def frac_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def frac_of_json(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def frac_str(q) -> str:
    q = frac_of_json(q) if isinstance(q, dict) else Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def curve_json(curve) -> Optional[dict]:
    if curve is None:
        return None
    if isinstance(curve, VerticalLine):
        return {"kind": "vertical_line", "x0": frac_json(curve.x0)}
    if isinstance(curve, Semicircle):
        return {
            "kind": "semicircle",
            "center": frac_json(curve.center_x),
            "radius_sq": frac_json(curve.radius_sq),
        }
    raise TypeError(f"unknown curve {curve!r}")


def record_json(rec: WallRecord) -> dict:
    return {
        "gamma": None if rec.gamma is None else frac_json(rec.gamma),
        "a": list(rec.a.as_tuple()),
        "a_sq": rec.a_sq,
        "pairing": rec.pairing_va,
        "curve": curve_json(rec.curve),
        "type": rec.wall_type,
    }


def walls_payload(search: WallSearch, p: SurfaceParams) -> dict:
    payload = {
        "surface": {"d": p.d},
        "vector": list(search.vector.as_tuple()),
        "walls": [record_json(rec) for rec in search.records],
        "complete": search.complete,
    }
    if search.mode == "transport":
        payload["m"] = search.m
        payload["source_vector"] = list(search.source_vector.as_tuple())
    return payload


def path_payload(
    search: WallSearch,
    x0: Fraction,
    hits: list[tuple[WallRecord, Fraction]],
    on_wall: list[Fraction],
    y_min: Fraction,
    p: SurfaceParams,
    precision: int,
) -> dict:
    return {
        "surface": {"d": p.d},
        "vector": list(search.vector.as_tuple()),
        "x0": frac_json(Fraction(x0)),
        "y_min": frac_json(Fraction(y_min)),
        "precision": precision,
        "hits": [
            {
                "gamma": None if rec.gamma is None else frac_json(rec.gamma),
                "a": list(rec.a.as_tuple()),
                "y_sq": frac_json(y_sq),
            }
            for rec, y_sq in hits
        ],
        "on_wall": [frac_json(x) for x in on_wall],
    }


def decompose_payload(
    vector: MukaiVector,
    rec: WallRecord,
    entries: list[dict],
    parts_max: int,
    total_space_dim: int,
    p: SurfaceParams,
) -> dict:
    return {
        "surface": {"d": p.d},
        "vector": list(vector.as_tuple()),
        "wall": record_json(rec),
        "parts_max": parts_max,
        "total_space_dim": total_space_dim,
        "decompositions": entries,
    }


# ---------------------------------------------------------------------------
# equation strings


def _expanded_circle(center, radius_sq) -> str:
    """x^2 + Bx + y^2 = C with B = -2*center, C = radius_sq - center^2."""
    e = frac_of_json(center)
    rho_sq = frac_of_json(radius_sq)
    b = -2 * e
    c = rho_sq - e * e
    if b == 0:
        lhs = "x^2 + y^2"
    else:
        coeff = frac_str(abs(b))
        term = f"{coeff}x" if abs(b).denominator == 1 else f"{coeff} x"
        lhs = f"x^2 {'+' if b > 0 else '-'} {term} + y^2"
    return f"{lhs} = {frac_str(c)}"


def _centered_circle(center, radius_sq) -> str:
    e = frac_of_json(center)
    if e == 0:
        lhs = "x^2 + y^2"
    else:
        lhs = f"(x {'-' if e > 0 else '+'} {frac_str(abs(e))})^2 + y^2"
    return f"{lhs} = {frac_str(frac_of_json(radius_sq))}"


def curve_equation(curve: Optional[dict], vector: list) -> str:
    """Render a curve the way the tables write it: expanded circles for
    positive-rank base vectors, centered ones for torsion."""
    if curve is None:
        return "-"
    if curve["kind"] == "vertical_line":
        return f"x = {frac_str(curve['x0'])}"
    if vector[0] != 0:
        return _expanded_circle(curve["center"], curve["radius_sq"])
    return _centered_circle(curve["center"], curve["radius_sq"])


def vector_str(components: list) -> str:
    return f"({components[0]}, {components[1]}, {components[2]})"


def _walls_title(payload: dict) -> str:
    vec = vector_str(payload["vector"])
    d = payload["surface"]["d"]
    if "m" in payload:
        src = vector_str(payload["source_vector"])
        return f"Walls transported by Phi_{payload['m']}: v = {src} -> v' = {vec} (d = {d})"
    walls = payload["walls"]
    if walls and all(w["type"] == "candidate" for w in walls):
        return f"Candidate walls for v = {vec} (d = {d})"
    r, c, s = payload["vector"]
    if r == 1 and c == 0 and s <= -1:
        return f"Walls for v = {vec} on S^[{1 - s}] (d = {d})"
    if walls:
        return f"Walls for v = {vec} (d = {d})"
    return f"Candidate walls for v = {vec} (d = {d})"


def _table(rows: list[tuple], header: tuple) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in (header, *rows):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _gamma_str(gamma) -> str:
    return "-" if gamma is None else frac_str(gamma)


# ---------------------------------------------------------------------------
# text renderers (pure functions of the payload)


def render_walls_text(payload: dict) -> str:
    header = ("gamma", "a", "a^2", "(v,a)", "wall", "type")
    rows = [
        (
            _gamma_str(w["gamma"]),
            vector_str(w["a"]),
            str(w["a_sq"]),
            str(w["pairing"]),
            curve_equation(w["curve"], payload["vector"]),
            w["type"],
        )
        for w in payload["walls"]
    ]
    body = _table(rows, header) if rows else "(no walls found)"
    return (
        f"{_walls_title(payload)}\n"
        f"{body}\n"
        f"complete: {'yes' if payload['complete'] else 'no'}\n"
    )


def render_path_text(payload: dict) -> str:
    vec = vector_str(payload["vector"])
    d = payload["surface"]["d"]
    x0 = frac_str(payload["x0"])
    y_min = frac_str(payload["y_min"])
    digits = payload["precision"]
    lines = [f"Crossings of the path x = {x0} for v = {vec} (d = {d}), y > {y_min}"]
    if payload["hits"]:
        rows = []
        for hit in payload["hits"]:
            y_sq = frac_of_json(hit["y_sq"])
            rows.append(
                (
                    _gamma_str(hit["gamma"]),
                    vector_str(hit["a"]),
                    frac_str(hit["y_sq"]),
                    f"{math.sqrt(float(y_sq)):.{digits}f}",
                )
            )
        lines.append(_table(rows, ("gamma", "a", "y^2", "y")))
    else:
        lines.append("(no crossings)")
    for x in payload["on_wall"]:
        lines.append(f"note: the path lies on the vertical wall x = {frac_str(x)}")
    return "\n".join(lines) + "\n"


def render_decompose_text(payload: dict) -> str:
    vec = vector_str(payload["vector"])
    d = payload["surface"]["d"]
    wall = payload["wall"]
    lines = [
        f"Wall gamma = {_gamma_str(wall['gamma'])} for v = {vec} (d = {d}): "
        f"a = {vector_str(wall['a'])}, a^2 = {wall['a_sq']}, (v,a) = {wall['pairing']}, type {wall['type']}",
        f"curve: {curve_equation(wall['curve'], payload['vector'])}",
        f"total space dimension: {payload['total_space_dim']}",
    ]
    if payload["decompositions"]:
        for i, entry in enumerate(payload["decompositions"], start=1):
            parts = " + ".join(vector_str(u) for u in entry["parts"])
            lines.append(f"decomposition {i}: {parts}")
            if entry.get("error"):
                lines.append(f"  not effective: {entry['error']}")
            else:
                lines.append(
                    f"  moduli dims: {entry['moduli_dims']}; fiber dims: {entry['fiber_dims']}; "
                    f"stratum dim: {entry['stratum_dim']}"
                )
    else:
        lines.append(f"no decompositions with at most {payload['parts_max']} parts")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# csv renderers


def _csv(rows: list[list[str]]) -> str:
    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_walls_csv(payload: dict) -> str:
    rows = [["gamma", "a_r", "a_c", "a_s", "a_sq", "pairing", "curve_kind", "center_x", "radius_sq", "x0", "type"]]
    for w in payload["walls"]:
        curve = w["curve"]
        kind = "" if curve is None else curve["kind"]
        center = frac_str(curve["center"]) if curve and curve["kind"] == "semicircle" else ""
        radius = frac_str(curve["radius_sq"]) if curve and curve["kind"] == "semicircle" else ""
        x0 = frac_str(curve["x0"]) if curve and curve["kind"] == "vertical_line" else ""
        rows.append(
            [
                _gamma_str(w["gamma"]),
                str(w["a"][0]),
                str(w["a"][1]),
                str(w["a"][2]),
                str(w["a_sq"]),
                str(w["pairing"]),
                kind,
                center,
                radius,
                x0,
                w["type"],
            ]
        )
    return _csv(rows)


def render_path_csv(payload: dict) -> str:
    digits = payload["precision"]
    rows = [["gamma", "a_r", "a_c", "a_s", "y_sq", "y"]]
    for hit in payload["hits"]:
        y_sq = frac_of_json(hit["y_sq"])
        rows.append(
            [
                _gamma_str(hit["gamma"]),
                str(hit["a"][0]),
                str(hit["a"][1]),
                str(hit["a"][2]),
                frac_str(hit["y_sq"]),
                f"{math.sqrt(float(y_sq)):.{digits}f}",
            ]
        )
    return _csv(rows)


def render_decompose_csv(payload: dict) -> str:
    rows = [["decomposition", "parts", "moduli_dims", "fiber_dims", "stratum_dim", "error"]]
    for i, entry in enumerate(payload["decompositions"], start=1):
        parts = " + ".join(vector_str(u) for u in entry["parts"])
        if entry.get("error"):
            rows.append([str(i), parts, "", "", "", entry["error"]])
        else:
            rows.append(
                [
                    str(i),
                    parts,
                    " ".join(str(x) for x in entry["moduli_dims"]),
                    " ".join(str(x) for x in entry["fiber_dims"]),
                    str(entry["stratum_dim"]),
                    "",
                ]
            )
    return _csv(rows)


# ---------------------------------------------------------------------------
# dispatch


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


_TEXT = {"walls": render_walls_text, "path": render_path_text, "decompose": render_decompose_text}
_CSV = {"walls": render_walls_csv, "path": render_path_csv, "decompose": render_decompose_csv}


def render(kind: str, payload: dict, fmt: str) -> str:
    """kind is "walls", "path" or "decompose" (transport renders as walls)."""
    if fmt == "text":
        return _TEXT[kind](payload)
    if fmt == "csv":
        return _CSV[kind](payload)
    if fmt == "json":
        return render_json(payload)
    raise ValueError(f"format {fmt!r} is not valid for {kind} output")
