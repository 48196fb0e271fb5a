"""JSON encoding of instances.

Rationals are written as strings (``"3"``, ``"-7/2"``); on input plain JSON
integers are accepted too.  Floats are rejected so that nothing is rounded.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InputError
from .matroid import ExplicitMatroid, GraphicMatroid, Matroid, UniformMatroid
from .model import Area, UncertaintyMatroid, interval, point


def parse_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")


def format_rational(v: Fraction) -> str:
    return str(Fraction(v))


def parse_area(data: Any, where: str = "area") -> Area:
    if not isinstance(data, list) or not data:
        raise InputError(f"{where}: an area is a nonempty list of pieces")
    pieces = []
    for i, piece in enumerate(data):
        spot = f"{where}[{i}]"
        if not isinstance(piece, dict) or len(piece) != 1:
            raise InputError(f"{spot}: a piece is {{'point': R}} or {{'interval': {{...}}}}")
        if "point" in piece:
            pieces.append(point(parse_rational(piece["point"], f"{spot}.point")))
        elif "interval" in piece:
            body = piece["interval"]
            if not isinstance(body, dict):
                raise InputError(f"{spot}.interval: expected an object")
            for key in ("lo", "hi"):
                if body.get(key) is None:
                    raise InputError(f"{spot}.interval.{key}: missing or unbounded end")
            pieces.append(
                interval(
                    parse_rational(body["lo"], f"{spot}.interval.lo"),
                    parse_rational(body["hi"], f"{spot}.interval.hi"),
                    bool(body.get("lo_closed", True)),
                    bool(body.get("hi_closed", True)),
                )
            )
        else:
            raise InputError(f"{spot}: unknown piece kind {sorted(piece)}")
    try:
        return Area(pieces)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def area_to_json(a: Area) -> list[dict]:
    out = []
    for p in a.pieces:
        if p.is_point:
            out.append({"point": format_rational(p.lo)})
        else:
            out.append(
                {
                    "interval": {
                        "lo": format_rational(p.lo),
                        "hi": format_rational(p.hi),
                        "lo_closed": p.lo_closed,
                        "hi_closed": p.hi_closed,
                    }
                }
            )
    return out


def parse_matroid(data: Any) -> Matroid:
    if not isinstance(data, dict) or "type" not in data:
        raise InputError("matroid: expected an object with a 'type' field")
    kind = data["type"]
    try:
        if kind == "graphic":
            return GraphicMatroid(int(data["vertices"]), [tuple(e) for e in data["edges"]])
        if kind == "uniform":
            return UniformMatroid(int(data["n"]), int(data["rank"]))
        if kind == "bases":
            return ExplicitMatroid(int(data["n"]), data["bases"])
    except KeyError as exc:
        raise InputError(f"matroid: missing field {exc.args[0]!r} for type {kind!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise InputError(f"matroid: {exc}") from None
        raise InputError(f"matroid: malformed {kind!r} description ({exc})") from None
    raise InputError(f"matroid.type: unknown matroid type {kind!r}")


def matroid_to_json(m: Matroid) -> dict:
    if isinstance(m, GraphicMatroid):
        return {"type": "graphic", "vertices": m.vertices, "edges": [list(e) for e in m.edges]}
    if isinstance(m, UniformMatroid):
        return {"type": "uniform", "n": m.n, "rank": m.r}
    if isinstance(m, ExplicitMatroid):
        return {"type": "bases", "n": m.n, "bases": [sorted(b) for b in m.bases]}
    raise InputError(f"cannot serialize {type(m).__name__}")


def parse_instance(data: Any) -> UncertaintyMatroid:
    if not isinstance(data, dict):
        raise InputError("instance: expected a JSON object")
    for key in ("matroid", "areas"):
        if key not in data:
            raise InputError(f"instance: missing field {key!r}")
    m = parse_matroid(data["matroid"])
    raw_areas = data["areas"]
    if not isinstance(raw_areas, list) or len(raw_areas) != m.n:
        got = len(raw_areas) if isinstance(raw_areas, list) else type(raw_areas).__name__
        raise InputError(f"areas: expected {m.n} areas, got {got}")
    areas = [parse_area(a, f"areas[{i}]") for i, a in enumerate(raw_areas)]
    costs = None
    if data.get("costs") is not None:
        raw_costs = data["costs"]
        if not isinstance(raw_costs, list) or len(raw_costs) != m.n:
            got = len(raw_costs) if isinstance(raw_costs, list) else type(raw_costs).__name__
            raise InputError(f"costs: expected {m.n} costs, got {got}")
        costs = tuple(parse_rational(c, f"costs[{i}]") for i, c in enumerate(raw_costs))
    return UncertaintyMatroid(m, tuple(areas), costs)


def instance_to_json(u: UncertaintyMatroid) -> dict:
    out = {
        "matroid": matroid_to_json(u.matroid),
        "areas": [area_to_json(a) for a in u.areas],
    }
    if u.costs is not None:
        out["costs"] = [format_rational(c) for c in u.costs]
    return out


def load_instance(path: str | Path) -> UncertaintyMatroid:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read instance file {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None
    return parse_instance(data)


def save_instance(u: UncertaintyMatroid, path: str | Path) -> None:
    Path(path).write_text(json.dumps(instance_to_json(u), indent=1) + "\n")
