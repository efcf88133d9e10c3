"""JSON file formats for hole sets and monomial ideals."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import GnsError, InvalidPoint
from .gns import Gns, validate_hole_set
from .monomial import MonomialIdeal

PathLike = Union[str, Path]


class FormatError(GnsError):
    """A file that is not in the expected JSON shape."""


def _load(path: PathLike) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object")
    return data


def _points(raw, what: str) -> list[tuple[int, ...]]:
    if not isinstance(raw, list):
        raise FormatError(f"{what} must be a list")
    out = []
    for p in raw:
        if not isinstance(p, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in p):
            raise InvalidPoint(f"{what}: {p!r} is not a list of integers")
        out.append(tuple(p))
    return out


def _dim(data: dict, key: str) -> int:
    d = data.get(key)
    if isinstance(d, bool) or not isinstance(d, int):
        raise FormatError(f"missing or non-integer {key!r}")
    return d


def gns_to_json(S: Gns) -> dict:
    return {"dim": S.dim, "holes": [list(h) for h in S.holes]}


def gns_from_json(data: dict) -> Gns:
    return validate_hole_set(_dim(data, "dim"), _points(data.get("holes"), "holes"))


def dumps_gns(S: Gns) -> str:
    """One-line canonical JSON for ``S`` (holes in canonical order)."""
    return json.dumps(gns_to_json(S), separators=(",", ":"))


def read_gns(path: PathLike) -> Gns:
    return gns_from_json(_load(path))


def write_gns(S: Gns, path: PathLike) -> None:
    Path(path).write_text(dumps_gns(S) + "\n", encoding="utf-8")


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": I.vars, "generators": [list(g) for g in I.gens]}


def ideal_from_json(data: dict) -> MonomialIdeal:
    return MonomialIdeal(_dim(data, "vars"), tuple(_points(data.get("generators"), "generators")))


def read_ideal(path: PathLike) -> MonomialIdeal:
    return ideal_from_json(_load(path))


def write_ideal(I: MonomialIdeal, path: PathLike) -> None:
    Path(path).write_text(json.dumps(ideal_to_json(I), separators=(",", ":")) + "\n", encoding="utf-8")
