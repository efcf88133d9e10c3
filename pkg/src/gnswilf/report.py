"""Report rows for single semigroups and their CSV / JSON-lines serialization.

Rows are plain dicts with a fixed field order.  Output is byte-stable: the
field order, the canonical hole order and the number formatting never depend
on anything but the input.
"""

from __future__ import annotations

import csv
import io
import json
from typing import IO, Iterable, Sequence

from .gns import Gns, classify, invariants
from .orders import MonomialOrder
from .wilf import extended_wilf, generalized_wilf

BASE_FIELDS = (
    "dim", "genus", "holes", "e", "n", "c", "m",
    "frobenius", "is_symmetric", "is_pseudo_symmetric", "is_irreducible",
    "is_ordinary", "is_monomial", "has_minimal_multiplicity",
    "gwc_lhs", "gwc_rhs", "gwc_slack", "gwc_holds",
)
FORMATS = ("csv", "json-lines")


def ewc_fields(order: MonomialOrder) -> tuple[str, ...]:
    p = f"ewc_{order.name}"
    return (f"{p}_lhs", f"{p}_rhs", f"{p}_slack", f"{p}_holds")


def fields_for(orders: Sequence[MonomialOrder]) -> tuple[str, ...]:
    out = BASE_FIELDS
    for o in orders:
        out += ewc_fields(o)
    return out


def report_row(S: Gns, orders: Sequence[MonomialOrder] = (), strict: bool = False) -> dict:
    inv = invariants(S)
    cls = classify(S)
    gwc = generalized_wilf(S)
    row = {
        "dim": S.dim,
        "genus": S.genus,
        "holes": [list(h) for h in S.holes],
        "e": inv.e, "n": inv.n, "c": inv.c, "m": inv.m,
        "frobenius": list(cls.frobenius_element) if cls.frobenius_element is not None else None,
        "is_symmetric": cls.is_symmetric,
        "is_pseudo_symmetric": cls.is_pseudo_symmetric,
        "is_irreducible": cls.is_irreducible,
        "is_ordinary": cls.is_ordinary,
        "is_monomial": cls.is_monomial,
        "has_minimal_multiplicity": cls.has_minimal_multiplicity,
        "gwc_lhs": gwc.lhs, "gwc_rhs": gwc.rhs, "gwc_slack": gwc.slack, "gwc_holds": gwc.holds,
    }
    for o in orders:
        r = extended_wilf(S, o, strict=strict)
        lhs, rhs, slack, holds = ewc_fields(o)
        row.update({lhs: r.lhs, rhs: r.rhs, slack: r.slack, holds: r.holds})
    return row


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def emit_report(rows: Iterable[dict], fmt: str, dest: IO[str],
                fields: Sequence[str] = BASE_FIELDS) -> int:
    """Write ``rows`` to ``dest``; returns the number of rows written.

    CSV always starts with the header line, so an empty input gives a
    header-only file.  JSON lines write one compact object per row with keys
    in ``fields`` order.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    count = 0
    if fmt == "csv":
        w = csv.writer(dest, lineterminator="\n")
        w.writerow(fields)
        for row in rows:
            w.writerow([_csv_cell(row[f]) for f in fields])
            count += 1
    else:
        for row in rows:
            dest.write(json.dumps({f: row[f] for f in fields}, separators=(",", ":")) + "\n")
            count += 1
    return count


def render_report(rows: Iterable[dict], fmt: str, fields: Sequence[str] = BASE_FIELDS) -> str:
    buf = io.StringIO()
    emit_report(rows, fmt, buf, fields)
    return buf.getvalue()
