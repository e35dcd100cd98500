"""CSV and JSON encodings for member lists, operation tables and reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

import numpy as np

from .analysis import OpTable, SubclassReport, class_axis, op_table_tiles
from .config import ValidationError
from .truthtable import TruthTable, from_hex

DECIMAL_MAX_N = 5


def format_rule(n: int, rule: int) -> int | str:
    """Decimal for n <= 5, lowercase MSB-first hex otherwise."""
    if n <= DECIMAL_MAX_N:
        return rule
    return TruthTable(n, rule).to_hex()


def parse_rule(n: int, value: int | str) -> int:
    if isinstance(value, int):
        if n > DECIMAL_MAX_N:
            raise ValidationError(f"decimal rule numbers are accepted only for n <= {DECIMAL_MAX_N}")
        return TruthTable(n, value).rule
    if n <= DECIMAL_MAX_N and value.isdigit():
        return TruthTable(n, int(value)).rule
    return from_hex(value, n).rule


def members_to_json(n: int, k: int, rules: Iterable[int]) -> str:
    return json.dumps({"n": n, "class": k, "members": [format_rule(n, r) for r in rules]})


def members_from_json(text: str) -> tuple[int, int, list[int]]:
    obj = json.loads(text)
    n = obj["n"]
    return n, obj["class"], [parse_rule(n, v) for v in obj["members"]]


def members_to_csv(n: int, k: int, rules: Iterable[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "member"])
    for r in rules:
        w.writerow([k, format_rule(n, r)])
    return buf.getvalue()


def members_from_csv(n: int, text: str) -> tuple[int | None, list[int]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["class", "member"]:
        raise ValidationError("member CSV must start with a class,member header")
    ks = {int(r[0]) for r in rows[1:]}
    if len(ks) > 1:
        raise ValidationError("member CSV mixes classes")
    return (ks.pop() if ks else None), [parse_rule(n, r[1]) for r in rows[1:]]


def write_table_csv(out, n: int, k: int, op: str, rows_per_tile: int = 256) -> None:
    """Stream a class operation table as CSV, one row tile at a time.

    Layout: op name in the top-left cell, the ascending axis along the first
    row and down the first column.
    """
    w = csv.writer(out, lineterminator="\n")
    w.writerow([op, *class_axis(n, k).tolist()])
    for rows, block in op_table_tiles(n, k, op, rows_per_tile):
        for label, cells in zip(rows.tolist(), block.tolist()):
            w.writerow([label, *cells])


def table_to_csv(table: OpTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([table.op, *table.axis.tolist()])
    for label, cells in zip(table.axis.tolist(), table.cells.tolist()):
        w.writerow([label, *cells])
    return buf.getvalue()


def table_from_csv(text: str, n: int, k: int) -> OpTable:
    rows = list(csv.reader(io.StringIO(text)))
    op = rows[0][0]
    axis = np.array([int(v) for v in rows[0][1:]], dtype=np.int64)
    labels = [int(r[0]) for r in rows[1:]]
    if labels != axis.tolist():
        raise ValidationError("row labels do not match the column axis")
    cells = np.array([[int(v) for v in r[1:]] for r in rows[1:]], dtype=np.int64)
    return OpTable(n, k, op, axis, cells.reshape(len(axis), len(axis)))


def table_to_json(table: OpTable) -> str:
    return json.dumps({
        "n": table.n, "class": table.k, "op": table.op,
        "axis": table.axis.tolist(), "cells": table.cells.tolist(),
    })


def table_from_json(text: str) -> OpTable:
    obj = json.loads(text)
    axis = np.array(obj["axis"], dtype=np.int64)
    cells = np.array(obj["cells"], dtype=np.int64).reshape(len(axis), len(axis))
    return OpTable(obj["n"], obj["class"], obj["op"], axis, cells)


def report_to_json(report: SubclassReport) -> str:
    n = report.n
    return json.dumps({
        "n": n, "class": report.k, "affine": format_rule(n, report.affine),
        "subclasses": [
            {"hd": d, "size": len(rows), "members": [format_rule(n, r) for r in rows]}
            for d, rows in report.rows.items()
        ],
    })


def report_to_csv(report: SubclassReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "hd", "member"])
    for d, rows in report.rows.items():
        for r in rows:
            w.writerow([report.k, d, format_rule(report.n, r)])
    return buf.getvalue()


def report_to_text(report: SubclassReport) -> str:
    n = report.n
    lines = [f"class {report.k} (affine {format_rule(n, report.affine)})"]
    for d, rows in report.rows.items():
        members = ",".join(str(format_rule(n, r)) for r in rows)
        lines.append(f"hd {d} [{len(rows)}]: {members}")
    return "\n".join(lines) + "\n"
