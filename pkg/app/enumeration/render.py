# app/enumeration/render.py
import csv
import io
from itertools import groupby
from typing import Iterable

from app.enumeration.schemas import RowKind, Table1Row, TableRow
from app.typeclass.schemas import INF, TypeVerdict, n_label

CSV_COLUMNS = ["n1", "n2", "n3", "F_lo", "F_hi", "type"]


def verdicts_to_csv(verdicts: Iterable[TypeVerdict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for v in verdicts:
        F = v.F_enclosure.to_dict() if v.F_enclosure is not None else {"lo": "", "hi": ""}
        writer.writerow([n_label(v.triple.n1), n_label(v.triple.n2), n_label(v.triple.n3),
                         F["lo"], F["hi"], v.type.value])
    return buffer.getvalue()


def verdicts_to_json(verdicts: Iterable[TypeVerdict]) -> list[dict]:
    return [v.to_dict() for v in verdicts]


def verdicts_to_markdown(verdicts: Iterable[TypeVerdict]) -> str:
    lines = ["| (n1, n2, n3) | F | type |", "|---|---|---|"]
    for v in verdicts:
        F = v.F_mid_text() or "(implied)"
        lines.append(f"| {v.triple.label()} | {F} | {v.type.value} |")
    return "\n".join(lines) + "\n"


def table1_to_markdown(rows: Iterable[Table1Row]) -> str:
    lines = ["| (n1, n2, n3) | F | type | printed F | printed type |", "|---|---|---|---|---|"]
    for row in rows:
        lines.append(f"| {row.triple.label()} | {row.F_text} | {row.type.value} | {row.printed_F} "
                     f"| {row.printed_type.value} |")
    return "\n".join(lines) + "\n"


def _blanket(rows: list[TableRow]) -> bool:
    """Every finite row and the n2 = inf column say n3 >= n2."""
    return bool(rows) and all(r.kind == RowKind.ALL_FROM_N2 for r in rows)


def _n1_rows(n1, rows: list[TableRow]) -> list[tuple[str, str, str]]:
    out = []
    finite = [r for r in rows if not r.is_infinity_column and r.kind != RowKind.NONE]
    for all_from, group in groupby(finite, key=lambda r: r.kind == RowKind.ALL_FROM_N2):
        group = list(group)
        if all_from:
            first, last = group[0].n2, group[-1].n2
            n2 = f"n2 = {first}" if first == last else f"{first} ≤ n2 ≤ {last}"
            out.append((f"n1 = {n1}", n2, "n3 ≥ n2"))
        else:
            out.extend((f"n1 = {n1}", f"n2 = {r.n2}", f"n3 ≥ {r.min_n3}") for r in group)
    return out


def table_to_markdown(rows: Iterable[TableRow]) -> str:
    """
    Type A table in the appendix layout. Leading n1 values whose rows are all
    "n3 >= n2" (including the n2 = inf column) collapse to one "n1 < k" row.
    """
    by_n1 = [(n1, list(group)) for n1, group in groupby(rows, key=lambda r: r.n1)]
    lines = ["| n1 | n2 | n3 |", "|---|---|---|"]
    lead = 0
    while lead < len(by_n1) and _blanket(by_n1[lead][1]):
        lead += 1
    if lead:
        start, stop = by_n1[0][0], by_n1[lead - 1][0]
        label = f"n1 < {stop + 1}" if start == 3 else f"{start} ≤ n1 ≤ {stop}"
        lines.append(f"| {label} | n2 ≥ n1 | n3 ≥ n2 |")
    for n1, group in by_n1[lead:]:
        lines.extend(f"| {a} | {b} | {c} |" for a, b, c in _n1_rows(n1, group))
    return "\n".join(lines) + "\n"


def infinity_column(rows: Iterable[TableRow]) -> list[dict]:
    """The n2 = inf entries, reported on their own."""
    return [{"n1": n_label(r.n1), "type_A": r.kind != RowKind.NONE,
             "min_n3": None if r.min_n3 is None else n_label(r.min_n3)}
            for r in rows if r.n2 == INF]


def table_to_csv(rows: Iterable[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n1", "n2", "kind", "min_n3"])
    for r in rows:
        writer.writerow([n_label(r.n1), n_label(r.n2), r.kind.value,
                         "" if r.min_n3 is None else n_label(r.min_n3)])
    return buffer.getvalue()
