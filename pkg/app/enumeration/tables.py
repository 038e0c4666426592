# app/enumeration/tables.py
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional

from pydantic import ValidationError

from app.config.settings import JOBS, N2_CAP, PRECISION_CAP
from app.enumeration.schemas import RowKind, ScanBounds, Table1Row, TableRow, implied_verdict
from app.typeclass.classify import classify
from app.typeclass.schemas import INF, Triple, TypeVerdict, VerdictType
from app.utils.errors import IndeterminateError, InputError
from app.utils.logging import get_logger

log = get_logger("enumeration")

N3_CAP = 10 ** 7

# (triple, printed F, printed type)
TABLE1 = [
    ((3, 3, 10), "114.048", "A"),
    ((8, 14, 100), "1.47849", "A"),
    ((9, 14, 15), "0.174308", "A"),
    ((9, 14, 100), "0.708976", "A"),
    ((9, 15, 15), "0.114194", "A"),
    ((9, 50, 100), "0.0401673", "A"),
    ((14, 14, 14), "-0.0446055", "B"),
    ((15, 17, 30), "-0.0928291", "B"),
    ((20, 30, 50), "-0.0359106", "B"),
    ((100, 200, 4000), "-0.0000616233", "B"),
]


def _is_a(n1, n2, n3, precision_cap: int) -> bool:
    verdict = classify(Triple.of(n1, n2, n3), precision_cap=precision_cap)
    if verdict.type == VerdictType.INDETERMINATE:
        raise IndeterminateError(f"{verdict.triple.label()} is undecided at {verdict.precision_used} bits",
                                 code="INDETERMINATE",
                                 errors={"triple": verdict.triple.to_dict(), "precision_bits": verdict.precision_used})
    return verdict.type == VerdictType.A


def min_n3(n1, n2, n3_cap: int = N3_CAP, precision_cap: int = PRECISION_CAP) -> TableRow:
    """
    Smallest n3 >= n2 giving type A. {c : F > 0} is upward closed in c, so n3 = inf
    is probed first and the finite answer is bracketed by doubling then bisected.
    """
    if (n1 != INF and n1 < 3) or n1 > n2:
        raise InputError(f"need 3 <= n1 <= n2, got ({n1}, {n2})", code="INVALID_RANGE")
    evaluations = 1
    if not _is_a(n1, n2, INF, precision_cap):
        return TableRow(n1=n1, n2=n2, kind=RowKind.NONE, evaluations=evaluations)
    if n2 == INF:
        return TableRow(n1=n1, n2=n2, kind=RowKind.ALL_FROM_N2, min_n3=INF, evaluations=evaluations)

    evaluations += 1
    if _is_a(n1, n2, n2, precision_cap):
        return TableRow(n1=n1, n2=n2, kind=RowKind.ALL_FROM_N2, min_n3=n2, evaluations=evaluations)

    lo, hi = n2, 2 * n2  # type B at lo
    while True:
        if hi > n3_cap:
            raise IndeterminateError(f"minimal n3 for ({n1}, {n2}) exceeds the cap {n3_cap}",
                                     code="N3_CAP", errors={"n1": n1, "n2": n2, "n3_cap": n3_cap})
        evaluations += 1
        if _is_a(n1, n2, hi, precision_cap):
            break
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        evaluations += 1
        if _is_a(n1, n2, mid, precision_cap):
            hi = mid
        else:
            lo = mid
    return TableRow(n1=n1, n2=n2, kind=RowKind.FINITE, min_n3=hi, evaluations=evaluations)


def _rows_for_n1(n1: int, n2_max: int, n3_cap: int, precision_cap: int) -> list[TableRow]:
    # larger n2 can only lose type A, so the first NONE row ends the scan
    rows = []
    for n2 in range(n1, n2_max + 1):
        row = min_n3(n1, n2, n3_cap, precision_cap)
        rows.append(row)
        if row.kind == RowKind.NONE:
            break
    rows.append(min_n3(n1, INF, n3_cap, precision_cap))
    log.info("n1=%d: %d rows", n1, len(rows))
    return rows


def type_a_table(n1_range: tuple[int, int], n2_max: int = N2_CAP, n3_cap: int = N3_CAP,
                 precision_cap: int = PRECISION_CAP, jobs: int = JOBS) -> list[TableRow]:
    """Rows per (n1, n2) for n1 in the inclusive range, each n1 closed by its n2 = inf column."""
    lo, hi = n1_range
    if lo < 3 or lo > hi:
        raise InputError(f"n1 range {lo}..{hi} must satisfy 3 <= lo <= hi", code="INVALID_RANGE")
    if n2_max < hi:
        raise InputError(f"n2 cap {n2_max} is below n1 = {hi}", code="INVALID_RANGE")
    n1s = list(range(lo, hi + 1))
    if jobs > 1 and len(n1s) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_rows_for_n1, n1s, [n2_max] * len(n1s), [n3_cap] * len(n1s),
                                   [precision_cap] * len(n1s)))
    else:
        chunks = [_rows_for_n1(n1, n2_max, n3_cap, precision_cap) for n1 in n1s]
    return [row for chunk in chunks for row in chunk]


def reproduce_table1(precision_cap: int = PRECISION_CAP) -> list[Table1Row]:
    rows = []
    for entries, printed, printed_type in TABLE1:
        verdict = classify(Triple.of(*entries), precision_cap=precision_cap)
        row = Table1Row(triple=verdict.triple, F=verdict.F_enclosure, type=verdict.type,
                        printed_F=printed, printed_type=VerdictType(printed_type))
        if not row.matches:
            log.warning("%s: computed F %s (%s), printed %s (%s)", row.triple.label(), row.F_text,
                        row.type.value, printed, printed_type)
        rows.append(row)
    return rows


def scan_region(bounds: ScanBounds | dict, emit: Optional[Callable[[TypeVerdict], None]] = None,
                prune: bool = True, precision_cap: int = PRECISION_CAP) -> Iterator[TypeVerdict]:
    """
    Classify every ordered triple in the bounds. With pruning, the first type A
    n3 for a given (n1, n2) settles every larger n3 without evaluation.
    """
    if not isinstance(bounds, ScanBounds):
        try:
            bounds = ScanBounds(**bounds)
        except ValidationError as exc:
            raise InputError("; ".join(err["msg"] for err in exc.errors()), code="INVALID_RANGE")
    for n1 in range(bounds.n1[0], bounds.n1[1] + 1):
        for n2 in range(max(n1, bounds.n2[0]), bounds.n2[1] + 1):
            source = None
            for n3 in range(max(n2, bounds.n3[0]), bounds.n3[1] + 1):
                triple = Triple.of(n1, n2, n3)
                if source is not None:
                    verdict = implied_verdict(triple, source)
                else:
                    verdict = classify(triple, precision_cap=precision_cap)
                    if prune and verdict.type == VerdictType.A:
                        source = triple
                if emit is not None:
                    emit(verdict)
                yield verdict
