import pytest

from app.enumeration import (
    RowKind, TableRow, infinity_column, min_n3, reproduce_table1, scan_region, table_to_csv, table_to_markdown,
    type_a_table, verdicts_to_csv,
)
from app.typeclass import INF, Triple, VerdictType, classify
from app.utils.errors import InputError


@pytest.mark.parametrize("n1, n2, expected", [(10, 15, 16), (13, 13, 40), (10, 25, 113), (11, 12, 14), (11, 17, 49)])
def test_min_n3_matches_the_appendix(n1, n2, expected):
    row = min_n3(n1, n2)
    assert row.kind == RowKind.FINITE
    assert row.min_n3 == expected


def test_min_n3_bisection_is_consistent():
    row = min_n3(12, 16)
    if row.kind == RowKind.FINITE:
        m = row.min_n3
        assert classify(Triple.of(12, 16, m)).type == VerdictType.A
        assert classify(Triple.of(12, 16, m - 1)).type == VerdictType.B


def test_min_n3_none_in_the_type_B_regime():
    row = min_n3(14, 14)
    assert row.kind == RowKind.NONE
    assert classify(Triple.of(14, 14, INF)).type == VerdictType.B


def test_min_n3_all_from_n2():
    row = min_n3(10, 12)
    assert row.kind == RowKind.ALL_FROM_N2
    assert row.min_n3 == 12


def test_min_n3_rejects_unordered_pairs():
    with pytest.raises(InputError):
        min_n3(12, 11)


def test_type_a_table_for_n1_10():
    rows = type_a_table((10, 10))
    finite = {r.n2: r for r in rows if r.n2 != INF}
    for n2 in range(10, 15):
        assert finite[n2].kind == RowKind.ALL_FROM_N2
    assert finite[15].min_n3 == 16
    assert rows[-1].n2 == INF
    assert rows[-2].kind == RowKind.NONE


def test_type_a_table_bad_range():
    with pytest.raises(InputError):
        type_a_table((12, 10))


def test_scan_small_cube_is_type_A_except_the_flat_triple():
    verdicts = {v.triple.entries(): v.type for v in scan_region({"n1": (3, 9), "n2": (3, 9), "n3": (3, 9)})}
    # F(1, 1, 1) = 0, which is type B
    assert verdicts.pop((3, 3, 3)) == VerdictType.B
    assert verdicts
    assert all(t == VerdictType.A for t in verdicts.values())


def test_scan_large_entries_are_type_B():
    verdicts = list(scan_region({"n1": (14, 20), "n2": (14, 20), "n3": (14, 20)}))
    assert all(v.type == VerdictType.B for v in verdicts)


def test_pruned_and_exhaustive_scans_agree():
    bounds = {"n1": (9, 11), "n2": (9, 18), "n3": (9, 40)}
    pruned = {v.triple: v.type for v in scan_region(bounds)}
    full = {v.triple: v.type for v in scan_region(bounds, prune=False)}
    assert pruned == full


def test_scan_emits_each_verdict():
    seen = []
    out = list(scan_region({"n1": (3, 4), "n2": (3, 4), "n3": (3, 5)}, emit=seen.append))
    assert seen == out
    assert [v.triple.entries() for v in out][:2] == [(3, 3, 3), (3, 3, 4)]


def test_scan_bounds_are_validated():
    with pytest.raises(InputError):
        list(scan_region({"n1": (2, 5), "n2": (3, 5), "n3": (3, 5)}))


def test_csv_has_the_documented_columns():
    text = verdicts_to_csv(scan_region({"n1": (3, 3), "n2": (3, 3), "n3": (10, 10)}))
    header, row = text.strip().splitlines()
    assert header == "n1,n2,n3,F_lo,F_hi,type"
    assert row.startswith("3,3,10,") and row.endswith(",A")


def _sample_rows():
    return [
        TableRow(n1=3, n2=3, kind=RowKind.ALL_FROM_N2, min_n3=3),
        TableRow(n1=3, n2=INF, kind=RowKind.ALL_FROM_N2, min_n3=INF),
        TableRow(n1=4, n2=4, kind=RowKind.FINITE, min_n3=7),
        TableRow(n1=4, n2=5, kind=RowKind.NONE),
        TableRow(n1=4, n2=INF, kind=RowKind.NONE),
    ]


def test_markdown_collapses_blanket_rows():
    lines = table_to_markdown(_sample_rows()).splitlines()
    assert lines[2] == "| n1 < 4 | n2 ≥ n1 | n3 ≥ n2 |"
    assert lines[3] == "| n1 = 4 | n2 = 4 | n3 ≥ 7 |"
    assert len(lines) == 4


def test_infinity_column_is_reported_separately():
    assert infinity_column(_sample_rows()) == [
        {"n1": "3", "type_A": True, "min_n3": "inf"},
        {"n1": "4", "type_A": False, "min_n3": None},
    ]
    assert table_to_csv(_sample_rows()).splitlines()[2] == "3,inf,all_from_n2,inf"


def test_table1_types():
    rows = reproduce_table1()
    assert len(rows) == 10
    assert all(r.type == r.printed_type for r in rows)


@pytest.mark.slow
def test_pruned_scan_matches_exhaustive_up_to_30():
    bounds = {"n1": (3, 30), "n2": (3, 30), "n3": (3, 30)}
    pruned = {v.triple: v.type for v in scan_region(bounds)}
    full = {v.triple: v.type for v in scan_region(bounds, prune=False)}
    assert pruned == full


def _monotonicity_violations(types: dict, top: int) -> list[str]:
    """Type A must survive lowering n1 or n2 and raising n3 (up to and including n3 = inf)."""
    bad = []
    at_infinity = {}
    for (n1, n2, n3), t in types.items():
        if t != VerdictType.A:
            continue
        neighbors = [(n1, n2, n3 + 1)]
        if n1 > 3:
            neighbors.append((n1 - 1, n2, n3))
        if n2 > n1:
            neighbors.append((n1, n2 - 1, n3))
        for nb in neighbors:
            if nb[2] > top:
                continue
            if types[nb] != VerdictType.A:
                bad.append(f"{(n1, n2, n3)} is A but {nb} is {types[nb].value}")
        if (n1, n2) not in at_infinity:
            at_infinity[(n1, n2)] = classify(Triple.of(n1, n2, INF)).type
        if at_infinity[(n1, n2)] != VerdictType.A:
            bad.append(f"{(n1, n2, n3)} is A but {(n1, n2, INF)} is not")
    return bad


def test_type_a_survives_the_improving_moves():
    top = 24
    types = {v.triple.entries(): v.type
             for v in scan_region({"n1": (3, top), "n2": (3, top), "n3": (3, top)}, prune=False)}
    assert _monotonicity_violations(types, top) == []
    assert types[(9, 15, 15)] == VerdictType.A and types[(10, 15, 15)] == VerdictType.B


@pytest.mark.slow
def test_type_a_is_monotone_over_the_whole_cube():
    top = 120
    types = {v.triple.entries(): v.type
             for v in scan_region({"n1": (3, top), "n2": (3, top), "n3": (3, top)}, prune=False)}
    assert _monotonicity_violations(types, top) == []


APPENDIX = {
    11: {11: 12, 12: 14, 13: 16, 14: 19, 15: 23, 16: 31, 17: 49},
    12: {12: 17, 13: 22, 14: 33},
    13: {13: 40},
}


@pytest.mark.parametrize("n1", sorted(APPENDIX))
def test_type_a_table_matches_the_appendix(n1):
    rows = [r for r in type_a_table((n1, n1)) if r.n2 != INF]
    found = {r.n2: r.min_n3 for r in rows if r.kind != RowKind.NONE}
    assert found == APPENDIX[n1]
    assert rows[-1].kind == RowKind.NONE
