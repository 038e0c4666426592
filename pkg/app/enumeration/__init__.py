from app.enumeration.render import (
    infinity_column, table1_to_markdown, table_to_csv, table_to_markdown, verdicts_to_csv, verdicts_to_json,
    verdicts_to_markdown,
)
from app.enumeration.schemas import RowKind, ScanBounds, Table1Row, TableRow
from app.enumeration.tables import TABLE1, min_n3, reproduce_table1, scan_region, type_a_table
