"""Tests for CLI output encoders."""

import csv
import io
from fractions import Fraction

from slope_calc.rendering import SLOPE_COLUMNS, render_csv, render_json, render_table, render_text, slope_row_cells

ROW = {
    "slope": [1, 1],
    "norm": {"value": "2", "kind": "Exact"},
    "singular_genus": {"lower": 2, "upper": 2, "exact": 2},
    "genus_upper": 2,
    "norm_not_realized_by_singular_genus": True,
}
LOWER_BOUND_ROW = {
    "slope": [1, 0],
    "norm": {"value": "1", "kind": "LowerBound"},
    "singular_genus": None,
    "genus_upper": None,
    "norm_not_realized_by_singular_genus": False,
    "errors": {"singular_genus": "[positive-norm] no bound"},
}
VERDICT = {
    "subject": "StableExtendableSubgroup",
    "conclusion": "IndexAtLeast",
    "index": 2,
    "justification": {"tag": "value-set-index", "parameters": {}},
}


def test_render_json_is_sorted_and_exact():
    text = render_json({"b": Fraction(1, 3), "a": [1, 2]})

    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": "1/3"\n}\n'


def test_slope_row_cells():
    assert slope_row_cells(ROW) == ["1/1", "2", "Exact", "2", "2", "2", "2", "true", ""]
    assert slope_row_cells(LOWER_BOUND_ROW) == [
        "1/0",
        "1",
        "LowerBound",
        "",
        "",
        "",
        "",
        "false",
        "singular_genus: [positive-norm] no bound",
    ]


def test_render_csv_has_header_and_verdict_row():
    rows = list(csv.reader(io.StringIO(render_csv([ROW, LOWER_BOUND_ROW], VERDICT))))

    assert rows[0] == list(SLOPE_COLUMNS)
    assert len(rows) == 4
    assert rows[-1][0] == "index_lower_bound"
    assert rows[-1][1] == "StableExtendableSubgroup: IndexAtLeast(2) [value-set-index]"
    assert all(len(row) == len(SLOPE_COLUMNS) for row in rows)


def test_render_csv_without_verdict():
    rows = list(csv.reader(io.StringIO(render_csv([ROW]))))
    assert len(rows) == 2


def test_render_table_drops_empty_columns():
    header = render_table([ROW]).splitlines()[0].split()

    assert "errors" not in header
    assert header[0] == "slope"


def test_render_text_lists_verdicts_first():
    lines = render_text({"verdicts": [VERDICT], "errors": {"finiteness_from_norm": "[plumbing-twist] no"}}).splitlines()

    assert lines[0] == "StableExtendableSubgroup: IndexAtLeast(2) [value-set-index]"
    assert "errors.finiteness_from_norm: [plumbing-twist] no" in lines
    assert "verdicts[0].index: 2" in lines
