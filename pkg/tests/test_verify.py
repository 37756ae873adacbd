import json

import pytest

from omegaminus import verify
from omegaminus.verify import RowError, emit_report, report_table, verify_row


def test_empty_report():
    doc = json.loads(emit_report([]))
    assert doc["schema_version"] == verify.SCHEMA_VERSION
    assert doc["rows"] == []


def test_row_constraints_rejected():
    with pytest.raises(RowError):
        verify_row(1, 4, 2)
    with pytest.raises(RowError):
        verify_row(3, 5, 3)
    with pytest.raises(RowError):
        verify_row(12)


def test_report_is_byte_identical(row_reports):
    first = emit_report([row_reports(1, 5, 2)])
    again = emit_report([verify_row(1, 5, 2)])
    assert first == again
    row = json.loads(first)["rows"][0]
    assert row["elapsed_ms"] is None
    for key in ("row", "m", "q", "method", "z_order", "x_order", "y_order", "datum",
                "orbit_size", "intersection_order", "expected", "status"):
        assert key in row
    assert set(row["expected"]) >= {"value", "provenance"}


def test_timings_opt_in(row_reports):
    row = json.loads(emit_report([row_reports(1, 5, 2)], timings=True))["rows"][0]
    assert isinstance(row["elapsed_ms"], int)


def test_cap_downgrades_to_arithmetic():
    rep = verify_row(1, 5, 2, cap=50)
    assert rep.status == "arithmetic-only"
    assert rep.method == "arithmetic"
    assert "downgraded" in rep.notice


def test_swap_control():
    built = verify.build_instance(3, 5, 2)
    assert verify.swap_absence_check(5, 2, built=built)
    assert verify.swap_reached_in_z(5, 2, built=built)


def test_sections_cover_all_rows(row_reports):
    doc = json.loads(emit_report([row_reports(11), row_reports(2, 5, 2)]))
    assert [s["row"] for s in doc["sections"]] == list(range(1, 12))
    assert doc["sections"][10]["statuses"] == ["arithmetic-only"]
    assert doc["sections"][4]["statuses"] == ["not-run"]


def test_text_table(row_reports):
    text = report_table([row_reports(11)])
    assert "arithmetic-only" in text.splitlines()[1]


def test_row4_reading_finding(row_reports):
    rep = row_reports(4, 5, 2)
    (f,) = [f for f in rep.findings if f["kind"] == "reading"]
    assert f["intersection_with_r_d"] == "216"
    assert f["intersection_with_r_e1_plus_f1"] == "432"


def test_row8_extension_record(row_reports):
    ext = row_reports(8, 6, 2).details["extension_needed"]
    assert ext["needed"] == "SU.4"
    assert ext["SU"] < ext["SU.4"] == 2080


@pytest.mark.parametrize("m,q", [(2, 4), (3, 4), (2, 3)])
def test_nonsingular_line_count(m, q):
    from omegaminus.forms import minus_standard_space
    from omegaminus.permgrp import ambient

    space = minus_standard_space(m, q)
    lines = verify.nonsingular_lines(space, ambient(space.spec, space.dim))
    assert lines.size == q ** (m - 1) * (q ** m + 1)
    assert (space.Q_of_ints(lines) != 0).all()


def test_row7_orbit_is_every_nonsingular_line(row_reports):
    rep = row_reports(7, 4, 4)
    assert rep.checks["orbit_is_full_value_set"]
    assert "z_order_source" not in rep.details
