import csv
import io
import json

import pytest

from mxplus1 import (Cycle, DensitySeries, T3, count_window, density_series,
                     find_cycles, to_csv, to_json, to_plot_data)
from mxplus1.report import CSV_HEADER, format_float


def test_format_float_cases():
    assert format_float(0.0625) == "6.25000000e-2"
    assert format_float(0.07421875) == "7.42187500e-2"
    assert format_float(0.9375) == "0.937500000"
    assert format_float(1.0) == "1.00000000"
    assert format_float(0.0) == "0.00000000"
    assert format_float(0.1) == "0.100000000"
    assert format_float(1.0837e-17) == "1.08370000e-17"


def test_csv_golden_row_k10():
    series = density_series(T3, 10, 10)
    lines = to_csv(series).splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[-1] == "10,64,1024,12,6.25000000e-2,7.42187500e-2,0.937500000"


def test_csv_empty_series_is_header_only():
    assert to_csv(DensitySeries(m=3, points=[])) == CSV_HEADER + "\n"


def test_csv_k20_exact_count():
    series = density_series(T3, 20, 20)
    row = to_csv(series).splitlines()[-1]
    assert row.split(",")[1] == "27328"


def test_csv_roundtrip_exact_fields(series3_full):
    text = to_csv(series3_full)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == len(series3_full.points)
    for row, pt in zip(rows, series3_full.points):
        assert int(row["k"]) == pt.k
        assert int(row["N"]) == pt.N
        assert int(row["pow2k"]) == 1 << pt.k
        assert int(row["shaded"]) == pt.shaded_count


def test_json_density_point():
    series = density_series(T3, 0)
    rec = json.loads(to_json(series).splitlines()[0])
    assert rec == {"k": 0, "N": "1", "pow2k": "1", "shaded": "0",
                   "F_new": 1.0, "F_terras": 1.0, "G": 0.0,
                   "m": 3, "variant": "both"}


def test_json_cycle():
    cycles = [c for c in find_cycles(T3, 4) if c.values == (1, 2)]
    rec = json.loads(to_json(cycles, m=3))
    assert rec == {"m": 3, "length": 2, "values": ["1", "2"]}


def test_json_oracle():
    rep = count_window(T3, 5)
    rec = json.loads(to_json([rep]))
    assert rec["table_N"] == "4"
    assert rec["count_coefficient_gt"] == "4"
    assert rec["count_coefficient_ge"] == "6"
    assert rec["count_actual_gt"] == "5"
    assert rec["discrepancy"] == 1
    assert (rec["m"], rec["k"], rec["offset"]) == (3, 5, 1)


def test_json_big_counts_stay_strings(series3_full):
    text = to_json(series3_full)
    last = json.loads(text.splitlines()[-1])
    assert isinstance(last["N"], str)
    assert int(last["N"]) == series3_full.points[-1].N
    assert int(last["pow2k"]) == 1 << 900


def test_json_requires_m_for_points_and_cycles():
    pt = density_series(T3, 0).points[0]
    with pytest.raises(ValueError):
        to_json([pt])
    with pytest.raises(ValueError):
        to_json([Cycle((1, 2))])
    with pytest.raises(TypeError):
        to_json([object()], m=3)


def test_plot_data(series3_full):
    lines = to_plot_data(series3_full).splitlines()
    assert lines[0].startswith("#")
    body = [ln for ln in lines if not ln.startswith("#")]
    assert body[0] == "0 0"
    k10 = next(ln for ln in body if ln.startswith("10 "))
    assert k10.startswith("10 -1.2041")
    k900 = next(ln for ln in body if ln.startswith("900 "))
    assert k900.startswith("900 -16.965")


def test_lf_endings_everywhere():
    series = density_series(T3, 5)
    for text in (to_csv(series), to_json(series), to_plot_data(series)):
        assert "\r" not in text
        assert text.endswith("\n")
