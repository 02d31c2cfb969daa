import json
import xml.etree.ElementTree as ET

import pytest

from oligosim import export
from oligosim.engine import SimConfig, run, paper_firms
from oligosim.economics import FirmParams

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def result():
    return run(SimConfig(seed=17))


def test_fmt():
    assert export.fmt(3) == "3"
    assert export.fmt(2**64 - 1) == "18446744073709551615"
    assert export.fmt(1 / 3) == "0.333333333"
    assert export.fmt(0.0) == "0"
    assert export.fmt(1e-12) == "1e-12"
    with pytest.raises(TypeError):
        export.fmt(True)


def test_csv_schema(result):
    lines = export.run_csv(result).split("\n")
    assert lines[-1] == ""
    header = lines[0].split(",")
    assert header[:8] == ["t", "p1", "p2", "cost_1", "y_1", "sales_1", "excess_1", "buffer_1"]
    assert header[-3:] == ["total_supply", "total_excess", "unmet_demand"]
    assert len(header) == 3 + 5 * 4 + 3
    assert len(lines) == 30 + 2
    assert all(len(line.split(",")) == len(header) for line in lines[1:-1])


def test_csv_nine_significant_digits(result):
    row = export.run_csv(result).split("\n")[1].split(",")
    for cell in row[1:]:
        digits = cell.split("e")[0].replace("-", "").replace(".", "").lstrip("0")
        assert len(digits) <= 9
    assert float(row[1]) == pytest.approx(result.records[0].prices.p1, rel=1e-8)


def test_summary(result):
    doc = json.loads(export.summary_json(result))
    assert doc["seed"] == 17
    assert doc["prng"] == "pcg64+seedsequence/u53"
    assert doc["global_excess"] == pytest.approx(result.global_excess, rel=1e-8)
    assert len(doc["final_buffers"]) == 4
    assert doc["config"]["firms"][0] == {"c": 0.2, "d": 0.8, "gamma_one": 0.7, "gamma_two": 0.6, "initial_buffer": 1.0}


@pytest.mark.parametrize(
    "name, caption, lines",
    [
        ("graph1_prices.svg", "Commodity prices", 2),
        ("graph2_costs.svg", "Production costs", 4),
        ("graph3_production.svg", "Production amounts", 4),
        ("graph4_excess.svg", "Excess of supply", 1),
    ],
)
def test_charts(result, name, caption, lines):
    text = export.charts(result)[name]
    root = ET.fromstring(text)
    polylines = root.findall(f"{SVG}polyline")
    assert len(polylines) == lines
    assert all(len(p.get("points").split()) == 30 for p in polylines)
    assert caption in [t.text for t in root.iter(f"{SVG}text")]
    assert "href" not in text and "<image" not in text and "<script" not in text


def test_chart_handles_single_interval_and_flat_series():
    result = run(SimConfig(horizon=1, firms=paper_firms(0.0, 0.0)))
    for text in export.charts(result).values():
        ET.fromstring(text)


def test_chart_for_single_firm():
    result = run(SimConfig(firms=(FirmParams(0.5, 0.5, 0.5, 0.1),)))
    root = ET.fromstring(export.charts(result)["graph3_production.svg"])
    assert len(root.findall(f"{SVG}polyline")) == 1


def test_write_run(tmp_path, result):
    written = export.write_run(result, tmp_path / "nested" / "out")
    assert sorted(p.name for p in written) == sorted(["run.csv", "summary.json", *export.CHART_FILES])
    assert b"\r\n" not in (tmp_path / "nested" / "out" / "run.csv").read_bytes()
