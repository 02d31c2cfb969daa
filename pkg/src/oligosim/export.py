"""CSV, JSON and SVG emission for runs and sweeps.

Floats are written with 9 significant digits, integers verbatim, ``\\n``
line endings; output bytes depend only on the run.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Union

from oligosim import svg
from oligosim.config import config_to_dict
from oligosim.engine import RunResult
from oligosim.experiments import SweepResult
from oligosim.rng import PRNG_ID

SWEEP_COLUMNS = ("gamma_one", "gamma_two", "runs", "mean", "median", "stddev", "fraction_positive")
CHART_FILES = ("graph1_prices.svg", "graph2_costs.svg", "graph3_production.svg", "graph4_excess.svg")


def fmt(value: Union[int, float]) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans are not numeric output")
    if isinstance(value, int):
        return str(value)
    return format(value, ".9g")


def _round(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _csv(rows: Iterable[Iterable[str]]) -> str:
    return "".join(",".join(row) + "\n" for row in rows)


def run_header(n_firms: int) -> list[str]:
    header = ["t", "p1", "p2"]
    for i in range(1, n_firms + 1):
        header += [f"cost_{i}", f"y_{i}", f"sales_{i}", f"excess_{i}", f"buffer_{i}"]
    return header + ["total_supply", "total_excess", "unmet_demand"]


def run_csv(result: RunResult) -> str:
    rows = [run_header(len(result.config.firms))]
    for r in result.records:
        row = [fmt(r.t), fmt(r.prices.p1), fmt(r.prices.p2)]
        for i in range(len(r.costs)):
            row += [fmt(r.costs[i]), fmt(r.productions[i]), fmt(r.sales[i]), fmt(r.excess[i]), fmt(r.buffers[i])]
        row += [fmt(r.total_supply), fmt(r.total_excess), fmt(r.unmet_demand)]
        rows.append(row)
    return _csv(rows)


def summary(result: RunResult) -> dict[str, Any]:
    return _round(
        {
            "config": config_to_dict(result.config),
            "seed": result.config.seed,
            "prng": PRNG_ID,
            "horizon": result.config.horizon,
            "global_excess": result.global_excess,
            "cumulative_excess": list(result.cumulative_excess),
            "final_buffers": list(result.final_buffers),
        }
    )


def summary_json(result: RunResult) -> str:
    return json.dumps(summary(result), indent=2) + "\n"


def sweep_csv(result: SweepResult) -> str:
    rows = [list(SWEEP_COLUMNS)]
    for c in result.cells:
        rows.append([fmt(getattr(c, col)) for col in SWEEP_COLUMNS])
    return _csv(rows)


def charts(result: RunResult) -> dict[str, str]:
    """The four figures keyed by file name."""
    ts = [r.t for r in result.records]
    n = len(result.config.firms)
    labels = [f"Firm {i + 1} (c={f.c:g})" for i, f in enumerate(result.config.firms)]
    return {
        "graph1_prices.svg": svg.line_chart(
            "Commodity prices",
            ts,
            {"Capital (p1)": [r.prices.p1 for r in result.records], "Labor (p2)": [r.prices.p2 for r in result.records]},
        ),
        "graph2_costs.svg": svg.line_chart(
            "Production costs", ts, {labels[i]: [r.costs[i] for r in result.records] for i in range(n)}
        ),
        "graph3_production.svg": svg.line_chart(
            "Production amounts", ts, {labels[i]: [r.productions[i] for r in result.records] for i in range(n)}
        ),
        "graph4_excess.svg": svg.line_chart(
            "Excess of supply", ts, {"Total excess": [r.total_excess for r in result.records]}
        ),
    }


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_run(result: RunResult, out_dir: Union[str, Path]) -> list[Path]:
    """Write run.csv, summary.json and the four charts into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {"run.csv": run_csv(result), "summary.json": summary_json(result), **charts(result)}
    written = []
    for name, text in files.items():
        _write(out / name, text)
        written.append(out / name)
    return written


def write_sweep(result: SweepResult, path: Union[str, Path]) -> None:
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    _write(path, sweep_csv(result))
