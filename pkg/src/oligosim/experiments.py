"""Seed ensembles, gamma grid sweeps and calibration against a target excess."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from oligosim.engine import SimConfig, global_excess
from oligosim.rng import derive_seed

log = logging.getLogger(__name__)

DEFAULT_GRID = tuple(round(0.1 * i, 1) for i in range(11))


class CalibrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """A (gamma_one x gamma_two) grid, each cell run over ``replicates`` seeds.

    Replicate ``r`` of cell ``(i, j)`` uses ``derive_seed(base.seed, (i, j), r)``
    so appending to either grid or the replicate count keeps existing streams.
    """

    base: SimConfig
    gamma_one: tuple[float, ...] = DEFAULT_GRID
    gamma_two: tuple[float, ...] = DEFAULT_GRID
    replicates: int = 1000

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma_one", tuple(self.gamma_one))
        object.__setattr__(self, "gamma_two", tuple(self.gamma_two))
        if not self.gamma_one or not self.gamma_two:
            raise ValueError("gamma grids must be non-empty")
        if self.replicates < 1:
            raise ValueError(f"replicates must be at least 1, got {self.replicates}")
        if any(g < 0.0 for g in self.gamma_one + self.gamma_two):
            raise ValueError("gamma grid values must be non-negative")


@dataclass(frozen=True)
class SweepCell:
    gamma_one: float
    gamma_two: float
    runs: int
    mean: float
    median: float
    stddev: float
    fraction_positive: float


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    cells: tuple[SweepCell, ...]

    def cell(self, gamma_one: float, gamma_two: float) -> SweepCell:
        for c in self.cells:
            if c.gamma_one == gamma_one and c.gamma_two == gamma_two:
                return c
        raise KeyError((gamma_one, gamma_two))


@dataclass(frozen=True)
class Calibration:
    gamma_one: float
    gamma_two: float
    median: float
    fraction_positive: float
    target: float


def _cell_values(base: SimConfig, i: int, j: int, gamma_one: float, gamma_two: float, replicates: int) -> np.ndarray:
    config = base.with_gammas(gamma_one, gamma_two)
    values = np.empty(replicates)
    for r in range(replicates):
        seed = derive_seed(base.seed, (i, j), r)
        values[r] = global_excess(replace(config, seed=seed))
    return values


def _summarise(gamma_one: float, gamma_two: float, values: np.ndarray) -> SweepCell:
    return SweepCell(
        gamma_one=gamma_one,
        gamma_two=gamma_two,
        runs=len(values),
        mean=float(np.mean(values)),
        median=float(np.median(values)),
        stddev=float(np.std(values)),
        fraction_positive=float(np.count_nonzero(values > 0.0)) / len(values),
    )


def _run_cell(args: tuple) -> SweepCell:
    base, i, j, g1, g2, replicates = args
    return _summarise(g1, g2, _cell_values(base, i, j, g1, g2, replicates))


def sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Run every (gamma_one, gamma_two, replicate) combination of ``spec``.

    Cells come back in row-major order (gamma_one outer) regardless of
    ``workers``; the result depends only on ``spec``.
    """
    jobs = [
        (spec.base, i, j, g1, g2, spec.replicates)
        for i, g1 in enumerate(spec.gamma_one)
        for j, g2 in enumerate(spec.gamma_two)
    ]
    log.info("sweeping %d cells x %d replicates", len(jobs), spec.replicates)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_run_cell, jobs))
    else:
        cells = [_run_cell(job) for job in jobs]
    return SweepResult(spec=spec, cells=tuple(cells))


def calibrate(
    target: float,
    spec: SweepSpec,
    result: Optional[SweepResult] = None,
    workers: int = 1,
) -> Calibration:
    """Pick the grid cell whose median global excess is closest to ``target``.

    Only cells where at least half the runs end in excess supply are
    eligible. Ties go to the smaller gamma_one, then the smaller gamma_two.
    """
    if not target > 0.0:
        raise ValueError(f"target must be positive, got {target}")
    if len(spec.gamma_one) < 3 or len(spec.gamma_two) < 3:
        raise ValueError("calibration needs at least a 3x3 grid")
    if result is None:
        result = sweep(spec, workers=workers)
    eligible = [c for c in result.cells if c.fraction_positive >= 0.5]
    if not eligible:
        raise CalibrationError("no grid cell produces excess supply in at least half of its runs")
    best = min(eligible, key=lambda c: (abs(c.median - target), c.gamma_one, c.gamma_two))
    log.info("calibrated gamma_one=%s gamma_two=%s median=%.9g", best.gamma_one, best.gamma_two, best.median)
    return Calibration(
        gamma_one=best.gamma_one,
        gamma_two=best.gamma_two,
        median=best.median,
        fraction_positive=best.fraction_positive,
        target=target,
    )


def ensemble(config: SimConfig, seeds: Sequence[int]) -> np.ndarray:
    """Global excess of ``config`` for each seed in ``seeds``."""
    return np.array([global_excess(replace(config, seed=s)) for s in seeds])
